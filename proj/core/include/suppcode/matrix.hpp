#ifndef SUPPCODE_MATRIX_HPP
#define SUPPCODE_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "suppcode/field.hpp"

namespace suppcode {

struct Echelon;

/// Dense matrix over GF(q), row-major, entries stored as element codes.
/// Immutable in spirit: the analysis layers never mutate a matrix they did
/// not just build. Elimination is exact; there are no pivoting concerns.
class Matrix {
 public:
  Matrix(FieldPtr field, int rows, int cols);
  static Matrix identity(FieldPtr field, int n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int v) { a_[static_cast<size_t>(r) * cols_ + c] = static_cast<uint16_t>(v); }

  std::vector<int> row(int r) const;
  std::vector<int> col(int c) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const;

  /// M x for a column vector x of length cols().
  std::vector<int> mul_vec(std::span<const int> x) const;

  /// Submatrix formed by the given columns, in the given order.
  Matrix select_cols(std::span<const int> idx) const;

  /// Rows of this stacked on top of rows of other (same width).
  Matrix stack(const Matrix& other) const;

  Echelon echelon() const;

  int rank() const;

  /// Rows form a basis of the right null space; rows() == cols() - rank().
  Matrix kernel_basis() const;

  /// Inverse of a square nonsingular matrix; throws std::invalid_argument otherwise.
  Matrix inverse() const;

  bool is_zero() const;

 private:
  FieldPtr field_;
  int rows_, cols_;
  std::vector<uint16_t> a_;
};

struct Echelon {
  Matrix reduced;           // reduced row echelon form
  int rank;
  std::vector<int> pivots;  // pivot column per nonzero row
};

}  // namespace suppcode

#endif
