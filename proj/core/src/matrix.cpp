#include "suppcode/matrix.hpp"

#include <stdexcept>

namespace suppcode {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged rows in matrix literal");
    for (int j = 0; j < c; ++j) {
      int v = rows[i][j];
      if (v < 0 || v >= field->q()) throw std::invalid_argument("element code out of range");
      m.set(i, j, v);
    }
  }
  return m;
}

std::vector<int> Matrix::row(int r) const {
  std::vector<int> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
  return out;
}

std::vector<int> Matrix::col(int c) const {
  std::vector<int> out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || !field_->same(*rhs.field_))
    throw std::invalid_argument("matrix product shape/field mismatch");
  const Field& f = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const int b = rhs(k, j);
        if (b == 0) continue;
        out.set(i, j, f.add(out(i, j), f.mul(aik, b)));
      }
    }
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_->same(*rhs.field_) && a_ == rhs.a_;
}

std::vector<int> Matrix::mul_vec(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("vector length does not match column count");
  const Field& f = *field_;
  std::vector<int> out(rows_, 0);
  for (int j = 0; j < cols_; ++j) {
    const int xj = x[j];
    if (xj == 0) continue;
    for (int i = 0; i < rows_; ++i) {
      const int h = (*this)(i, j);
      if (h == 0) continue;
      out[i] = f.add(out[i], f.mul(xj, h));
    }
  }
  return out;
}

Matrix Matrix::select_cols(std::span<const int> idx) const {
  Matrix out(field_, rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
    if (idx[j] < 0 || idx[j] >= cols_) throw std::invalid_argument("column index out of range");
    for (int i = 0; i < rows_; ++i) out.set(i, j, (*this)(i, idx[j]));
  }
  return out;
}

Matrix Matrix::stack(const Matrix& other) const {
  if (cols_ != other.cols_ || !field_->same(*other.field_))
    throw std::invalid_argument("stack shape/field mismatch");
  Matrix out(field_, rows_ + other.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, (*this)(i, j));
  for (int i = 0; i < other.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(rows_ + i, j, other(i, j));
  return out;
}

Echelon Matrix::echelon() const {
  const Field& f = *field_;
  Echelon e{*this, 0, {}};
  Matrix& m = e.reduced;
  int pr = 0;
  for (int c = 0; c < cols_ && pr < rows_; ++c) {
    int piv = -1;
    for (int r = pr; r < rows_; ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != pr)
      for (int j = 0; j < cols_; ++j) {
        const int tmp = m(pr, j);
        m.set(pr, j, m(piv, j));
        m.set(piv, j, tmp);
      }
    const int scale = f.inv(m(pr, c));
    if (scale != 1)
      for (int j = 0; j < cols_; ++j) m.set(pr, j, f.mul(m(pr, j), scale));
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const int factor = m(r, c);
      if (factor == 0) continue;
      for (int j = 0; j < cols_; ++j)
        m.set(r, j, f.sub(m(r, j), f.mul(factor, m(pr, j))));
    }
    e.pivots.push_back(c);
    ++pr;
  }
  e.rank = pr;
  return e;
}

int Matrix::rank() const { return echelon().rank; }

Matrix Matrix::kernel_basis() const {
  const Field& f = *field_;
  const Echelon e = echelon();
  std::vector<char> is_pivot(cols_, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  Matrix out(field_, cols_ - e.rank, cols_);
  int k = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    out.set(k, c, 1);
    for (int r = 0; r < e.rank; ++r) out.set(k, e.pivots[r], f.neg(e.reduced(r, c)));
    ++k;
  }
  return out;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.set(i, j, (*this)(i, j));
    aug.set(i, cols_ + i, 1);
  }
  const Echelon e = aug.echelon();
  if (e.rank < rows_) throw std::invalid_argument("matrix is singular");
  for (int r = 0; r < rows_; ++r)
    if (e.pivots[r] != r) throw std::invalid_argument("matrix is singular");
  Matrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, e.reduced(i, cols_ + j));
  return out;
}

bool Matrix::is_zero() const {
  for (uint16_t v : a_)
    if (v != 0) return false;
  return true;
}

}  // namespace suppcode
