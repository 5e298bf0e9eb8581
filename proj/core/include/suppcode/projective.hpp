#ifndef SUPPCODE_PROJECTIVE_HPP
#define SUPPCODE_PROJECTIVE_HPP

#include <span>
#include <vector>

#include "suppcode/field.hpp"

namespace suppcode {

/// Canonical points of PG(m-1, q).
///
/// The canonical representative of a projective point is the unique scalar
/// multiple whose first nonzero coordinate (lowest row index) is 1. Points
/// are indexed 0..(q^m-1)/(q-1)-1 in increasing order of the representative
/// read as a base-q integer with row 0 most significant. The same base-q
/// encoding, with the same row order, is used for syndromes throughout.

/// (q^m - 1) / (q - 1); throws std::invalid_argument if q^m does not fit
/// in a long long.
long long projective_count(int q, int m);

struct NormalizedPoint {
  long long index;  // canonical point index
  int scale;        // v == scale * representative
};

/// Canonicalize a nonzero vector; throws std::invalid_argument on zero input.
NormalizedPoint normalize_point(const Field& f, std::span<const int> v);

/// Representative vector of the point with the given index (length m).
std::vector<int> point_vector(const Field& f, int m, long long index);

/// Index of an arbitrary nonzero vector's projective class.
long long point_index(const Field& f, std::span<const int> v);

/// Base-q integer value of a digit vector, row 0 most significant.
long long vector_value(int q, std::span<const int> v);

}  // namespace suppcode

#endif
