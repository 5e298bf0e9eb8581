#ifndef SUPPCODE_CONSTRUCT_HPP
#define SUPPCODE_CONSTRUCT_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "suppcode/coset.hpp"
#include "suppcode/matrix.hpp"
#include "suppcode/projective.hpp"

namespace suppcode {

/// A set of canonical points of PG(m-1, q), kept sorted by index.
struct PointSet {
  FieldPtr field;
  int m = 0;
  std::vector<long long> indices;

  long long count() const { return static_cast<long long>(indices.size()); }
  bool contains(long long index) const;
  /// Position of a point inside the sorted index list, -1 if absent.
  int position(long long index) const;
  /// m x count matrix of canonical representatives in index order.
  Matrix to_pcm() const;
  int rank() const;
};

/// Parity-check matrix of the q-ary Hamming code of redundancy m: one
/// canonical representative per projective point, in index order.
/// Requires m >= 2 and q^m <= 10^7.
Matrix hamming_pcm(FieldPtr field, int m);

/// Block structure of the fully expanded Hamming matrix for the embedded
/// subcode of redundancy u: block 0 holds the points with zero last m-u
/// coordinates, block i (1 <= i < q^(m-u)) the points whose last m-u
/// coordinates form the vector with base-q value i, and the final block the
/// points with zero first u coordinates.
struct BlockLayout {
  FieldPtr field;
  int m = 0, u = 0;

  long long n_u() const;           // (q^u - 1)/(q - 1)
  long long block_count() const;   // q^(m-u) + 1
  long long block_of_point(long long point_index) const;
  /// Point indices in block-major order: block 0 first, each block's points
  /// by ascending top part, final block last.
  std::vector<long long> form_point_order() const;
  /// The Hamming matrix with columns in form_point_order().
  Matrix form_matrix() const;
};

/// A partition of the projective points into the column sets of two codes.
/// Column matrices use canonical representatives in index order.
struct SupplementaryPair {
  FieldPtr field;
  int m = 0;
  PointSet set_a, set_b;
  Matrix pcm_a, pcm_b;
  std::string preset_name;                    // empty when hand built
  std::optional<BlockLayout> layout;          // present for the embedded-Hamming family
  std::string fixture_hash;                   // hash of the source fixture matrix, if any
  std::vector<NormalizedPoint> embed_trace;   // per input column of an embedded pcm
};

/// Build the pair from an explicit index set for side A.
SupplementaryPair partition(FieldPtr field, int m, std::span<const long long> indices_a);

/// Swap the two sides.
SupplementaryPair supplementary(const SupplementaryPair& pair);

/// The embedded-Hamming family: side A is the subcode spanned by the first u
/// rows (points with zero last m-u coordinates), side B everything else.
/// Requires 1 <= u <= m-1.
SupplementaryPair embedded_hamming_pair(FieldPtr field, int m, int u);

struct EmbeddedColumns {
  PointSet points;
  std::vector<NormalizedPoint> trace;  // per input column: point index + scalar
};

/// Zero-pad a raw parity-check matrix to ambient_m rows and normalize its
/// columns into a point set. The input code is monomially equivalent to the
/// code of the canonical column matrix; the per-column scalars are returned.
/// Throws std::invalid_argument on zero or projectively dependent columns,
/// naming the offending column indices.
EmbeddedColumns embed_columns(const Matrix& raw, int ambient_m);

/// Named constructions. Accepted names: "golay3", "golay3-punctured",
/// "golay3-extended", "binomial-7-4", and "buM" (which needs q, m, u).
SupplementaryPair make_preset(const std::string& name, int q = 0, int m = 0, int u = 0);

/// The shipped 5x11 ternary Golay parity-check fixture (rows span the dual
/// of the [11,6,5] code built cyclically); validated at load: rank 5 and
/// minimum distance exactly 5.
Matrix ternary_golay_pcm();

/// 7x35 binary matrix whose columns are the weight-4 vectors of length 7 in
/// ascending value order. The rows sum to zero.
Matrix binomial_7_4_pcm();

/// Predicted intersection arrays of a covering-radius-2 supplementary pair
/// from the lengths and the measured b_1 of side A.
/// Throws std::invalid_argument when c_2 = n_A b_1 / n_B is not an integer.
struct PredictedIas {
  IntersectionArray ia_a, ia_b;
};
PredictedIas predict_ias(int q, long long n_a, long long n_b, long long b1_of_a);

/// For each coordinate of the secondary side, the number of weight-3
/// codewords of the ambient Hamming code supported on that coordinate plus
/// two coordinates of the primary side. a_role_is_set_a selects which side
/// plays the primary role.
std::vector<long long> weight3_incidence(const SupplementaryPair& pair, bool a_role_is_set_a);

}  // namespace suppcode

#endif
