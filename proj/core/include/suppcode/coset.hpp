#ifndef SUPPCODE_COSET_HPP
#define SUPPCODE_COSET_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "suppcode/code.hpp"
#include "suppcode/matrix.hpp"

namespace suppcode {

/// H x^T encoded as a base-q integer, row 0 most significant.
long long syndrome_of(const Matrix& pcm, std::span<const int> x);

/// Coset-leader weight of every syndrome, computed by breadth-first layering
/// over the syndrome space: layer 0 is {0}, layer l+1 is everything reachable
/// from layer l by adding a scaled column. For a linear code the layer of a
/// vector's syndrome equals its distance to the code, so this table carries
/// the covering radius, the subconstituent census and the coset leaders.
///
/// Syndromes outside the column span get weight -1 (no coset maps there;
/// this happens exactly when rank(pcm) < rows(pcm)).
struct CosetTable {
  FieldPtr field;
  int rows = 0;        // syndrome digits
  int n = 0;           // code length
  long long size = 0;  // q^rows
  std::vector<int16_t> weights;
  std::vector<std::pair<int32_t, uint16_t>> back;  // first-reach (column, scalar)
  std::map<int, long long> census;                 // weight -> #syndromes
  long long unreachable = 0;
  int rho = 0;

  /// Reconstruct a coset leader (a vector whose weight is weights[syn]) by
  /// walking the BFS back-pointers. pcm must be the matrix the table was
  /// built from.
  std::vector<int> leader(const Matrix& pcm, long long syn) const;

  std::vector<int> syndrome_digits(long long syn) const;
  long long syndrome_value(std::span<const int> digits) const;
  long long negate_syndrome(long long syn) const;
};

/// Throws budget_error when q^rows(pcm) > 10^7.
CosetTable coset_weights(const Matrix& pcm);

/// |C(i)| = census[i] * q^k, as exact big integers.
std::map<int, boost::multiprecision::cpp_int> subconstituent_sizes(const CosetTable& table,
                                                                   long long k);

struct NeighborProfile {
  long long c = 0;  // neighbors one layer down
  long long a = 0;  // neighbors in the same layer
  long long b = 0;  // neighbors one layer up
  bool operator==(const NeighborProfile&) const = default;
};

/// Profile of one syndrome: where the (q-1)*n single-coordinate perturbations
/// of any coset member land. Shared by every vector of the coset.
NeighborProfile neighbor_profile(const Matrix& pcm, const CosetTable& table, long long syn);

struct IntersectionArray {
  std::vector<long long> b;  // b_0 .. b_{rho-1}
  std::vector<long long> c;  // c_1 .. c_rho
  std::vector<long long> a;  // a_0 .. a_rho, derived
  bool operator==(const IntersectionArray&) const = default;
};

struct CrWitness {
  int weight = 0;
  long long syn1 = 0, syn2 = 0;
  NeighborProfile p1, p2;
};

struct CrResult {
  bool is_cr = false;
  std::optional<IntersectionArray> ia;  // present iff is_cr
  std::optional<CrWitness> witness;     // present iff !is_cr
};

/// Complete-regularity certificate: all syndromes of equal coset weight must
/// share one neighbor profile. Checked at syndrome level; two vectors in one
/// coset always have the same profile because a neighbor's distance to the
/// code depends only on its syndrome.
CrResult complete_regularity(const Matrix& pcm, const CosetTable& table);

/// Codeword counts per weight w <= wmax (weight 0 counts the zero word),
/// by enumeration of column subsets with dependency solving. The optional
/// callback receives each support with its codeword count.
/// Throws budget_error past ~2*10^9 elementary steps.
std::map<int, long long> low_weight_codewords(
    const Matrix& pcm, int wmax,
    const std::function<void(const std::vector<int>&, long long)>& on_support = {});

struct UpWitness {
  int weight = 0;  // e or e+1 class
  long long syn1 = 0, syn2 = 0;
  long long count1 = 0, count2 = 0;
};

struct UpResult {
  enum class Status { uniform, not_uniform, not_applicable };
  Status status = Status::not_applicable;
  std::optional<UpParams> params;
  std::optional<UpWitness> witness;
};

/// Uniformly-packed parameters. Requires rho == e+1; counts, for every coset
/// of weight e and e+1, the codewords at distance exactly e+1 from a coset
/// member. B_{x,e+1} equals the number of weight-(e+1) vectors whose syndrome
/// is the negated coset syndrome, so it is constant on cosets and one tally
/// pass over the weight-(e+1) sphere covers all cosets. Vectors closer than
/// distance e to the code are not evaluated.
UpResult up_params(const Matrix& pcm, const CosetTable& table, int e);

/// b_i * |C(i)| = c_{i+1} * |C(i+1)| for i < rho, checked at census level
/// with exact integers.
bool graph_identity_check(const CosetTable& table, const IntersectionArray& ia);

}  // namespace suppcode

#endif
