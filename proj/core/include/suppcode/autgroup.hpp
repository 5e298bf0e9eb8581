#ifndef SUPPCODE_AUTGROUP_HPP
#define SUPPCODE_AUTGROUP_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "suppcode/construct.hpp"
#include "suppcode/coset.hpp"
#include "suppcode/matrix.hpp"

namespace suppcode {

/// Automorphism acting on the syndrome side: s -> mat * frob^k(s), with
/// frob the digit-wise Frobenius a -> a^p (k = 0 for plain GL elements).
/// A map whose induced action permutes the code's column point set (with
/// scalars) is an automorphism of the code, because each column relation
/// is carried to a column relation and syndromes transform by mat itself.
struct SyndromeMap {
  Matrix mat;
  int frob = 0;
  std::string provenance;
};

/// Coordinate action recovered from a syndrome map: column i goes to column
/// perm[i] with scalar scale[i], i.e. mat * h_i = scale[i] * h_perm[i].
struct MonomialAction {
  std::vector<int> perm;
  std::vector<int> scale;
};

struct InducedActionResult {
  std::optional<MonomialAction> action;  // present iff the map stabilizes the set
  long long violating_point = -1;        // first point mapped outside the set
};

InducedActionResult induced_column_action(const SyndromeMap& map, const PointSet& pts);

/// Apply a syndrome map to a digit vector.
std::vector<int> apply_syndrome_map(const SyndromeMap& map, std::span<const int> digits);

/// Image codeword under the coordinate action: y[perm[i]] = scale[i] * x[i].
std::vector<int> apply_monomial(const Field& f, const MonomialAction& act,
                                std::span<const int> x);

/// The dual monomial map D^{-1}P applied to the columns of pcm.
Matrix apply_dual_monomial(const Matrix& pcm, const MonomialAction& act);

/// Row space of pcm is preserved by the dual monomial map (checked by rank
/// of the stacked matrix).
bool dual_action_preserves_rowspace(const Matrix& pcm, const MonomialAction& act);

/// Generators of GL(k, q): the transvections I + E_ij plus, for q > 2, the
/// diagonal with one primitive entry. Empty for k = 1, q = 2.
std::vector<Matrix> gl_generators(FieldPtr field, int k);

/// Block upper-triangular generators of the group stabilizing the embedded
/// subcode family: GL(u) and GL(m-u) blocks plus the elementary off-diagonal
/// maps (one entry per additive basis element of the field). Every emitted
/// generator is verified against the family's side-B point set.
std::vector<SyndromeMap> hkmn_generators(FieldPtr field, int m, int u);

/// The scalar symmetry s -> lambda s (primitive lambda); empty for q = 2.
std::optional<SyndromeMap> scalar_map(FieldPtr field, int m);

/// Digit-wise Frobenius, when it stabilizes the point set (prime fields have
/// no nontrivial Frobenius).
std::optional<SyndromeMap> frobenius_map(const PointSet& pts);

struct StabilizerResult {
  std::vector<SyndromeMap> generators;
  bool exhaustive = true;
  long long nodes = 0;
};

/// Backtracking search for every GL(m, q) element stabilizing the partition
/// {pts, complement} of the projective points, modulo global scalars (the
/// first basis image is pinned to its canonical representative; the scalar
/// maps regenerate the rest). Basis points are drawn from the smaller class
/// when it has full rank, otherwise from a mixed basis. At depth t every
/// point inside the span of the first t basis points has a determined image,
/// which must stay in its class; completed leaves are re-verified with
/// induced_column_action before acceptance.
StabilizerResult stabilizer_search(const PointSet& pts, long long budget);

struct OrbitPartition {
  long long orbit_count = 0;
  std::map<int, long long> per_weight;  // coset weight -> orbit count
};

/// Union-find closure of the syndrome space under the generators. Every
/// generator is re-verified against the point set first; orbits never cross
/// coset-weight classes (automorphisms preserve distance to the code).
OrbitPartition orbits(std::span<const SyndromeMap> generators, const CosetTable& table,
                      const PointSet& pts);

enum class CtStatus { certified_yes, certified_no, unknown };

struct CtOptions {
  long long budget = 100'000'000;
  enum class Generators { automatic, hkmn, search } generators = Generators::automatic;
  bool add_scalars = true;
  bool add_frobenius = true;
  bool keep_generators = false;  // retain the generator list in the report
};

struct CtReport {
  CtStatus status = CtStatus::unknown;
  long long orbit_count = 0;
  std::map<int, long long> orbits_per_weight;
  int rho = 0;
  std::string provenance;        // comma-joined generator sources
  bool exhaustive = false;       // stabilizer search completed within budget
  bool caveat_nonprime_q = false;
  long long nodes = 0;
  long long generator_count = 0;
  std::vector<SyndromeMap> generators;  // filled when keep_generators is set
};

/// Complete-transitivity certificate for the code with the given point set
/// and coset table. certified_yes (orbit count == rho+1) is sound for any
/// generator subgroup; certified_no needs an exhausted search, a prime field
/// and a full-rank point set, since only then does the searched group cover
/// the full automorphism group acting on cosets.
CtReport certify_ct(const PointSet& pts, const CosetTable& table, const CtOptions& opts = {});

/// Pair convenience: certifies one side, using the family generators when the
/// pair carries a block layout and the options allow it.
CtReport certify_ct(const SupplementaryPair& pair, bool side_b, const CosetTable& table,
                    const CtOptions& opts = {});

/// Reinterpret stabilizers of side A on side B (they stabilize the
/// complement automatically); each map is re-verified, a failure here is a
/// bug and throws std::logic_error.
std::vector<SyndromeMap> subgroup_embed(std::span<const SyndromeMap> generators_for_a,
                                        const SupplementaryPair& pair);

}  // namespace suppcode

#endif
