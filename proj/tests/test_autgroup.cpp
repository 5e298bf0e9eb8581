#include <doctest.h>

#include <random>
#include <set>

#include "suppcode/autgroup.hpp"
#include "suppcode/construct.hpp"
#include "suppcode/coset.hpp"

using namespace suppcode;

namespace {

PointSet full_point_set(FieldPtr f, int m) {
  std::vector<long long> idx(projective_count(f->q(), m));
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<long long>(i);
  return PointSet{f, m, std::move(idx)};
}

long long gl_order(int q, int m) {
  long long order = 1, qm = 1;
  for (int i = 0; i < m; ++i) qm *= q;
  long long qi = 1;
  for (int i = 0; i < m; ++i) {
    order *= qm - qi;
    qi *= q;
  }
  return order;
}

}  // namespace

TEST_CASE("identity induces the identity monomial action") {
  const SupplementaryPair pair = make_preset("buM", 3, 3, 1);
  const SyndromeMap id{Matrix::identity(pair.field, 3), 0, "test"};
  const InducedActionResult res = induced_column_action(id, pair.set_b);
  REQUIRE(res.action.has_value());
  for (size_t i = 0; i < res.action->perm.size(); ++i) {
    CHECK(res.action->perm[i] == static_cast<int>(i));
    CHECK(res.action->scale[i] == 1);
  }
}

TEST_CASE("family generators stabilize the family point sets and have block form") {
  for (auto [q, m, u] : {std::tuple{2, 3, 1}, {3, 3, 2}, {4, 3, 1}}) {
    CAPTURE(q);
    CAPTURE(m);
    CAPTURE(u);
    const SupplementaryPair pair = make_preset("buM", q, m, u);
    const std::vector<SyndromeMap> gens = hkmn_generators(pair.field, m, u);
    CHECK(!gens.empty());
    for (const SyndromeMap& g : gens) {
      CHECK(induced_column_action(g, pair.set_b).action.has_value());
      CHECK(induced_column_action(g, pair.set_a).action.has_value());
      // block upper-triangular: zero bottom-left block
      for (int i = u; i < m; ++i)
        for (int j = 0; j < u; ++j) CHECK(g.mat(i, j) == 0);
    }
  }
}

TEST_CASE("random GL elements rarely stabilize a small point set") {
  const SupplementaryPair pair = make_preset("golay3");
  std::mt19937_64 rng(2024);
  FieldPtr f3 = pair.field;
  int rejected = 0, trials = 0;
  while (trials < 40) {
    Matrix m(f3, 5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m.set(i, j, static_cast<int>(rng() % 3));
    if (m.rank() < 5) continue;
    ++trials;
    const SyndromeMap g{std::move(m), 0, "random"};
    if (!induced_column_action(g, pair.set_a).action) ++rejected;
  }
  CHECK(rejected >= 38);  // the stabilizer has index ~10^7 in GL(5,3)
}

TEST_CASE("full linear group generators give two orbits on Hamming cosets") {
  for (auto [q, m] : {std::pair{2, 3}, {3, 2}}) {
    FieldPtr f = Field::make(q);
    const Matrix h = hamming_pcm(f, m);
    const CosetTable t = coset_weights(h);
    const PointSet all = full_point_set(f, m);
    std::vector<SyndromeMap> gens;
    for (const Matrix& g : gl_generators(f, m)) gens.push_back({g, 0, "gl"});
    if (auto sc = scalar_map(f, m)) gens.push_back(*sc);
    const OrbitPartition orb = orbits(gens, t, all);
    CHECK(orb.orbit_count == 2);
  }
}

TEST_CASE("stabilizer search on the full point set finds all of GL") {
  for (auto [q, m] : {std::pair{2, 2}, {3, 2}}) {
    CAPTURE(q);
    const PointSet all = full_point_set(Field::make(q), m);
    const StabilizerResult sr = stabilizer_search(all, 1'000'000);
    CHECK(sr.exhaustive);
    CHECK(static_cast<long long>(sr.generators.size()) == gl_order(q, m) / (q - 1));
  }
}

TEST_CASE("search results on the family set all have the block pattern") {
  const SupplementaryPair pair = make_preset("buM", 2, 3, 1);
  const StabilizerResult sr = stabilizer_search(pair.set_a, 1'000'000);
  REQUIRE(sr.exhaustive);
  CHECK(!sr.generators.empty());
  for (const SyndromeMap& g : sr.generators)
    for (int i = 1; i < 3; ++i) CHECK(g.mat(i, 0) == 0);
  // and the family generators are rediscovered among them
  const std::vector<SyndromeMap> family = hkmn_generators(pair.field, 3, 1);
  for (const SyndromeMap& f : family) {
    bool found = false;
    for (const SyndromeMap& g : sr.generators) found |= g.mat == f.mat;
    CHECK(found);
  }
}

TEST_CASE("budget exhaustion degrades to a partial, non-exhaustive result") {
  const SupplementaryPair pair = make_preset("golay3");
  const StabilizerResult sr = stabilizer_search(pair.set_a, 5);
  CHECK_FALSE(sr.exhaustive);
}

TEST_CASE("accepted stabilizers are closed under composition") {
  const SupplementaryPair pair = make_preset("buM", 3, 3, 1);
  const StabilizerResult sr = stabilizer_search(pair.set_a, 1'000'000);
  REQUIRE(sr.exhaustive);
  REQUIRE(sr.generators.size() >= 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix& a = sr.generators[rng() % sr.generators.size()].mat;
    const Matrix& b = sr.generators[rng() % sr.generators.size()].mat;
    const SyndromeMap prod{a * b, 0, "composed"};
    CHECK(induced_column_action(prod, pair.set_a).action.has_value());
  }
}

TEST_CASE("dual action preserves the row space; primal action preserves the code") {
  const SupplementaryPair pair = make_preset("buM", 3, 3, 2);
  const Matrix ker = pair.pcm_b.kernel_basis();
  std::vector<SyndromeMap> gens = hkmn_generators(pair.field, 3, 2);
  const StabilizerResult sr = stabilizer_search(pair.set_a, 1'000'000);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10 && !sr.generators.empty(); ++i)
    gens.push_back(sr.generators[rng() % sr.generators.size()]);
  for (const SyndromeMap& g : gens) {
    const InducedActionResult res = induced_column_action(g, pair.set_b);
    REQUIRE(res.action.has_value());
    CHECK(dual_action_preserves_rowspace(pair.pcm_b, *res.action));
    for (int i = 0; i < ker.rows(); ++i) {
      const std::vector<int> image = apply_monomial(*pair.field, *res.action, ker.row(i));
      CHECK(syndrome_of(pair.pcm_b, image) == 0);
    }
  }
}

TEST_CASE("adding generators never increases the orbit count") {
  const SupplementaryPair pair = make_preset("buM", 3, 3, 1);
  const CosetTable t = coset_weights(pair.pcm_b);
  const std::vector<SyndromeMap> gens = hkmn_generators(pair.field, 3, 1);
  std::vector<SyndromeMap> some(gens.begin(), gens.begin() + gens.size() / 2);
  const long long part = orbits(some, t, pair.set_b).orbit_count;
  const long long full = orbits(gens, t, pair.set_b).orbit_count;
  CHECK(full <= part);
}

TEST_CASE("orbits refine coset-weight classes") {
  const SupplementaryPair pair = make_preset("buM", 2, 4, 2);
  const CosetTable t = coset_weights(pair.pcm_b);
  const std::vector<SyndromeMap> gens = hkmn_generators(pair.field, 4, 2);
  const OrbitPartition orb = orbits(gens, t, pair.set_b);
  long long total = 0;
  for (const auto& [w, c] : orb.per_weight) {
    CHECK(c >= 1);
    total += c;
  }
  CHECK(total == orb.orbit_count);
  CHECK(orb.orbit_count >= t.rho + 1);
}

TEST_CASE("identity-only generators leave every syndrome in its own orbit") {
  const SupplementaryPair pair = make_preset("buM", 2, 3, 1);
  const CosetTable t = coset_weights(pair.pcm_b);
  const std::vector<SyndromeMap> gens{{Matrix::identity(pair.field, 3), 0, "id"}};
  CHECK(orbits(gens, t, pair.set_b).orbit_count == t.size - t.unreachable);
}

TEST_CASE("unverified generators are rejected") {
  const SupplementaryPair pair = make_preset("golay3");
  const CosetTable t = coset_weights(pair.pcm_a);
  Matrix bad = Matrix::identity(pair.field, 5);
  bad.set(0, 1, 1);  // a transvection will not stabilize the Golay points
  const std::vector<SyndromeMap> gens{{bad, 0, "bad"}};
  const SyndromeMap probe{bad, 0, "bad"};
  if (!induced_column_action(probe, pair.set_a).action)
    CHECK_THROWS_AS(orbits(gens, t, pair.set_a), std::invalid_argument);
}

TEST_CASE("the family generators alone already yield three orbits") {
  for (auto [q, m, u] : {std::tuple{3, 3, 1}, {2, 4, 2}, {4, 2, 1}}) {
    CAPTURE(q);
    CAPTURE(m);
    CAPTURE(u);
    const SupplementaryPair pair = make_preset("buM", q, m, u);
    const CosetTable t = coset_weights(pair.pcm_b);
    const std::vector<SyndromeMap> gens = hkmn_generators(pair.field, m, u);
    CHECK(orbits(gens, t, pair.set_b).orbit_count == 3);
  }
}

TEST_CASE("family certification: three orbits from family plus scalar generators") {
  for (auto [q, m, u] : {std::tuple{2, 3, 1}, {3, 3, 2}, {4, 2, 1}}) {
    CAPTURE(q);
    CAPTURE(m);
    CAPTURE(u);
    const SupplementaryPair pair = make_preset("buM", q, m, u);
    const CosetTable t = coset_weights(pair.pcm_b);
    CtOptions opts;
    opts.generators = CtOptions::Generators::hkmn;
    opts.add_frobenius = false;
    const CtReport report = certify_ct(pair, true, t, opts);
    CHECK(report.status == CtStatus::certified_yes);
    CHECK(report.orbit_count == 3);
    CHECK(report.rho == 2);
  }
}

TEST_CASE("hamming code is trivially completely transitive") {
  FieldPtr f3 = Field::make(3);
  const Matrix h = hamming_pcm(f3, 3);
  const CosetTable t = coset_weights(h);
  const CtReport report = certify_ct(full_point_set(f3, 3), t, {});
  CHECK(report.status == CtStatus::certified_yes);
  CHECK(report.orbit_count == 2);
}

TEST_CASE("tiny budget yields unknown, not a false negative") {
  const SupplementaryPair pair = make_preset("golay3");
  const CosetTable t = coset_weights(pair.pcm_b);
  CtOptions opts;
  opts.budget = 3;
  const CtReport report = certify_ct(pair, true, t, opts);
  CHECK(report.status == CtStatus::unknown);
  CHECK_FALSE(report.exhaustive);
}

TEST_CASE("a genuinely intransitive code earns certified_no on a prime field") {
  // side A = two points of PG(2,2): the partition stabilizer has order 8,
  // which cannot act transitively on the five weight-1 cosets of side B
  FieldPtr f2 = Field::make(2);
  const SupplementaryPair pair = partition(f2, 3, std::vector<long long>{0, 1});
  const CosetTable t = coset_weights(pair.pcm_b);
  const CtReport report = certify_ct(pair, true, t, {});
  CHECK(report.exhaustive);
  CHECK(report.orbit_count > t.rho + 1);
  CHECK(report.status == CtStatus::certified_no);
}

TEST_CASE("negative verdicts degrade to unknown on non-prime fields") {
  FieldPtr f4 = Field::make(2, 2);
  const SupplementaryPair pair = partition(f4, 2, std::vector<long long>{0, 1});
  const CosetTable t = coset_weights(pair.pcm_b);
  const CtReport report = certify_ct(pair, true, t, {});
  if (report.orbit_count > t.rho + 1) {
    CHECK(report.status == CtStatus::unknown);
    CHECK(report.caveat_nonprime_q);
  } else {
    CHECK(report.status == CtStatus::certified_yes);
  }
}

TEST_CASE("frobenius stabilizes the quaternary family point set") {
  const SupplementaryPair pair = make_preset("buM", 4, 2, 1);
  CHECK(frobenius_map(pair.set_b).has_value());
  CHECK_FALSE(frobenius_map(make_preset("buM", 3, 3, 1).set_b).has_value());
}

TEST_CASE("side-A stabilizers embed as side-B automorphisms") {
  const SupplementaryPair pair = make_preset("buM", 3, 3, 1);
  const StabilizerResult sr = stabilizer_search(pair.set_a, 1'000'000);
  REQUIRE(sr.exhaustive);
  const std::vector<SyndromeMap> embedded = subgroup_embed(sr.generators, pair);
  CHECK(embedded.size() == sr.generators.size());
  for (const SyndromeMap& g : embedded)
    CHECK(induced_column_action(g, pair.set_b).action.has_value());
}

TEST_CASE("every stabilizer of the 11-point set acts on the 110-point complement") {
  const SupplementaryPair pair = make_preset("golay3");
  const StabilizerResult sr = stabilizer_search(pair.set_a, 100'000'000);
  REQUIRE(sr.exhaustive);
  CHECK(sr.generators.size() == 7920);  // the point stabilizer modulo scalars
  const std::vector<SyndromeMap> embedded = subgroup_embed(sr.generators, pair);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const SyndromeMap& g = embedded[rng() % embedded.size()];
    CHECK(induced_column_action(g, pair.set_b).action.has_value());
  }
}
