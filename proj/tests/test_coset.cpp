#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "suppcode/construct.hpp"
#include "suppcode/coset.hpp"
#include "suppcode/errors.hpp"

using namespace suppcode;

TEST_CASE("syndrome_of basics") {
  FieldPtr f2 = Field::make(2);
  const Matrix h = hamming_pcm(f2, 3);
  const std::vector<int> zero(7, 0);
  CHECK(syndrome_of(h, zero) == 0);

  // a codeword has syndrome zero
  const Matrix ker = h.kernel_basis();
  CHECK(syndrome_of(h, ker.row(0)) == 0);

  // e_j picks out column j
  for (int j = 0; j < 7; ++j) {
    std::vector<int> e(7, 0);
    e[j] = 1;
    CHECK(syndrome_of(h, e) == vector_value(2, h.col(j)));
  }
  std::vector<int> wrong(6, 0);
  CHECK_THROWS_AS(syndrome_of(h, wrong), std::invalid_argument);
}

TEST_CASE("coset table of the Hamming code") {
  FieldPtr f3 = Field::make(3);
  const CosetTable t = coset_weights(hamming_pcm(f3, 3));
  CHECK(t.rho == 1);
  CHECK(t.census.at(0) == 1);
  CHECK(t.census.at(1) == 26);
  CHECK(t.unreachable == 0);
}

TEST_CASE("coset table of the family code counts per the census formulas") {
  for (auto [q, m, u] : {std::tuple{2, 3, 1}, {2, 4, 2}, {3, 3, 1}, {3, 3, 2}, {4, 2, 1}}) {
    CAPTURE(q);
    CAPTURE(m);
    CAPTURE(u);
    const SupplementaryPair pair = make_preset("buM", q, m, u);
    const CosetTable t = coset_weights(pair.pcm_b);
    long long qm = 1, qu = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    for (int i = 0; i < u; ++i) qu *= q;
    CHECK(t.rho == 2);
    CHECK(t.census.at(1) == qm - qu);
    CHECK(t.census.at(2) == qu - 1);
  }
}

TEST_CASE("identity parity check gives syndrome weight = hamming weight") {
  FieldPtr f2 = Field::make(2);
  const CosetTable t = coset_weights(Matrix::identity(f2, 5));
  CHECK(t.rho == 5);
  for (long long s = 0; s < t.size; ++s) {
    int w = 0;
    for (int d : t.syndrome_digits(s)) w += d != 0;
    CHECK(t.weights[s] == w);
  }
}

TEST_CASE("coset table agrees with the exhaustive oracle") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    FieldPtr f = Field::make(trial % 2 ? 3 : 2);
    const int m = 2 + static_cast<int>(rng() % 2);
    const long long n_m = projective_count(f->q(), m);
    const int n = 2 + static_cast<int>(rng() % std::min<long long>(n_m - 1, 7));
    const Matrix pcm = testing::random_pcm(rng, f, m, n);
    const testing::Exhaustive ex(pcm);
    const CosetTable t = coset_weights(pcm);
    const std::vector<int> expect = ex.coset_weights(t.size);
    for (long long s = 0; s < t.size; ++s) CHECK(t.weights[s] == expect[s]);
  }
}

TEST_CASE("coset leaders reconstruct with the stated weight and syndrome") {
  const SupplementaryPair pair = make_preset("buM", 3, 3, 1);
  const CosetTable t = coset_weights(pair.pcm_b);
  for (long long s = 0; s < t.size; ++s) {
    if (t.weights[s] < 0) continue;
    const std::vector<int> x = t.leader(pair.pcm_b, s);
    int w = 0;
    for (int v : x) w += v != 0;
    CHECK(w == t.weights[s]);
    CHECK(syndrome_of(pair.pcm_b, x) == s);
  }
}

TEST_CASE("complete regularity of small family codes with the predicted array") {
  for (auto [q, m, u] : {std::tuple{2, 3, 1}, {3, 3, 2}, {2, 4, 3}}) {
    const SupplementaryPair pair = make_preset("buM", q, m, u);
    const CosetTable t = coset_weights(pair.pcm_b);
    const CrResult cr = complete_regularity(pair.pcm_b, t);
    REQUIRE(cr.is_cr);
    long long qm = 1, qu = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    for (int i = 0; i < u; ++i) qu *= q;
    CHECK(cr.ia->b == std::vector<long long>{qm - qu, qu - 1});
    CHECK(cr.ia->c == std::vector<long long>{1, qm - qu});
    CHECK(graph_identity_check(t, *cr.ia));
  }
}

TEST_CASE("neighbor profiles match the per-vector oracle and are coset-constant") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 6; ++trial) {
    FieldPtr f = Field::make(trial % 2 ? 3 : 2);
    const int m = 2 + static_cast<int>(rng() % 2);
    const long long n_m = projective_count(f->q(), m);
    const int n = 3 + static_cast<int>(rng() % std::min<long long>(n_m - 2, 5));
    const Matrix pcm = testing::random_pcm(rng, f, m, n);
    const testing::Exhaustive ex(pcm);
    const CosetTable t = coset_weights(pcm);
    std::vector<char> seen(t.size, 0);
    std::vector<NeighborProfile> per_syndrome(t.size);
    for (long long x = 0; x < ex.total(); ++x) {
      const long long s = ex.syndrome(x);
      const NeighborProfile p = ex.profile(x);
      if (!seen[s]) {
        seen[s] = 1;
        per_syndrome[s] = p;
        CHECK(p == neighbor_profile(pcm, t, s));
      } else {
        CHECK(p == per_syndrome[s]);
      }
    }
  }
}

TEST_CASE("profile degree identity c+a+b = (q-1)n") {
  const SupplementaryPair pair = make_preset("buM", 3, 3, 1);
  const CosetTable t = coset_weights(pair.pcm_b);
  for (long long s = 0; s < t.size; ++s) {
    const NeighborProfile p = neighbor_profile(pair.pcm_b, t, s);
    CHECK(p.c + p.a + p.b == 2LL * t.n);
  }
}

TEST_CASE("punctured-fixture side A is completely regular with the known array") {
  const SupplementaryPair pair = make_preset("golay3-punctured");
  const CosetTable t = coset_weights(pair.pcm_a);
  CHECK(t.unreachable == 243 - 81);  // rank 4 in a 5-digit syndrome space
  const CrResult cr = complete_regularity(pair.pcm_a, t);
  REQUIRE(cr.is_cr);
  CHECK(cr.ia->b == std::vector<long long>{20, 18});
  CHECK(cr.ia->c == std::vector<long long>{1, 6});
}

TEST_CASE("low weight codeword counts") {
  FieldPtr f2 = Field::make(2);
  const auto hamming = low_weight_codewords(hamming_pcm(f2, 3), 3);
  CHECK(hamming.at(0) == 1);
  CHECK(hamming.count(1) == 0);
  CHECK(hamming.count(2) == 0);
  CHECK(hamming.at(3) == 7);

  // extended Hamming [4,1,4]: nothing below the single weight-4 word
  const SupplementaryPair ext = make_preset("buM", 2, 3, 2);
  const auto counts = low_weight_codewords(ext.pcm_b, 4);
  CHECK(counts.at(0) == 1);
  CHECK(counts.size() == 2);
  CHECK(counts.at(4) == 1);
}

TEST_CASE("low weight counts match exhaustive weights on random codes") {
  std::mt19937_64 rng(6060);
  for (int trial = 0; trial < 6; ++trial) {
    FieldPtr f = Field::make(trial % 2 ? 3 : 2);
    const Matrix pcm = testing::random_pcm(rng, f, 3, 4 + static_cast<int>(rng() % 2));
    const testing::Exhaustive ex(pcm);
    const int wmax = pcm.cols();
    const auto counts = low_weight_codewords(pcm, wmax);
    std::map<int, long long> expect;
    for (long long x = 0; x < ex.total(); ++x)
      if (ex.syndrome(x) == 0) ++expect[ex.weight(x)];
    for (const auto& [w, c] : expect) {
      CAPTURE(w);
      CHECK(counts.count(w) == 1);
      CHECK(counts.at(w) == c);
    }
    for (const auto& [w, c] : counts) CHECK(expect.at(w) == c);
  }
}

TEST_CASE("uniformly packed parameters of family codes, against the oracle") {
  const SupplementaryPair pair = make_preset("buM", 2, 3, 1);  // [6,3,3;2]
  const CosetTable t = coset_weights(pair.pcm_b);
  const UpResult up = up_params(pair.pcm_b, t, 1);
  REQUIRE(up.status == UpResult::Status::uniform);

  const testing::Exhaustive ex(pair.pcm_b);
  for (long long x = 0; x < ex.total(); ++x) {
    const int dist = ex.distance(x);
    if (dist == 1) CHECK(ex.codewords_at_distance(x, 2) == up.params->lambda);
    if (dist == 2) CHECK(ex.codewords_at_distance(x, 2) == up.params->mu);
  }
}

TEST_CASE("extended Hamming member has lambda 0, mu 2") {
  const SupplementaryPair ext = make_preset("buM", 2, 3, 2);  // [4,1,4;2]
  const CosetTable t = coset_weights(ext.pcm_b);
  const UpResult up = up_params(ext.pcm_b, t, 1);
  REQUIRE(up.status == UpResult::Status::uniform);
  CHECK(up.params->lambda == 0);
  CHECK(up.params->mu == 2);
}

TEST_CASE("up_params rejects perfect codes by precondition") {
  FieldPtr f2 = Field::make(2);
  const Matrix h = hamming_pcm(f2, 3);
  const CosetTable t = coset_weights(h);
  CHECK(up_params(h, t, 1).status == UpResult::Status::not_applicable);  // rho == e
}

TEST_CASE("subconstituent sizes partition the whole space") {
  using boost::multiprecision::cpp_int;
  const SupplementaryPair pair = make_preset("buM", 3, 3, 1);
  const LinearCode code = code_from_pcm(pair.pcm_b);
  const CosetTable t = coset_weights(pair.pcm_b);
  const auto sizes = subconstituent_sizes(t, code.k);
  cpp_int total = 0;
  for (const auto& [w, c] : sizes) total += c;
  cpp_int expect = 1;
  for (int i = 0; i < code.n; ++i) expect *= 3;
  CHECK(total == expect);

  // family census in closed form: |B(1)| = q^(n-m) (q^m - q^u)
  cpp_int qnm = 1;
  for (long long i = 0; i < code.k; ++i) qnm *= 3;
  CHECK(sizes.at(1) == qnm * (27 - 3));
  CHECK(sizes.at(2) == qnm * (3 - 1));
}

TEST_CASE("failed regularity checks return a valid witness pair") {
  // two points of PG(2,2) that do not form an embedded-subcode side: the
  // five-column complement is not completely regular
  const SupplementaryPair pair = partition(Field::make(2), 3, std::vector<long long>{0, 1});
  const Matrix& pcm = pair.pcm_b;
  const CosetTable t = coset_weights(pcm);
  const CrResult cr = complete_regularity(pcm, t);
  REQUIRE_FALSE(cr.is_cr);
  REQUIRE(cr.witness.has_value());
  const CrWitness& w = *cr.witness;
  CHECK(t.weights[w.syn1] == w.weight);
  CHECK(t.weights[w.syn2] == w.weight);
  CHECK(neighbor_profile(pcm, t, w.syn1) == w.p1);
  CHECK(neighbor_profile(pcm, t, w.syn2) == w.p2);
  CHECK_FALSE(w.p1 == w.p2);
}

TEST_CASE("table weights match the sphere minimum for the low layers") {
  // enumerate every vector of weight 1 and 2 and take the minimum per
  // syndrome; the table must agree on every syndrome it labels 1 or 2
  for (auto [q, m, u] : {std::tuple{3, 3, 1}, {2, 4, 2}}) {
    const SupplementaryPair pair = make_preset("buM", q, m, u);
    const Matrix& h = pair.pcm_b;
    const CosetTable t = coset_weights(h);
    std::vector<int> sphere_min(t.size, -1);
    const int n = h.cols();
    std::vector<int> x(n, 0);
    for (int i = 0; i < n; ++i)
      for (int a = 1; a < q; ++a) {
        x.assign(n, 0);
        x[i] = a;
        sphere_min[syndrome_of(h, x)] = 1;
      }
    for (int i = 0; i < n; ++i)
      for (int a = 1; a < q; ++a) {
        x.assign(n, 0);
        x[i] = a;
        for (int j = i + 1; j < n; ++j)
          for (int b = 1; b < q; ++b) {
            x[j] = b;
            const long long s2 = syndrome_of(h, x);
            if (sphere_min[s2] < 0) sphere_min[s2] = 2;
            x[j] = 0;
          }
      }
    for (long long s = 1; s < t.size; ++s)
      if (t.weights[s] >= 1 && t.weights[s] <= 2) CHECK(t.weights[s] == sphere_min[s]);
  }
}

TEST_CASE("syndrome space bound is enforced") {
  FieldPtr f2 = Field::make(2);
  CHECK_THROWS_AS(coset_weights(Matrix::identity(f2, 24)), budget_error);
}
