#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "suppcode/pcm_io.hpp"
#include "suppcode/report.hpp"

using namespace suppcode;

TEST_CASE("pcm text round trip is the identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    FieldPtr f = trial % 3 == 0 ? Field::make(2, 2) : Field::make(trial % 2 ? 3 : 2);
    const int m = 2 + static_cast<int>(rng() % 2);
    const long long n_m = projective_count(f->q(), m);
    const int n = 2 + static_cast<int>(rng() % std::min<long long>(n_m - 1, 5));
    const Matrix pcm = testing::random_pcm(rng, f, m, n);
    const std::string text = write_pcm(pcm);
    const Matrix back = read_pcm(text);
    CHECK(back == pcm);
    CHECK(write_pcm(back) == text);
  }
}

TEST_CASE("prime and prime-power headers") {
  FieldPtr f3 = Field::make(3);
  const Matrix m3 = Matrix::from_rows(f3, {{0, 1, 2}});
  CHECK(write_pcm(m3).substr(0, 5) == "3 1 3");

  FieldPtr f4 = Field::make(2, 2);
  const Matrix m4 = Matrix::from_rows(f4, {{0, 1, 2, 3}});
  CHECK(write_pcm(m4).substr(0, 7) == "2 2 1 4");
  CHECK(read_pcm(write_pcm(m4)) == m4);
}

TEST_CASE("malformed pcm files are rejected") {
  CHECK_THROWS_AS(read_pcm(""), std::invalid_argument);
  CHECK_THROWS_AS(read_pcm("4 2 2\n0 1\n1 0\n"), std::invalid_argument);  // q=4 needs p e
  CHECK_THROWS_AS(read_pcm("3 1 2\n0 5\n"), std::invalid_argument);      // entry >= q
  CHECK_THROWS_AS(read_pcm("2 2 2\n1 0\n"), std::invalid_argument);      // short body
  CHECK_THROWS_AS(read_pcm("2 1 2\n1 0\n1\n"), std::invalid_argument);   // long body
  CHECK_THROWS_AS(read_pcm("2 1\n"), std::invalid_argument);
}

TEST_CASE("fnv-1a test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64_hex("").size() == 16);
}

TEST_CASE("report json carries every key with explicit nulls") {
  const SupplementaryPair pair = make_preset("buM", 2, 3, 1);
  const Analysis an = analyze_pcm(pair.pcm_b);
  Provenance prov;
  prov.preset = "buM";
  prov.column_indices = pair.set_b.indices;
  const nlohmann::json j = report_json(an, prov);
  for (const char* key : {"code", "dual_weights", "coset_census", "cr", "up", "ct",
                          "pair_checks", "provenance"})
    CHECK(j.contains(key));
  CHECK(j["ct"].is_null());          // no certification ran
  CHECK(j["pair_checks"].is_null()); // not a pair report
  CHECK_FALSE(j["up"].is_null());    // the family code is uniformly packed
  CHECK(j["code"]["n"] == 6);
  CHECK(j["code"]["k"] == 3);
  CHECK(j["code"]["d"] == 3);
  CHECK(j["code"]["rho"] == 2);
  CHECK(j["code"]["s"] == 2);
  CHECK(j["cr"]["is_cr"] == true);
  CHECK(j["coset_census"]["1"] == 6);
  CHECK(j["provenance"]["preset"] == "buM");
}

TEST_CASE("reports are byte-stable") {
  const SupplementaryPair pair = make_preset("buM", 3, 3, 1);
  Provenance prov;
  prov.column_indices = pair.set_b.indices;
  const std::string once = report_json(analyze_pcm(pair.pcm_b), prov).dump(2);
  const std::string twice = report_json(analyze_pcm(pair.pcm_b), prov).dump(2);
  CHECK(once == twice);
}

TEST_CASE("analysis of a d-above-cap code leaves the flags null") {
  FieldPtr f2 = Field::make(2);
  // the zero code of length 2: both columns independent
  const Matrix h = Matrix::from_rows(f2, {{0, 1}, {1, 1}});
  AnalyzeOptions opts;
  opts.dmax = 2;
  const Analysis an = analyze_pcm(h, opts);
  CHECK_FALSE(an.md.d.has_value());
  CHECK_FALSE(an.summary.e.has_value());
  const nlohmann::json j = report_json(an, {});
  CHECK(j["code"]["d"].is_null());
  CHECK(j["code"]["e"].is_null());
  CHECK(j["code"]["perfect"].is_null());
  CHECK(j["code"]["rho"] == 2);
}

TEST_CASE("pair checks pass on the family and the golay pair") {
  {
    const SupplementaryPair pair = make_preset("buM", 3, 3, 1);
    const Analysis a = analyze_pcm(pair.pcm_a);
    const Analysis b = analyze_pcm(pair.pcm_b);
    const PairChecks pc = pair_checks(pair, a, b);
    CHECK(pc.all_pass);
    CHECK(pc.json["rho2_transfer"]["b_to_a"]["applicable"] == true);
  }
  {
    const SupplementaryPair pair = make_preset("golay3");
    const Analysis a = analyze_pcm(pair.pcm_a);
    const Analysis b = analyze_pcm(pair.pcm_b);
    const PairChecks pc = pair_checks(pair, a, b);
    CHECK(pc.all_pass);
    CHECK(pc.json["b1a_na_eq_c2a_nb"]["lhs"] == 220);
    CHECK(pc.json["b1a_na_eq_c2a_nb"]["rhs"] == 220);
    CHECK(pc.json["weight3_incidence"]["role_a"]["observed"] == 2);
  }
}

TEST_CASE("pair checks on the punctured control report the failed precondition") {
  const SupplementaryPair pair = make_preset("golay3-punctured");
  const Analysis a = analyze_pcm(pair.pcm_a);
  const Analysis b = analyze_pcm(pair.pcm_b);
  const PairChecks pc = pair_checks(pair, a, b);
  // dim(A) = 6 != n_A - m = 5, so the transfer hypothesis fails;
  // B is not completely regular, consistent with the theory.
  CHECK(pc.json["rho2_transfer"]["a_to_b"]["applicable"] == false);
  CHECK(b.cr.is_cr == false);
  CHECK(pc.all_pass);  // nothing applicable failed
}

TEST_CASE("human-readable report mentions the headline facts") {
  const SupplementaryPair pair = make_preset("buM", 2, 3, 1);
  const Analysis an = analyze_pcm(pair.pcm_b);
  const std::string text = report_text(an, {});
  CHECK(text.find("[6,3,3;rho=2]_2") != std::string::npos);
  CHECK(text.find("IA={6,1;1,6}") != std::string::npos);
}
