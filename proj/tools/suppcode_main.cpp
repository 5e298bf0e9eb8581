// suppcode: build supplementary codes from Hamming column partitions and
// certify their regularity and transitivity properties by exact enumeration.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "suppcode/autgroup.hpp"
#include "suppcode/code.hpp"
#include "suppcode/construct.hpp"
#include "suppcode/coset.hpp"
#include "suppcode/errors.hpp"
#include "suppcode/parallel.hpp"
#include "suppcode/pcm_io.hpp"
#include "suppcode/report.hpp"

using nlohmann::json;
using namespace suppcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitClaimMismatch = 4;

std::string default_expected_path() {
#ifdef SUPPCODE_DATA_DIR
  return std::string(SUPPCODE_DATA_DIR) + "/expected_values.json";
#else
  return "data/expected_values.json";
#endif
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write output file: " + path);
  out << text;
}

// ---- shared input selection -------------------------------------------------

struct SourceOptions {
  std::string preset;
  int q = 0, m = 0, u = 0;
  std::string pcm_path;
  int ambient = 0;
  std::string indices;
  std::string side = "b";
};

void add_source_options(CLI::App* cmd, SourceOptions& src, bool with_side) {
  cmd->add_option("--preset", src.preset,
                  "preset pair: golay3, golay3-punctured, golay3-extended, binomial-7-4, buM");
  cmd->add_option("--q", src.q, "field order (prime power)");
  cmd->add_option("--m", src.m, "ambient redundancy");
  cmd->add_option("--u", src.u, "embedded redundancy for the buM preset");
  cmd->add_option("--pcm", src.pcm_path, "parity-check matrix file");
  cmd->add_option("--ambient", src.ambient,
                  "ambient redundancy when embedding --pcm into a pair");
  cmd->add_option("--indices", src.indices,
                  "comma-separated side-A point indices (with --q and --m)");
  if (with_side)
    cmd->add_option("--side", src.side, "pair side to analyze: a or b")
        ->check(CLI::IsMember({"a", "b"}));
}

std::vector<long long> parse_indices(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    const long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad index: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--indices is empty");
  return out;
}

FieldPtr field_from_q(int q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (p > q) throw std::invalid_argument("q must be a prime power >= 2");
  }
  int e = 0, qq = q;
  while (qq % p == 0) {
    qq /= p;
    ++e;
  }
  if (qq != 1) throw std::invalid_argument("q must be a prime power >= 2");
  return Field::make(p, e);
}

/// Builds the pair named by the source options; nullopt when the source is a
/// bare pcm meant for single-code analysis.
std::optional<SupplementaryPair> make_pair(const SourceOptions& src) {
  if (!src.preset.empty()) return make_preset(src.preset, src.q, src.m, src.u);
  if (!src.pcm_path.empty() && src.ambient > 0) {
    const Matrix raw = read_pcm_file(src.pcm_path);
    const EmbeddedColumns emb = embed_columns(raw, src.ambient);
    SupplementaryPair pair = partition(raw.field(), src.ambient, emb.points.indices);
    pair.fixture_hash = fnv1a64_hex(write_pcm(raw));
    pair.embed_trace = emb.trace;
    return pair;
  }
  if (!src.indices.empty()) {
    if (src.q < 2 || src.m < 2)
      throw std::invalid_argument("--indices needs --q and --m");
    return partition(field_from_q(src.q), src.m, parse_indices(src.indices));
  }
  return std::nullopt;
}

struct SelectedCode {
  Matrix pcm;
  Provenance prov;
  std::optional<SupplementaryPair> pair;
  bool side_b = true;
};

SelectedCode select_code(const SourceOptions& src) {
  std::optional<SupplementaryPair> pair = make_pair(src);
  if (pair) {
    const bool side_b = src.side != "a";
    const PointSet& pts = side_b ? pair->set_b : pair->set_a;
    Provenance prov;
    prov.preset = pair->preset_name;
    prov.column_indices = pts.indices;
    prov.fixture_hash = pair->fixture_hash;
    Matrix pcm = side_b ? pair->pcm_b : pair->pcm_a;
    return SelectedCode{std::move(pcm), std::move(prov), std::move(pair), side_b};
  }
  if (src.pcm_path.empty())
    throw std::invalid_argument("no input: give --preset, --pcm or --indices");
  Matrix pcm = read_pcm_file(src.pcm_path);
  Provenance prov;
  prov.fixture_hash = fnv1a64_hex(write_pcm(pcm));
  return SelectedCode{std::move(pcm), std::move(prov), std::nullopt, true};
}

// ---- subcommand payloads ----------------------------------------------------

int cmd_hamming(int q, int m, const std::string& out) {
  const Matrix h = hamming_pcm(field_from_q(q), m);
  write_output(write_pcm(h), out);
  return kExitOk;
}

int cmd_supp(const SourceOptions& src, const std::string& out_prefix) {
  const std::optional<SupplementaryPair> pair = make_pair(src);
  if (!pair) throw std::invalid_argument("supp needs --preset, --pcm or --indices");
  write_pcm_file(pair->pcm_a, out_prefix + ".a.pcm");
  write_pcm_file(pair->pcm_b, out_prefix + ".b.pcm");

  json manifest{
      {"preset", pair->preset_name.empty() ? json() : json(pair->preset_name)},
      {"field", {{"p", pair->field->p()}, {"e", pair->field->e()}, {"q", pair->field->q()}}},
      {"m", pair->m},
      {"n_a", pair->set_a.count()},
      {"n_b", pair->set_b.count()},
      {"indices_a", pair->set_a.indices},
      {"fixture_hash", pair->fixture_hash.empty() ? json() : json(pair->fixture_hash)},
      {"column_order", Provenance{}.column_order},
  };
  if (!pair->embed_trace.empty()) {
    json trace = json::array();
    for (const NormalizedPoint& np : pair->embed_trace)
      trace.push_back({{"point", np.index}, {"scale", np.scale}});
    manifest["embed_trace"] = trace;
  }
  std::ofstream mf(out_prefix + ".manifest.json", std::ios::binary);
  if (!mf) throw std::invalid_argument("cannot write manifest");
  mf << manifest.dump(2) << '\n';
  std::cout << "wrote " << out_prefix << ".a.pcm (" << pair->pcm_a.rows() << "x"
            << pair->pcm_a.cols() << "), " << out_prefix << ".b.pcm (" << pair->pcm_b.rows()
            << "x" << pair->pcm_b.cols() << ")\n";
  return kExitOk;
}

int cmd_analyze(const SourceOptions& src, int dmax, bool as_json, const std::string& out) {
  const SelectedCode sel = select_code(src);
  AnalyzeOptions opts;
  opts.dmax = dmax;
  const Analysis an = analyze_pcm(sel.pcm, opts);
  if (as_json)
    write_output(report_json(an, sel.prov).dump(2) + "\n", out);
  else
    write_output(report_text(an, sel.prov), out);
  return kExitOk;
}

int cmd_certify(const SourceOptions& src, int dmax, long long budget,
                const std::string& generators, bool as_json, const std::string& out,
                const std::string& dump_generators) {
  const SelectedCode sel = select_code(src);
  AnalyzeOptions aopts;
  aopts.dmax = dmax;
  Analysis an = analyze_pcm(sel.pcm, aopts);

  CtOptions copts;
  copts.budget = budget;
  copts.keep_generators = !dump_generators.empty();
  if (generators == "hkmn")
    copts.generators = CtOptions::Generators::hkmn;
  else if (generators == "search")
    copts.generators = CtOptions::Generators::search;

  if (sel.pair)
    an.ct = certify_ct(*sel.pair, sel.side_b, an.table, copts);
  else {
    const EmbeddedColumns emb = embed_columns(sel.pcm, sel.pcm.rows());
    an.ct = certify_ct(emb.points, an.table, copts);
  }
  if (!dump_generators.empty()) {
    json gens = json::array();
    for (const SyndromeMap& g : an.ct->generators)
      gens.push_back(
          {{"provenance", g.provenance}, {"frobenius", g.frob}, {"matrix", write_pcm(g.mat)}});
    std::ofstream gf(dump_generators, std::ios::binary);
    if (!gf) throw std::invalid_argument("cannot write generator file");
    gf << gens.dump(2) << '\n';
    an.ct->generators.clear();
  }
  if (as_json)
    write_output(report_json(an, sel.prov).dump(2) + "\n", out);
  else
    write_output(report_text(an, sel.prov), out);
  return kExitOk;
}

int cmd_pair_check(const SourceOptions& src, int dmax, bool as_json, const std::string& out) {
  const std::optional<SupplementaryPair> pair = make_pair(src);
  if (!pair) throw std::invalid_argument("pair-check needs --preset, --pcm or --indices");
  AnalyzeOptions opts;
  opts.dmax = dmax;
  const Analysis a = analyze_pcm(pair->pcm_a, opts);
  const Analysis b = analyze_pcm(pair->pcm_b, opts);
  const PairChecks pc = pair_checks(*pair, a, b);

  Provenance prov_a, prov_b;
  prov_a.preset = prov_b.preset = pair->preset_name;
  prov_a.column_indices = pair->set_a.indices;
  prov_b.column_indices = pair->set_b.indices;
  prov_a.fixture_hash = prov_b.fixture_hash = pair->fixture_hash;

  if (as_json) {
    json doc{{"a", report_json(a, prov_a)},
             {"b", report_json(b, prov_b, &pc.json)},
             {"pair_checks", pc.json},
             {"all_pass", pc.all_pass}};
    write_output(doc.dump(2) + "\n", out);
  } else {
    std::ostringstream text;
    text << "--- side A ---\n" << report_text(a, prov_a);
    text << "--- side B ---\n" << report_text(b, prov_b);
    text << "--- pair checks ---\n";
    for (const auto& [name, entry] : pc.json.items()) {
      if (entry.contains("pass"))
        text << name << ": "
             << (entry["applicable"] == true
                     ? (entry["pass"] == true ? "pass" : "FAIL")
                     : "not applicable")
             << "\n";
      else
        text << name << ": " << entry.dump() << "\n";
    }
    text << "all applicable checks " << (pc.all_pass ? "pass" : "FAIL") << "\n";
    write_output(text.str(), out);
  }
  return kExitOk;
}

int cmd_catalog(int q, int m, bool as_json, int workers, const std::string& out) {
  if (m < 2) throw std::invalid_argument("catalog needs m >= 2");
  FieldPtr field = field_from_q(q);
  const int rows = m - 1;
  std::vector<json> reports(rows);
  std::vector<std::string> lines(rows);

  parallel_for_index(rows, workers, [&](long long i) {
    const int u = static_cast<int>(i) + 1;
    const SupplementaryPair pair = embedded_hamming_pair(field, m, u);
    Analysis an = analyze_pcm(pair.pcm_b);
    an.ct = certify_ct(pair, true, an.table, {});
    Provenance prov;
    prov.preset = "buM";
    prov.column_indices = pair.set_b.indices;
    json r = report_json(an, prov);
    r["u"] = u;
    reports[i] = std::move(r);

    std::ostringstream line;
    line << "u=" << u << "  [" << an.summary.n << "," << an.summary.k << ","
         << (an.summary.d ? std::to_string(*an.summary.d) : ">" + std::to_string(an.summary.d_cap))
         << ";rho=" << an.summary.rho << "]_" << q << "  s=" << an.summary.s << "  cr="
         << (an.cr.is_cr ? "yes" : "no");
    if (an.cr.ia) {
      line << "  IA={";
      for (size_t t = 0; t < an.cr.ia->b.size(); ++t) line << (t ? "," : "") << an.cr.ia->b[t];
      line << ";";
      for (size_t t = 0; t < an.cr.ia->c.size(); ++t) line << (t ? "," : "") << an.cr.ia->c[t];
      line << "}";
    }
    line << "  ct=" << ct_status_name(an.ct->status) << "(" << an.ct->orbit_count << " orbits)";
    lines[i] = line.str();
  });

  if (as_json) {
    json doc = json::array();
    for (json& r : reports) doc.push_back(std::move(r));
    write_output(doc.dump(2) + "\n", out);
  } else {
    std::ostringstream text;
    text << "catalog q=" << q << " m=" << m << "\n";
    for (const std::string& line : lines) text << line << "\n";
    write_output(text.str(), out);
  }
  return kExitOk;
}

// ---- verify: compare recomputed values against the expected-values fixture --

struct VerifyStats {
  int checked = 0;
  int mismatched = 0;
  std::vector<std::string> lines;
};

void check_field(VerifyStats& st, const std::string& claim, const std::string& field,
                 const json& expect, const json& got) {
  ++st.checked;
  if (expect == got) return;
  ++st.mismatched;
  st.lines.push_back("MISMATCH " + claim + "." + field + ": expected " + expect.dump() +
                     ", computed " + got.dump());
}

void verify_claim(const json& claim, VerifyStats& st) {
  const std::string id = claim.at("id");
  const json& preset = claim.at("preset");
  const SupplementaryPair pair =
      make_preset(preset.at("name"), preset.value("q", 0), preset.value("m", 0),
                  preset.value("u", 0));

  if (claim.value("pair_checks", false)) {
    const Analysis a = analyze_pcm(pair.pcm_a);
    const Analysis b = analyze_pcm(pair.pcm_b);
    const PairChecks pc = pair_checks(pair, a, b);
    check_field(st, id, "pair_checks", json(true), json(pc.all_pass));
  }

  if (!claim.contains("expect")) return;
  const bool side_b = claim.value("side", "b") == "b";
  const Matrix& pcm = side_b ? pair.pcm_b : pair.pcm_a;
  const Analysis an = analyze_pcm(pcm);
  const json& expect = claim.at("expect");

  if (expect.contains("n")) check_field(st, id, "n", expect["n"], json(an.summary.n));
  if (expect.contains("k")) check_field(st, id, "k", expect["k"], json(an.summary.k));
  if (expect.contains("d"))
    check_field(st, id, "d", expect["d"], an.summary.d ? json(*an.summary.d) : json());
  if (expect.contains("rho")) check_field(st, id, "rho", expect["rho"], json(an.summary.rho));
  if (expect.contains("s")) check_field(st, id, "s", expect["s"], json(an.summary.s));
  if (expect.contains("dual_weights"))
    check_field(st, id, "dual_weights", expect["dual_weights"], json(an.summary.dual_weights));
  if (expect.contains("census")) {
    json census = json::object();
    for (const auto& [w, c] : an.table.census) census[std::to_string(w)] = c;
    check_field(st, id, "census", expect["census"], census);
  }
  if (expect.contains("cr")) check_field(st, id, "cr", expect["cr"], json(an.cr.is_cr));
  if (expect.contains("ia_b"))
    check_field(st, id, "ia_b", expect["ia_b"], an.cr.ia ? json(an.cr.ia->b) : json());
  if (expect.contains("ia_c"))
    check_field(st, id, "ia_c", expect["ia_c"], an.cr.ia ? json(an.cr.ia->c) : json());
  if (expect.contains("uniformly_packed"))
    check_field(st, id, "uniformly_packed", expect["uniformly_packed"],
                json(an.summary.uniformly_packed));
  if (expect.contains("ct")) {
    CtOptions copts;
    if (claim.contains("budget")) copts.budget = claim["budget"].get<long long>();
    const CtReport ct = certify_ct(pair, side_b, an.table, copts);
    check_field(st, id, "ct", expect["ct"], json(ct_status_name(ct.status)));
    if (expect.contains("orbits"))
      check_field(st, id, "orbits", expect["orbits"], json(ct.orbit_count));
  }

  for (const json& erratum : claim.value("errata", json::array()))
    st.lines.push_back("note " + id + "." + erratum.at("field").get<std::string>() +
                       ": customary reference value " + erratum.at("reference").dump() +
                       "; " + erratum.value("note", ""));
}

VerifyStats run_verify(const std::string& path, int workers) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open expected-values fixture: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument("bad fixture json: " + std::string(e.what()));
  }
  const json claims = doc.at("claims");
  std::vector<VerifyStats> per_claim(claims.size());
  parallel_for_index(static_cast<long long>(claims.size()), workers,
                     [&](long long i) { verify_claim(claims[i], per_claim[i]); });
  VerifyStats total;
  for (size_t i = 0; i < per_claim.size(); ++i) {
    total.checked += per_claim[i].checked;
    total.mismatched += per_claim[i].mismatched;
    const std::string id = claims[i].value("id", "claim-" + std::to_string(i));
    std::cout << (per_claim[i].mismatched ? "FAIL " : "ok   ") << id << " ("
              << per_claim[i].checked << " values)\n";
    for (const std::string& line : per_claim[i].lines) std::cout << "     " << line << "\n";
  }
  return total;
}

int cmd_verify(const std::string& expected, int workers) {
  const VerifyStats st = run_verify(expected, workers);
  std::cout << st.checked << " values checked, " << st.mismatched << " mismatched\n";
  return st.mismatched ? kExitClaimMismatch : kExitOk;
}

// ---- selftest ---------------------------------------------------------------

bool selftest_field_axioms() {
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
    FieldPtr f = Field::make(p, e);
    const int q = f->q();
    for (int a = 0; a < q; ++a) {
      if (f->add(a, f->neg(a)) != 0) return false;
      if (a && f->mul(a, f->inv(a)) != 1) return false;
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c))) return false;
          if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) return false;
          if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) return false;
        }
    }
  }
  return true;
}

// Exhaustive reference for one random code: min weight per syndrome over the
// full vector space, neighbor profiles per vector, minimum distance.
bool selftest_one_code(uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed);
  FieldPtr f = Field::make(rng() % 2 ? 3 : 2);
  const int q = f->q();
  const int m = 2 + static_cast<int>(rng() % 2);
  const long long n_m = projective_count(q, m);
  const int max_n = static_cast<int>(std::min<long long>(n_m, 10));
  const int min_n = std::min<int>(m, max_n);
  const int n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));

  // distinct projective columns with random scalings
  std::vector<long long> points(n_m);
  for (long long i = 0; i < n_m; ++i) points[i] = i;
  for (long long i = n_m - 1; i > 0; --i) std::swap(points[i], points[rng() % (i + 1)]);
  Matrix pcm(f, m, n);
  for (int j = 0; j < n; ++j) {
    const std::vector<int> v = point_vector(*f, m, points[j]);
    const int lambda = 1 + static_cast<int>(rng() % (q - 1));
    for (int i = 0; i < m; ++i) pcm.set(i, j, f->mul(lambda, v[i]));
  }

  const CosetTable table = coset_weights(pcm);

  long long total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  std::vector<long long> qpow(n);
  long long pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    qpow[i] = pw;
    pw *= q;
  }

  std::vector<int> min_weight(table.size, -1);
  std::vector<long long> syndrome_of_vec(total);
  std::vector<int> weight_of_vec(total);
  std::vector<int> v(n);
  std::optional<int> dmin;
  for (long long x = 0; x < total; ++x) {
    long long rem = x;
    int w = 0;
    for (int i = n - 1; i >= 0; --i) {
      v[i] = static_cast<int>(rem % q);
      rem /= q;
      w += v[i] != 0;
    }
    const long long s = syndrome_of(pcm, v);
    syndrome_of_vec[x] = s;
    weight_of_vec[x] = w;
    if (min_weight[s] < 0 || w < min_weight[s]) min_weight[s] = w;
    if (s == 0 && w > 0 && (!dmin || w < *dmin)) dmin = w;
  }

  for (long long s = 0; s < table.size; ++s)
    if (table.weights[s] != min_weight[s]) {
      detail = "coset weight mismatch at syndrome " + std::to_string(s);
      return false;
    }

  const MinDistance md = min_distance(pcm, n);
  if (md.d != dmin) {
    detail = "minimum distance mismatch";
    return false;
  }

  // neighbor profiles: per vector from the reference map, compared with the
  // per-syndrome profile from the table
  for (long long x = 0; x < total; ++x) {
    const long long s = syndrome_of_vec[x];
    const int l = min_weight[s];
    NeighborProfile ref;
    long long rem = x;
    for (int i = n - 1; i >= 0; --i) {
      v[i] = static_cast<int>(rem % q);
      rem /= q;
    }
    for (int j = 0; j < n; ++j)
      for (int val = 0; val < q; ++val) {
        if (val == v[j]) continue;
        const long long y = x + (val - v[j]) * qpow[j];
        const int ly = min_weight[syndrome_of_vec[y]];
        if (ly == l - 1)
          ++ref.c;
        else if (ly == l)
          ++ref.a;
        else
          ++ref.b;
      }
    if (!(ref == neighbor_profile(pcm, table, s))) {
      detail = "neighbor profile mismatch at vector " + std::to_string(x);
      return false;
    }
  }
  return true;
}

int cmd_selftest(uint64_t seed, int cases, const std::string& expected, int workers) {
  bool ok = true;

  const bool axioms = selftest_field_axioms();
  std::cout << (axioms ? "ok   " : "FAIL ") << "field axioms\n";
  ok &= axioms;

  std::vector<std::string> failures(cases);
  std::vector<char> pass(cases, 0);
  parallel_for_index(cases, workers, [&](long long i) {
    std::string detail;
    pass[i] = selftest_one_code(seed + static_cast<uint64_t>(i), detail);
    failures[i] = detail;
  });
  int failed = 0;
  for (int i = 0; i < cases; ++i)
    if (!pass[i]) {
      ++failed;
      std::cout << "FAIL oracle case " << i << " (seed " << seed + i << "): " << failures[i]
                << "\n";
    }
  std::cout << (failed ? "FAIL " : "ok   ") << "oracle equivalence (" << cases - failed << "/"
            << cases << " cases)\n";
  ok &= failed == 0;

  const VerifyStats st = run_verify(expected, workers);
  std::cout << (st.mismatched ? "FAIL " : "ok   ") << "expected-values fixture (" << st.checked
            << " values)\n";
  ok &= st.mismatched == 0;

  std::cout << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok ? kExitOk : kExitClaimMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supplementary codes from Hamming column partitions: exact analysis and certificates"};
  app.require_subcommand(1);

  // hamming
  auto* hamming = app.add_subcommand("hamming", "write the canonical Hamming parity-check matrix");
  int h_q = 0, h_m = 0;
  std::string h_out;
  hamming->add_option("--q", h_q, "field order (prime power)")->required();
  hamming->add_option("--m", h_m, "redundancy")->required();
  hamming->add_option("--out", h_out, "output file (default stdout)");

  // supp
  auto* supp = app.add_subcommand("supp", "build a supplementary pair (two pcm files + manifest)");
  SourceOptions supp_src;
  std::string supp_out;
  add_source_options(supp, supp_src, false);
  supp->add_option("--out", supp_out, "output prefix")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full exact analysis of one code");
  SourceOptions an_src;
  int an_dmax = 6;
  bool an_json = false;
  std::string an_out;
  add_source_options(analyze, an_src, true);
  analyze->add_option("--dmax", an_dmax, "minimum-distance search cap (default 6)");
  analyze->add_flag("--json", an_json, "machine-readable report");
  analyze->add_option("--out", an_out, "output file (default stdout)");

  // certify-ct
  auto* certify = app.add_subcommand("certify-ct", "complete-transitivity certificate");
  SourceOptions ct_src;
  int ct_dmax = 6;
  long long ct_budget = 100'000'000;
  std::string ct_generators = "auto", ct_out, ct_dump;
  bool ct_json = false;
  add_source_options(certify, ct_src, true);
  certify->add_option("--dmax", ct_dmax, "minimum-distance search cap");
  certify->add_option("--budget", ct_budget, "stabilizer search node budget");
  certify->add_option("--generators", ct_generators, "auto, hkmn or search")
      ->check(CLI::IsMember({"auto", "hkmn", "search"}));
  certify->add_option("--dump-generators", ct_dump,
                      "write the generator list (provenance + matrices) to this file");
  certify->add_flag("--json", ct_json, "machine-readable report");
  certify->add_option("--out", ct_out, "output file (default stdout)");

  // pair-check
  auto* paircheck = app.add_subcommand("pair-check", "verify the supplementary-pair identities");
  SourceOptions pc_src;
  int pc_dmax = 6;
  bool pc_json = false;
  std::string pc_out;
  add_source_options(paircheck, pc_src, false);
  paircheck->add_option("--dmax", pc_dmax, "minimum-distance search cap");
  paircheck->add_flag("--json", pc_json, "machine-readable report");
  paircheck->add_option("--out", pc_out, "output file (default stdout)");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "analyze the whole embedded-Hamming family for one (q, m)");
  int cat_q = 0, cat_m = 0, cat_workers = 0;
  bool cat_json = false;
  std::string cat_out;
  catalog->add_option("--q", cat_q, "field order (prime power)")->required();
  catalog->add_option("--m", cat_m, "ambient redundancy")->required();
  catalog->add_flag("--json", cat_json, "machine-readable output");
  catalog->add_option("--workers", cat_workers, "worker threads (default: env SUPPCODE_WORKERS)");
  catalog->add_option("--out", cat_out, "output file (default stdout)");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "oracle equivalence, field axioms and fixture claims");
  uint64_t st_seed = 20240101;
  int st_cases = 50, st_workers = 0;
  std::string st_expected = default_expected_path();
  selftest->add_option("--seed", st_seed, "base seed for the random-code oracle");
  selftest->add_option("--cases", st_cases, "number of random oracle cases (default 50)");
  selftest->add_option("--expected", st_expected, "expected-values fixture path");
  selftest->add_option("--workers", st_workers, "worker threads (default: env SUPPCODE_WORKERS)");

  // verify
  auto* verify = app.add_subcommand("verify", "recompute and compare the expected-values fixture");
  std::string v_expected = default_expected_path();
  int v_workers = 0;
  verify->add_option("--expected", v_expected, "expected-values fixture path");
  verify->add_option("--workers", v_workers, "worker threads (default: env SUPPCODE_WORKERS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (hamming->parsed()) return cmd_hamming(h_q, h_m, h_out);
    if (supp->parsed()) return cmd_supp(supp_src, supp_out);
    if (analyze->parsed()) return cmd_analyze(an_src, an_dmax, an_json, an_out);
    if (certify->parsed())
      return cmd_certify(ct_src, ct_dmax, ct_budget, ct_generators, ct_json, ct_out, ct_dump);
    if (paircheck->parsed()) return cmd_pair_check(pc_src, pc_dmax, pc_json, pc_out);
    if (catalog->parsed()) return cmd_catalog(cat_q, cat_m, cat_json, cat_workers, cat_out);
    if (selftest->parsed()) return cmd_selftest(st_seed, st_cases, st_expected, st_workers);
    if (verify->parsed()) return cmd_verify(v_expected, v_workers);
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
