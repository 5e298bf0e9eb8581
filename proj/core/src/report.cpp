#include "suppcode/report.hpp"

#include <sstream>

namespace suppcode {

using nlohmann::json;

Analysis analyze_pcm(const Matrix& pcm, const AnalyzeOptions& opts) {
  Analysis an{code_from_pcm(pcm), {}, {}, {}, {}, {}, {}, std::nullopt};
  an.md = min_distance(pcm, opts.dmax);
  an.dual_weights = dual_weight_set(pcm);
  an.table = coset_weights(pcm);
  an.cr = complete_regularity(pcm, an.table);
  if (an.md.d)
    an.up = up_params(pcm, an.table, (*an.md.d - 1) / 2);
  an.summary = summarize(an.code, an.md, an.dual_weights, an.table, an.up);
  return an;
}

namespace {

json ia_json(const IntersectionArray& ia) {
  return json{{"b", ia.b}, {"c", ia.c}, {"a", ia.a}};
}

std::string ia_string(const IntersectionArray& ia) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < ia.b.size(); ++i) out << (i ? "," : "") << ia.b[i];
  out << ';';
  for (size_t i = 0; i < ia.c.size(); ++i) out << (i ? "," : "") << ia.c[i];
  out << '}';
  return out.str();
}

// b1/c2 of a measured intersection array, zero when the covering radius
// stops earlier.
long long ia_b1(const IntersectionArray& ia) { return ia.b.size() >= 2 ? ia.b[1] : 0; }
long long ia_c2(const IntersectionArray& ia) { return ia.c.size() >= 2 ? ia.c[1] : 0; }

}  // namespace

std::string ct_status_name(CtStatus s) {
  switch (s) {
    case CtStatus::certified_yes: return "certified_yes";
    case CtStatus::certified_no: return "certified_no";
    default: return "unknown";
  }
}

PairChecks pair_checks(const SupplementaryPair& pair, const Analysis& a, const Analysis& b) {
  PairChecks out;
  const int q = pair.field->q();
  const long long n_a = a.code.n;
  const long long n_b = b.code.n;

  const bool both_cr = a.cr.is_cr && b.cr.is_cr;
  const bool radii_ok = a.table.rho <= 2 && b.table.rho <= 2;
  const bool identities_applicable = both_cr && radii_ok;

  long long b1a = 0, c2a = 0, b1b = 0, c2b = 0;
  if (identities_applicable) {
    b1a = ia_b1(*a.cr.ia);
    c2a = ia_c2(*a.cr.ia);
    b1b = ia_b1(*b.cr.ia);
    c2b = ia_c2(*b.cr.ia);
  }

  auto identity = [&](long long lhs, long long rhs) {
    const bool pass = !identities_applicable || lhs == rhs;
    if (identities_applicable && !pass) out.all_pass = false;
    return json{{"applicable", identities_applicable},
                {"lhs", identities_applicable ? json(lhs) : json()},
                {"rhs", identities_applicable ? json(rhs) : json()},
                {"pass", pass}};
  };
  json j;
  j["b1a_na_eq_c2a_nb"] = identity(b1a * n_a, c2a * n_b);
  j["b1b_nb_eq_c2b_na"] = identity(b1b * n_b, c2b * n_a);
  j["edge_count"] = identity(b1a * n_a + b1b * n_b, (q - 1) * n_a * n_b);

  // Per-coordinate weight-3 incidence, checked in both role directions.
  auto incidence = [&](bool role_is_a) {
    const Analysis& role = role_is_a ? a : b;
    const bool applicable = role.cr.is_cr && role.table.rho == 2 &&
                            role.code.k == role.code.n - pair.m;
    json dir{{"applicable", applicable}, {"expected", json()}, {"uniform", json()},
             {"observed", json()}, {"pass", true}};
    if (!applicable) return dir;
    const long long c2 = ia_c2(*role.cr.ia);
    const long long expected2 = (q - 1) * c2;  // doubled count, keeps everything integral
    const std::vector<long long> counts = weight3_incidence(pair, role_is_a);
    bool uniform = true;
    long long seen = counts.empty() ? 0 : counts[0];
    for (long long cnt : counts) uniform &= cnt == seen;
    const bool pass = uniform && 2 * seen == expected2;
    dir["expected"] = expected2 % 2 == 0 ? json(expected2 / 2) : json();
    dir["uniform"] = uniform;
    dir["observed"] = seen;
    dir["pass"] = pass;
    if (!pass) out.all_pass = false;
    return dir;
  };
  j["weight3_incidence"] = json{{"role_a", incidence(true)}, {"role_b", incidence(false)}};

  // Covering-radius-2 transfer: a completely regular side with rho = 2 and
  // dimension n - m forces the other side completely regular with rho <= 2.
  auto transfer = [&](const Analysis& from, const Analysis& to) {
    const bool applicable =
        from.cr.is_cr && from.table.rho == 2 && from.code.k == from.code.n - pair.m;
    const bool conclusion = to.cr.is_cr && to.table.rho <= 2;
    const bool pass = !applicable || conclusion;
    if (!pass) out.all_pass = false;
    return json{{"applicable", applicable}, {"conclusion_holds", conclusion}, {"pass", pass}};
  };
  j["rho2_transfer"] = json{{"a_to_b", transfer(a, b)}, {"b_to_a", transfer(b, a)}};

  out.json = std::move(j);
  return out;
}

json report_json(const Analysis& an, const Provenance& prov, const json* pair) {
  const CodeSummary& s = an.summary;
  json code{
      {"n", s.n},
      {"k", s.k},
      {"d", s.d ? json(*s.d) : json()},
      {"d_cap", s.d_cap},
      {"e", s.e ? json(*s.e) : json()},
      {"rho", s.rho},
      {"s", s.s},
      {"perfect", s.perfect ? json(*s.perfect) : json()},
      {"quasi_perfect", s.quasi_perfect ? json(*s.quasi_perfect) : json()},
      {"s_is_e_plus_1", s.s_is_e_plus_1 ? json(*s.s_is_e_plus_1) : json()},
      {"uniformly_packed", s.uniformly_packed},
      {"syndrome_space", an.table.size},
      {"cosets", an.table.size - an.table.unreachable},
  };

  json census = json::object();
  for (const auto& [w, cnt] : an.table.census) census[std::to_string(w)] = cnt;

  json cr{{"is_cr", an.cr.is_cr}};
  cr["ia"] = an.cr.ia ? ia_json(*an.cr.ia) : json();
  if (an.cr.witness) {
    const CrWitness& w = *an.cr.witness;
    cr["witness"] = json{{"weight", w.weight},
                         {"syndromes", {w.syn1, w.syn2}},
                         {"profiles",
                          {{w.p1.c, w.p1.a, w.p1.b}, {w.p2.c, w.p2.a, w.p2.b}}}};
  } else {
    cr["witness"] = json();
  }

  json up;
  if (an.up.status == UpResult::Status::uniform)
    up = json{{"lambda", an.up.params->lambda}, {"mu", an.up.params->mu}};

  json ct;
  if (an.ct) {
    json per_weight = json::object();
    for (const auto& [w, cnt] : an.ct->orbits_per_weight) per_weight[std::to_string(w)] = cnt;
    ct = json{{"status", ct_status_name(an.ct->status)},
              {"orbits", an.ct->orbit_count},
              {"orbits_per_weight", per_weight},
              {"exhaustive", an.ct->exhaustive},
              {"generators", an.ct->provenance},
              {"generator_count", an.ct->generator_count},
              {"caveat_nonprime_q", an.ct->caveat_nonprime_q},
              {"nodes", an.ct->nodes}};
  }

  json provenance{
      {"preset", prov.preset.empty() ? json() : json(prov.preset)},
      {"column_indices", prov.column_indices},
      {"fixture_hash", prov.fixture_hash.empty() ? json() : json(prov.fixture_hash)},
      {"column_order", prov.column_order},
      {"field",
       {{"p", an.code.pcm.field()->p()},
        {"e", an.code.pcm.field()->e()},
        {"q", an.code.pcm.field()->q()}}},
  };

  json out{
      {"code", code},
      {"dual_weights", s.dual_weights},
      {"coset_census", census},
      {"cr", cr},
      {"up", up},
      {"ct", ct},
      {"pair_checks", pair ? *pair : json()},
      {"provenance", provenance},
  };
  return out;
}

std::string report_text(const Analysis& an, const Provenance& prov) {
  const CodeSummary& s = an.summary;
  std::ostringstream out;
  out << "code        [" << s.n << "," << s.k;
  if (s.d)
    out << "," << *s.d;
  else
    out << ",d>" << s.d_cap;
  out << ";rho=" << s.rho << "]_" << an.code.pcm.field()->q() << "\n";
  out << "external s  " << s.s << "\n";
  out << "dual wts    ";
  for (size_t i = 0; i < s.dual_weights.size(); ++i)
    out << (i ? "," : "") << s.dual_weights[i];
  out << "\n";
  out << "census      ";
  bool first = true;
  for (const auto& [w, cnt] : an.table.census) {
    out << (first ? "" : " ") << w << ":" << cnt;
    first = false;
  }
  out << "\n";
  out << "perfect     " << (s.perfect ? (*s.perfect ? "yes" : "no") : "d-unknown") << "\n";
  out << "quasi-perf  " << (s.quasi_perfect ? (*s.quasi_perfect ? "yes" : "no") : "d-unknown")
      << "\n";
  out << "unif packed " << (s.uniformly_packed ? "yes" : "no");
  if (s.up) out << " (lambda=" << s.up->lambda << ", mu=" << s.up->mu << ")";
  out << "\n";
  out << "compl reg   " << (an.cr.is_cr ? "yes" : "no");
  if (an.cr.ia) out << " IA=" << ia_string(*an.cr.ia);
  out << "\n";
  if (an.ct) {
    out << "compl trans " << ct_status_name(an.ct->status) << " (orbits=" << an.ct->orbit_count
        << ", rho+1=" << an.ct->rho + 1 << ", generators=" << an.ct->provenance
        << (an.ct->exhaustive ? ", exhaustive" : "") << ")\n";
  }
  if (!prov.preset.empty()) out << "preset      " << prov.preset << "\n";
  return out.str();
}

}  // namespace suppcode
