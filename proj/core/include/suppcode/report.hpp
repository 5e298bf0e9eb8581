#ifndef SUPPCODE_REPORT_HPP
#define SUPPCODE_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "suppcode/autgroup.hpp"
#include "suppcode/code.hpp"
#include "suppcode/construct.hpp"
#include "suppcode/coset.hpp"

namespace suppcode {

struct Provenance {
  std::string preset;                      // empty -> null
  std::vector<long long> column_indices;   // point indices of the analyzed side
  std::string fixture_hash;                // empty -> null
  // Column convention carried on every report: canonical projective
  // representatives (first nonzero coordinate 1), sorted by base-q value
  // with row 0 most significant.
  std::string column_order = "canonical-projective,base-q,row0-msb";
};

struct AnalyzeOptions {
  int dmax = 6;
};

/// Full per-code analysis bundle.
struct Analysis {
  LinearCode code;
  MinDistance md;
  std::map<int, long long> dual_weights;
  CosetTable table;
  CrResult cr;
  UpResult up;
  CodeSummary summary;
  std::optional<CtReport> ct;
};

Analysis analyze_pcm(const Matrix& pcm, const AnalyzeOptions& opts = {});

struct PairChecks {
  nlohmann::json json;   // per-identity details
  bool all_pass = true;  // every applicable identity held
};

/// The supplementary-pair identities: the two side exchange identities
/// b1*nA == c2*nB and b1'*nB == c2'*nA, the edge-count identity
/// b1*nA + b1'*nB == (q-1)*nA*nB, the per-coordinate weight-3 incidence
/// count (q-1)*c2/2, and the covering-radius-2 transfer statement.
PairChecks pair_checks(const SupplementaryPair& pair, const Analysis& a, const Analysis& b);

nlohmann::json report_json(const Analysis& an, const Provenance& prov,
                           const nlohmann::json* pair = nullptr);
std::string report_text(const Analysis& an, const Provenance& prov);

std::string ct_status_name(CtStatus s);

}  // namespace suppcode

#endif
