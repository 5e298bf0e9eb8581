#ifndef SUPPCODE_CODE_HPP
#define SUPPCODE_CODE_HPP

#include <map>
#include <optional>
#include <vector>

#include "suppcode/matrix.hpp"

namespace suppcode {

/// A linear code given by a parity-check matrix. Redundant rows are kept:
/// the dimension is n - rank(pcm), which can exceed n - rows(pcm).
struct LinearCode {
  Matrix pcm;
  int n = 0;       // length (columns)
  int r = 0;       // rank of pcm
  long long k = 0; // dimension, n - r
};

LinearCode code_from_pcm(Matrix pcm);

/// Minimum distance, exact if <= cap. d is empty when every subset of up to
/// cap columns is linearly independent (d exceeds cap, or the code is {0}).
struct MinDistance {
  std::optional<int> d;
  int cap = 0;
};

MinDistance min_distance(const Matrix& pcm, int cap = 6);

/// Weight distribution of the row space of pcm (the dual code), as
/// weight -> count over all q^rank(pcm) vectors. Weight 0 appears once.
/// Throws budget_error when q^rank > 10^7.
std::map<int, long long> dual_weight_set(const Matrix& pcm);

/// Number of distinct nonzero dual weights.
int external_distance(const Matrix& pcm);

struct UpParams {
  long long lambda = 0;  // codewords at distance e+1 from vectors at distance e
  long long mu = 0;      // codewords at distance e+1 from vectors at distance e+1
};

/// Parameter summary and classification flags. The flags that need the
/// packing radius stay unset when d exceeded its cap. Quasi-perfectness
/// (e == rho-1) and the external-distance condition (s == e+1) are recorded
/// separately; they coincide exactly on uniformly packed codes.
struct CodeSummary {
  int n = 0;
  long long k = 0;
  std::optional<int> d;
  int d_cap = 0;
  std::optional<int> e;
  int rho = 0;
  int s = 0;
  std::vector<int> dual_weights;       // sorted, nonzero only
  std::optional<bool> perfect;         // e == rho
  std::optional<bool> quasi_perfect;   // e == rho - 1
  std::optional<bool> s_is_e_plus_1;   // s == e + 1
  std::optional<UpParams> up;          // present iff verified uniform
  bool uniformly_packed = false;
};

struct CosetTable;
struct UpResult;

CodeSummary summarize(const LinearCode& code, const MinDistance& md,
                      const std::map<int, long long>& dual_weights,
                      const CosetTable& table, const UpResult& up);

}  // namespace suppcode

#endif
