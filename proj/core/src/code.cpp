#include "suppcode/code.hpp"

#include <stdexcept>

#include "suppcode/coset.hpp"
#include "suppcode/errors.hpp"

namespace suppcode {

LinearCode code_from_pcm(Matrix pcm) {
  if (pcm.rows() == 0 || pcm.cols() == 0)
    throw std::invalid_argument("empty parity-check matrix");
  LinearCode code{std::move(pcm), 0, 0, 0};
  code.n = code.pcm.cols();
  code.r = code.pcm.rank();
  code.k = code.n - code.r;
  return code;
}

namespace {

constexpr long long kStepBudget = 2'000'000'000;

// Reduce v against the reduced column stack; returns false if v lies in its
// span. Each stack entry keeps its pivot row.
struct Eliminator {
  const Field& f;
  int m;
  std::vector<std::vector<int>> reduced;
  std::vector<int> pivots;

  explicit Eliminator(const Field& field, int rows) : f(field), m(rows) {}

  bool reduce(std::vector<int>& v) const {
    for (size_t t = 0; t < reduced.size(); ++t) {
      const int x = v[pivots[t]];
      if (x == 0) continue;
      const std::vector<int>& r = reduced[t];
      const int factor = f.div(x, r[pivots[t]]);
      for (int i = 0; i < m; ++i) v[i] = f.sub(v[i], f.mul(factor, r[i]));
    }
    for (int i = 0; i < m; ++i)
      if (v[i] != 0) return true;
    return false;
  }

  void push(std::vector<int> v) {
    int piv = -1;
    for (int i = 0; i < m; ++i)
      if (v[i] != 0) {
        piv = i;
        break;
      }
    reduced.push_back(std::move(v));
    pivots.push_back(piv);
  }

  void pop() {
    reduced.pop_back();
    pivots.pop_back();
  }
};

}  // namespace

MinDistance min_distance(const Matrix& pcm, int cap) {
  if (cap < 1) throw std::invalid_argument("min_distance cap must be >= 1");
  const Field& f = *pcm.field();
  const int n = pcm.cols();
  const int m = pcm.rows();
  long long steps = 0;

  std::vector<std::vector<int>> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = pcm.col(j);

  // Level w: enumerate independent (w-1)-subsets, then look for one more
  // column inside their span. Any dependent subset of size <= cap has an
  // independent prefix of one of these shapes, so the first hit is exact.
  for (int w = 1; w <= cap; ++w) {
    Eliminator elim(f, m);
    bool found = false;
    std::vector<int> chosen;

    auto rec = [&](auto&& self, int start) -> void {
      if (found) return;
      if (static_cast<int>(chosen.size()) == w - 1) {
        for (int j = start; j < n && !found; ++j) {
          if (++steps > kStepBudget) throw budget_error("min_distance step budget exceeded");
          std::vector<int> v = cols[j];
          if (!elim.reduce(v)) found = true;
        }
        return;
      }
      for (int j = start; j < n && !found; ++j) {
        if (++steps > kStepBudget) throw budget_error("min_distance step budget exceeded");
        std::vector<int> v = cols[j];
        if (!elim.reduce(v)) continue;  // dependent prefixes were covered at lower w
        elim.push(std::move(v));
        chosen.push_back(j);
        self(self, j + 1);
        chosen.pop_back();
        elim.pop();
      }
    };
    rec(rec, 0);
    if (found) return {w, cap};
  }
  return {std::nullopt, cap};
}

std::map<int, long long> dual_weight_set(const Matrix& pcm) {
  const Field& f = *pcm.field();
  const int q = f.q();
  const int n = pcm.cols();

  const Echelon ech = pcm.echelon();
  const int r = ech.rank;
  long long total = 1;
  for (int i = 0; i < r; ++i) {
    total *= q;
    if (total > 10'000'000) throw budget_error("dual enumeration bound q^rank > 10^7 exceeded");
  }

  std::vector<std::vector<int>> basis(r);
  for (int i = 0; i < r; ++i) basis[i] = ech.reduced.row(i);

  // Odometer over coefficient vectors; each digit change applies one scaled
  // row delta, so the work per step is O(n) amortized.
  std::vector<int> digits(r, 0);
  std::vector<int> cur(n, 0);
  int weight = 0;
  std::map<int, long long> dist;
  dist[0] = 1;

  auto apply_delta = [&](int row, int delta) {
    if (delta == 0) return;
    const std::vector<int>& b = basis[row];
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const int before = cur[j];
      const int after = f.add(before, f.mul(delta, b[j]));
      cur[j] = after;
      weight += (after != 0) - (before != 0);
    }
  };

  for (long long c = 1; c < total; ++c) {
    int pos = 0;
    while (true) {
      const int old = digits[pos];
      const int next = old + 1 == q ? 0 : old + 1;
      digits[pos] = next;
      apply_delta(pos, f.sub(next, old));
      if (next != 0) break;
      ++pos;
    }
    ++dist[weight];
  }
  return dist;
}

int external_distance(const Matrix& pcm) {
  const auto dist = dual_weight_set(pcm);
  int s = 0;
  for (const auto& [w, cnt] : dist)
    if (w != 0) ++s;
  return s;
}

CodeSummary summarize(const LinearCode& code, const MinDistance& md,
                      const std::map<int, long long>& dual_weights,
                      const CosetTable& table, const UpResult& up) {
  CodeSummary s;
  s.n = code.n;
  s.k = code.k;
  s.d = md.d;
  s.d_cap = md.cap;
  if (md.d) s.e = (*md.d - 1) / 2;
  s.rho = table.rho;
  for (const auto& [w, cnt] : dual_weights)
    if (w != 0) s.dual_weights.push_back(w);
  s.s = static_cast<int>(s.dual_weights.size());
  if (s.e) {
    s.perfect = (*s.e == s.rho);
    s.quasi_perfect = (*s.e == s.rho - 1);
    s.s_is_e_plus_1 = (s.s == *s.e + 1);
  }
  if (up.status == UpResult::Status::uniform) {
    s.up = up.params;
    s.uniformly_packed = true;
  }
  return s;
}

}  // namespace suppcode
