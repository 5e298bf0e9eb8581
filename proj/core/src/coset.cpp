#include "suppcode/coset.hpp"

#include <deque>
#include <stdexcept>

#include "suppcode/errors.hpp"
#include "suppcode/projective.hpp"

namespace suppcode {

namespace {

// Scaled column syndromes as digit vectors: entry(j, a) holds a * h_j.
struct ColumnSyndromes {
  int rows, n, q;
  std::vector<int> digits;

  ColumnSyndromes(const Matrix& pcm, const Field& f)
      : rows(pcm.rows()), n(pcm.cols()), q(f.q()) {
    digits.resize(static_cast<size_t>(n) * (q - 1) * rows);
    for (int j = 0; j < n; ++j)
      for (int a = 1; a < q; ++a) {
        int* d = entry(j, a);
        for (int i = 0; i < rows; ++i) d[i] = f.mul(a, pcm(i, j));
      }
  }

  int* entry(int col, int scalar) {
    return digits.data() + (static_cast<size_t>(col) * (q - 1) + (scalar - 1)) * rows;
  }
  const int* entry(int col, int scalar) const {
    return digits.data() + (static_cast<size_t>(col) * (q - 1) + (scalar - 1)) * rows;
  }
};

long long checked_syndrome_space(const Field& f, int rows) {
  long long size = 1;
  for (int i = 0; i < rows; ++i) {
    size *= f.q();
    if (size > 10'000'000) throw budget_error("syndrome space q^rows > 10^7 exceeded");
  }
  return size;
}

std::vector<long long> syndrome_powers(int q, int rows) {
  std::vector<long long> qpow(rows);
  long long p = 1;
  for (int i = rows - 1; i >= 0; --i) {
    qpow[i] = p;
    p *= q;
  }
  return qpow;
}

}  // namespace

long long syndrome_of(const Matrix& pcm, std::span<const int> x) {
  return vector_value(pcm.field()->q(), pcm.mul_vec(x));
}

std::vector<int> CosetTable::syndrome_digits(long long syn) const {
  const int q = field->q();
  std::vector<int> d(rows);
  for (int i = rows - 1; i >= 0; --i) {
    d[i] = static_cast<int>(syn % q);
    syn /= q;
  }
  return d;
}

long long CosetTable::syndrome_value(std::span<const int> digits) const {
  return vector_value(field->q(), digits);
}

long long CosetTable::negate_syndrome(long long syn) const {
  const Field& f = *field;
  std::vector<int> d = syndrome_digits(syn);
  for (int& x : d) x = f.neg(x);
  return syndrome_value(d);
}

std::vector<int> CosetTable::leader(const Matrix& pcm, long long syn) const {
  if (syn < 0 || syn >= size || weights[syn] < 0)
    throw std::invalid_argument("no coset leader: syndrome unreachable");
  const Field& f = *field;
  std::vector<int> x(n, 0);
  std::vector<int> digits = syndrome_digits(syn);
  long long cur = syn;
  while (cur != 0) {
    const auto [col, scalar] = back[cur];
    x[col] = f.add(x[col], scalar);
    for (int i = 0; i < rows; ++i) digits[i] = f.sub(digits[i], f.mul(scalar, pcm(i, col)));
    cur = syndrome_value(digits);
  }
  return x;
}

CosetTable coset_weights(const Matrix& pcm) {
  CosetTable t;
  t.field = pcm.field();
  t.rows = pcm.rows();
  t.n = pcm.cols();
  t.size = checked_syndrome_space(*t.field, t.rows);

  const Field& f = *t.field;
  const int q = f.q();
  const ColumnSyndromes cs(pcm, f);
  const std::vector<long long> qpow = syndrome_powers(q, t.rows);

  t.weights.assign(t.size, -1);
  t.back.assign(t.size, {-1, 0});
  t.weights[0] = 0;

  std::deque<long long> frontier{0};
  std::vector<int> digits(t.rows);
  while (!frontier.empty()) {
    const long long s = frontier.front();
    frontier.pop_front();
    const int l = t.weights[s];
    long long rem = s;
    for (int i = t.rows - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rem % q);
      rem /= q;
    }
    for (int j = 0; j < t.n; ++j)
      for (int a = 1; a < q; ++a) {
        const int* cd = cs.entry(j, a);
        long long target = 0;
        for (int i = 0; i < t.rows; ++i) target += qpow[i] * f.add(digits[i], cd[i]);
        if (t.weights[target] < 0) {
          t.weights[target] = static_cast<int16_t>(l + 1);
          t.back[target] = {j, static_cast<uint16_t>(a)};
          frontier.push_back(target);
        }
      }
  }

  for (long long s = 0; s < t.size; ++s) {
    if (t.weights[s] < 0)
      ++t.unreachable;
    else
      ++t.census[t.weights[s]];
  }
  t.rho = t.census.rbegin()->first;
  return t;
}

std::map<int, boost::multiprecision::cpp_int> subconstituent_sizes(const CosetTable& table,
                                                                   long long k) {
  boost::multiprecision::cpp_int codewords = 1;
  for (long long i = 0; i < k; ++i) codewords *= table.field->q();
  std::map<int, boost::multiprecision::cpp_int> out;
  for (const auto& [w, cnt] : table.census) out[w] = codewords * cnt;
  return out;
}

NeighborProfile neighbor_profile(const Matrix& pcm, const CosetTable& table, long long syn) {
  if (syn < 0 || syn >= table.size || table.weights[syn] < 0)
    throw std::invalid_argument("syndrome unreachable");
  const Field& f = *table.field;
  const int q = f.q();
  const ColumnSyndromes cs(pcm, f);
  const std::vector<long long> qpow = syndrome_powers(q, table.rows);
  const std::vector<int> digits = table.syndrome_digits(syn);

  const int l = table.weights[syn];
  NeighborProfile prof;
  for (int j = 0; j < table.n; ++j)
    for (int a = 1; a < q; ++a) {
      const int* cd = cs.entry(j, a);
      long long target = 0;
      for (int i = 0; i < table.rows; ++i) target += qpow[i] * f.add(digits[i], cd[i]);
      const int l2 = table.weights[target];
      if (l2 == l - 1)
        ++prof.c;
      else if (l2 == l)
        ++prof.a;
      else
        ++prof.b;
    }
  return prof;
}

CrResult complete_regularity(const Matrix& pcm, const CosetTable& table) {
  const Field& f = *table.field;
  const int q = f.q();
  const ColumnSyndromes cs(pcm, f);
  const std::vector<long long> qpow = syndrome_powers(q, table.rows);

  struct ClassInfo {
    bool seen = false;
    NeighborProfile profile;
    long long representative = 0;
  };
  std::vector<ClassInfo> classes(table.rho + 1);

  std::vector<int> digits(table.rows);
  for (long long s = 0; s < table.size; ++s) {
    const int l = table.weights[s];
    if (l < 0) continue;
    long long rem = s;
    for (int i = table.rows - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rem % q);
      rem /= q;
    }
    NeighborProfile prof;
    for (int j = 0; j < table.n; ++j)
      for (int a = 1; a < q; ++a) {
        const int* cd = cs.entry(j, a);
        long long target = 0;
        for (int i = 0; i < table.rows; ++i) target += qpow[i] * f.add(digits[i], cd[i]);
        const int l2 = table.weights[target];
        if (l2 == l - 1)
          ++prof.c;
        else if (l2 == l)
          ++prof.a;
        else
          ++prof.b;
      }
    ClassInfo& cls = classes[l];
    if (!cls.seen) {
      cls.seen = true;
      cls.profile = prof;
      cls.representative = s;
    } else if (!(cls.profile == prof)) {
      CrResult res;
      res.is_cr = false;
      res.witness = CrWitness{l, cls.representative, s, cls.profile, prof};
      return res;
    }
  }

  CrResult res;
  res.is_cr = true;
  IntersectionArray ia;
  const long long degree = static_cast<long long>(q - 1) * table.n;
  for (int l = 0; l < table.rho; ++l) ia.b.push_back(classes[l].profile.b);
  for (int l = 1; l <= table.rho; ++l) ia.c.push_back(classes[l].profile.c);
  for (int l = 0; l <= table.rho; ++l) {
    const long long bl = l < table.rho ? ia.b[l] : 0;
    const long long cl = l >= 1 ? ia.c[l - 1] : 0;
    ia.a.push_back(degree - bl - cl);
  }
  res.ia = std::move(ia);
  return res;
}

std::map<int, long long> low_weight_codewords(
    const Matrix& pcm, int wmax,
    const std::function<void(const std::vector<int>&, long long)>& on_support) {
  if (wmax < 0) throw std::invalid_argument("wmax must be >= 0");
  const Field& f = *pcm.field();
  const int q = f.q();
  const int n = pcm.cols();
  const int m = pcm.rows();

  std::map<int, long long> counts;
  counts[0] = 1;
  long long steps = 0;
  constexpr long long kBudget = 2'000'000'000;

  std::vector<std::vector<int>> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = pcm.col(j);

  // Vectors with all coordinates nonzero in the null space of the chosen
  // columns; their exact support is the chosen subset.
  auto count_full_support = [&](const std::vector<int>& chosen) -> long long {
    const int w = static_cast<int>(chosen.size());
    const Matrix ker = pcm.select_cols(chosen).kernel_basis();
    const int t = ker.rows();
    if (t == 0) return 0;
    long long combos = 1;
    for (int i = 0; i < t; ++i) combos *= q;
    steps += combos * w;
    if (steps > kBudget) throw budget_error("low_weight_codewords budget exceeded");
    long long full = 0;
    std::vector<int> coeff(t, 0);
    std::vector<int> value(w, 0);
    for (long long c = 1; c < combos; ++c) {
      int pos = 0;
      while (true) {
        const int old = coeff[pos];
        const int next = old + 1 == q ? 0 : old + 1;
        coeff[pos] = next;
        const int delta = f.sub(next, old);
        for (int j = 0; j < w; ++j)
          if (ker(pos, j) != 0) value[j] = f.add(value[j], f.mul(delta, ker(pos, j)));
        if (next != 0) break;
        ++pos;
      }
      bool ok = true;
      for (int j = 0; j < w && ok; ++j) ok = value[j] != 0;
      if (ok) ++full;
    }
    return full;
  };

  // Depth-first subset enumeration with incremental elimination; only
  // subsets with positive nullity can carry a codeword, so leaves with
  // independent columns cost nothing extra.
  std::vector<int> chosen;
  std::vector<std::vector<int>> reduced;
  std::vector<int> pivots;
  int nullity = 0;

  auto reduce_copy = [&](const std::vector<int>& col, std::vector<int>& out) -> bool {
    out = col;
    for (size_t t = 0; t < reduced.size(); ++t) {
      const int x = out[pivots[t]];
      if (x == 0) continue;
      const int factor = f.div(x, reduced[t][pivots[t]]);
      for (int i = 0; i < m; ++i) out[i] = f.sub(out[i], f.mul(factor, reduced[t][i]));
    }
    for (int i = 0; i < m; ++i)
      if (out[i] != 0) return true;
    return false;
  };

  auto rec = [&](auto&& self, int start) -> void {
    const int w = static_cast<int>(chosen.size());
    if (w > 0 && nullity > 0) {
      const long long full = count_full_support(chosen);
      if (full > 0) {
        counts[w] += full;
        if (on_support) on_support(chosen, full);
      }
    }
    if (w == wmax) return;
    for (int j = start; j < n; ++j) {
      if (++steps > kBudget) throw budget_error("low_weight_codewords budget exceeded");
      std::vector<int> red;
      const bool indep = reduce_copy(cols[j], red);
      chosen.push_back(j);
      if (indep) {
        int piv = 0;
        while (red[piv] == 0) ++piv;
        reduced.push_back(std::move(red));
        pivots.push_back(piv);
        self(self, j + 1);
        reduced.pop_back();
        pivots.pop_back();
      } else {
        ++nullity;
        self(self, j + 1);
        --nullity;
      }
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return counts;
}

UpResult up_params(const Matrix& pcm, const CosetTable& table, int e) {
  UpResult res;
  if (e < 0 || table.rho != e + 1) {
    res.status = UpResult::Status::not_applicable;
    return res;
  }
  const Field& f = *table.field;
  const int q = f.q();
  const int n = table.n;
  const int w = e + 1;

  const ColumnSyndromes cs(pcm, f);
  std::vector<long long> tally(table.size, 0);
  long long steps = 0;
  constexpr long long kBudget = 1'000'000'000;

  // One digit buffer per recursion depth.
  std::vector<std::vector<int>> syn(w + 1, std::vector<int>(table.rows, 0));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == w) {
      ++tally[table.syndrome_value(syn[w])];
      return;
    }
    for (int j = start; j < n; ++j)
      for (int a = 1; a < q; ++a) {
        if (++steps > kBudget) throw budget_error("up_params enumeration budget exceeded");
        const int* cd = cs.entry(j, a);
        for (int i = 0; i < table.rows; ++i) syn[depth + 1][i] = f.add(syn[depth][i], cd[i]);
        self(self, j + 1, depth + 1);
      }
  };
  rec(rec, 0, 0);

  struct Slot {
    bool seen = false;
    long long count = 0;
    long long representative = 0;
  };
  Slot lambda, mu;
  for (long long s = 0; s < table.size; ++s) {
    const int l = table.weights[s];
    if (l != e && l != e + 1) continue;
    const long long count = tally[table.negate_syndrome(s)];
    Slot& slot = (l == e) ? lambda : mu;
    if (!slot.seen) {
      slot = {true, count, s};
    } else if (slot.count != count) {
      res.status = UpResult::Status::not_uniform;
      res.witness = UpWitness{l, slot.representative, s, slot.count, count};
      return res;
    }
  }
  res.status = UpResult::Status::uniform;
  res.params = UpParams{lambda.count, mu.count};
  return res;
}

bool graph_identity_check(const CosetTable& table, const IntersectionArray& ia) {
  for (int i = 0; i < table.rho; ++i) {
    const auto ci = table.census.find(i);
    const auto cj = table.census.find(i + 1);
    const long long size_i = ci == table.census.end() ? 0 : ci->second;
    const long long size_j = cj == table.census.end() ? 0 : cj->second;
    if (ia.b[i] * size_i != ia.c[i] * size_j) return false;
  }
  return true;
}

}  // namespace suppcode
