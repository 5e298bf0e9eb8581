#include "suppcode/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "suppcode/errors.hpp"

namespace suppcode {

std::vector<int> apply_syndrome_map(const SyndromeMap& map, std::span<const int> digits) {
  const Field& f = *map.mat.field();
  std::vector<int> v(digits.begin(), digits.end());
  for (int k = 0; k < map.frob; ++k)
    for (int& x : v) x = f.frob(x);
  return map.mat.mul_vec(v);
}

InducedActionResult induced_column_action(const SyndromeMap& map, const PointSet& pts) {
  const Field& f = *pts.field;
  InducedActionResult res;
  MonomialAction act;
  const int n = static_cast<int>(pts.indices.size());
  act.perm.resize(n);
  act.scale.resize(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> v = point_vector(f, pts.m, pts.indices[i]);
    const std::vector<int> w = apply_syndrome_map(map, v);
    const NormalizedPoint np = normalize_point(f, w);
    const int pos = pts.position(np.index);
    if (pos < 0) {
      res.violating_point = pts.indices[i];
      return res;
    }
    act.perm[i] = pos;
    act.scale[i] = np.scale;
  }
  res.action = std::move(act);
  return res;
}

std::vector<int> apply_monomial(const Field& f, const MonomialAction& act,
                                std::span<const int> x) {
  std::vector<int> y(x.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) y[act.perm[i]] = f.mul(act.scale[i], x[i]);
  return y;
}

Matrix apply_dual_monomial(const Matrix& pcm, const MonomialAction& act) {
  const Field& f = *pcm.field();
  Matrix out(pcm.field(), pcm.rows(), pcm.cols());
  for (int j = 0; j < pcm.cols(); ++j) {
    const int inv = f.inv(act.scale[j]);
    for (int i = 0; i < pcm.rows(); ++i) out.set(i, act.perm[j], f.mul(inv, pcm(i, j)));
  }
  return out;
}

bool dual_action_preserves_rowspace(const Matrix& pcm, const MonomialAction& act) {
  const Matrix transformed = apply_dual_monomial(pcm, act);
  return pcm.stack(transformed).rank() == pcm.rank();
}

std::vector<Matrix> gl_generators(FieldPtr field, int k) {
  std::vector<Matrix> gens;
  const int q = field->q();
  if (k == 1) {
    if (q > 2) {
      Matrix m(field, 1, 1);
      m.set(0, 0, field->primitive_element());
      gens.push_back(std::move(m));
    }
    return gens;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      Matrix m = Matrix::identity(field, k);
      m.set(i, j, 1);
      gens.push_back(std::move(m));
    }
  if (q > 2) {
    Matrix m = Matrix::identity(field, k);
    m.set(0, 0, field->primitive_element());
    gens.push_back(std::move(m));
  }
  return gens;
}

std::vector<SyndromeMap> hkmn_generators(FieldPtr field, int m, int u) {
  if (u < 1 || u > m - 1) throw std::invalid_argument("hkmn_generators requires 1 <= u <= m-1");
  const int p = field->p();
  std::vector<SyndromeMap> gens;

  auto embed = [&](const Matrix& block, int at) {
    Matrix full = Matrix::identity(field, m);
    for (int i = 0; i < block.rows(); ++i)
      for (int j = 0; j < block.cols(); ++j) full.set(at + i, at + j, block(i, j));
    return full;
  };

  for (const Matrix& k : gl_generators(field, u))
    gens.push_back({embed(k, 0), 0, "hkmn"});
  for (const Matrix& mm : gl_generators(field, m - u))
    gens.push_back({embed(mm, u), 0, "hkmn"});
  // Off-diagonal block: one additive-basis entry at a time generates all of it.
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < m - u; ++j) {
      int val = 1;
      for (int t = 0; t < field->e(); ++t) {
        Matrix full = Matrix::identity(field, m);
        full.set(i, u + j, val);
        gens.push_back({std::move(full), 0, "hkmn"});
        val *= p;  // code of x^(t+1)
      }
    }

  const PointSet side_b = embedded_hamming_pair(field, m, u).set_b;
  for (const SyndromeMap& g : gens)
    if (!induced_column_action(g, side_b).action)
      throw std::logic_error("hkmn generator fails to stabilize the family point set");
  return gens;
}

std::optional<SyndromeMap> scalar_map(FieldPtr field, int m) {
  if (field->q() == 2) return std::nullopt;
  Matrix mat = Matrix::identity(field, m);
  const int lambda = field->primitive_element();
  for (int i = 0; i < m; ++i) mat.set(i, i, lambda);
  return SyndromeMap{std::move(mat), 0, "scalar"};
}

std::optional<SyndromeMap> frobenius_map(const PointSet& pts) {
  if (pts.field->prime_field()) return std::nullopt;
  SyndromeMap map{Matrix::identity(pts.field, pts.m), 1, "frobenius"};
  if (!induced_column_action(map, pts).action) return std::nullopt;
  return map;
}

StabilizerResult stabilizer_search(const PointSet& pts, long long budget) {
  const Field& f = *pts.field;
  FieldPtr fp = pts.field;
  const int m = pts.m;
  const int q = f.q();
  const long long n_points = projective_count(q, m);

  std::vector<char> cls(n_points);
  std::vector<std::vector<int>> reps(n_points);
  std::vector<std::vector<int>> class_members(2);
  for (long long i = 0; i < n_points; ++i) {
    cls[i] = pts.contains(i) ? 0 : 1;
    reps[i] = point_vector(f, m, i);
    class_members[cls[i]].push_back(static_cast<int>(i));
  }

  // Basis: greedy independent points, smaller class first; falls back to a
  // mixed basis when the smaller class does not span.
  const int prefer =
      class_members[0].size() <= class_members[1].size() || class_members[1].empty() ? 0 : 1;
  std::vector<int> basis;
  {
    std::vector<std::vector<int>> chosen;
    for (int klass : {prefer, 1 - prefer}) {
      for (int pt : class_members[klass]) {
        if (static_cast<int>(basis.size()) == m) break;
        std::vector<std::vector<int>> rows = chosen;
        rows.push_back(reps[pt]);
        if (Matrix::from_rows(fp, rows).rank() == static_cast<int>(rows.size())) {
          chosen = std::move(rows);
          basis.push_back(pt);
        }
      }
      if (static_cast<int>(basis.size()) == m) break;
    }
    if (static_cast<int>(basis.size()) != m)
      throw std::logic_error("projective points fail to span the ambient space");
  }

  Matrix p_mat(fp, m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) p_mat.set(i, j, reps[basis[j]][i]);
  const Matrix basis_inv = p_mat.inverse();

  // Group the points by the highest basis coordinate in their expansion: at
  // search depth t exactly the level-(t+1) points acquire determined images.
  struct LevelPoint {
    std::vector<int> coeff;
    char klass;
  };
  std::vector<std::vector<LevelPoint>> levels(m + 1);
  for (long long i = 0; i < n_points; ++i) {
    const std::vector<int> coeff = basis_inv.mul_vec(reps[i]);
    int level = 0;
    for (int t = 0; t < m; ++t)
      if (coeff[t] != 0) level = t + 1;
    levels[level].push_back({coeff, cls[i]});
  }

  StabilizerResult result;
  std::vector<std::vector<int>> imgs(m);
  std::vector<std::vector<int>> reduced;
  std::vector<int> pivots;
  bool over_budget = false;

  auto independent = [&](const std::vector<int>& v, std::vector<int>& red) {
    red = v;
    for (size_t t = 0; t < reduced.size(); ++t) {
      const int x = red[pivots[t]];
      if (x == 0) continue;
      const int factor = f.div(x, reduced[t][pivots[t]]);
      for (int i = 0; i < m; ++i) red[i] = f.sub(red[i], f.mul(factor, reduced[t][i]));
    }
    for (int i = 0; i < m; ++i)
      if (red[i] != 0) return true;
    return false;
  };

  std::vector<int> image(m);
  auto rec = [&](auto&& self, int depth) -> void {
    if (over_budget) return;
    if (depth == m) {
      Matrix w(fp, m, m);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) w.set(i, j, imgs[j][i]);
      SyndromeMap cand{w * basis_inv, 0, "stabilizer_search"};
      if (!induced_column_action(cand, pts).action)
        throw std::logic_error("stabilizer search leaf failed re-verification");
      result.generators.push_back(std::move(cand));
      return;
    }
    const char want = cls[basis[depth]];
    // The first image is pinned to scalar 1: global scalars are added back
    // as explicit generators, so the full stabilizer is still generated.
    const int max_scalar = depth == 0 ? 1 : q - 1;
    for (int rep_pt : class_members[want]) {
      for (int s = 1; s <= max_scalar; ++s) {
        if (++result.nodes > budget) {
          over_budget = true;
          return;
        }
        std::vector<int> w(m);
        for (int i = 0; i < m; ++i) w[i] = f.mul(s, reps[rep_pt][i]);
        std::vector<int> red;
        if (!independent(w, red)) continue;
        imgs[depth] = w;
        bool ok = true;
        for (const LevelPoint& lp : levels[depth + 1]) {
          for (int i = 0; i < m; ++i) {
            int acc = 0;
            for (int t = 0; t <= depth; ++t)
              if (lp.coeff[t] != 0) acc = f.add(acc, f.mul(lp.coeff[t], imgs[t][i]));
            image[i] = acc;
          }
          const NormalizedPoint np = normalize_point(f, image);
          if (cls[np.index] != lp.klass) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        int piv = 0;
        while (red[piv] == 0) ++piv;
        reduced.push_back(red);
        pivots.push_back(piv);
        self(self, depth + 1);
        reduced.pop_back();
        pivots.pop_back();
        if (over_budget) return;
      }
    }
  };
  rec(rec, 0);
  result.exhaustive = !over_budget;
  return result;
}

OrbitPartition orbits(std::span<const SyndromeMap> generators, const CosetTable& table,
                      const PointSet& pts) {
  for (const SyndromeMap& g : generators)
    if (!induced_column_action(g, pts).action)
      throw std::invalid_argument("orbit generator does not stabilize the point set");

  std::vector<int32_t> parent(table.size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (const SyndromeMap& g : generators) {
    for (long long s = 0; s < table.size; ++s) {
      if (table.weights[s] < 0) continue;
      const std::vector<int> digits = table.syndrome_digits(s);
      const long long img = table.syndrome_value(apply_syndrome_map(g, digits));
      if (table.weights[img] != table.weights[s])
        throw std::logic_error("automorphism changed a coset weight");
      const int32_t a = find(static_cast<int32_t>(s));
      const int32_t b = find(static_cast<int32_t>(img));
      if (a != b) parent[a] = b;
    }
  }

  OrbitPartition out;
  for (long long s = 0; s < table.size; ++s) {
    if (table.weights[s] < 0) continue;
    if (find(static_cast<int32_t>(s)) == s) {
      ++out.orbit_count;
      ++out.per_weight[table.weights[s]];
    }
  }
  return out;
}

namespace {

CtReport certify_with_generators(std::vector<SyndromeMap> gens, bool exhaustive,
                                 long long nodes, const PointSet& pts,
                                 const CosetTable& table, const CtOptions& opts) {
  const Field& f = *pts.field;
  std::vector<std::string> sources;
  for (const SyndromeMap& g : gens)
    if (std::find(sources.begin(), sources.end(), g.provenance) == sources.end())
      sources.push_back(g.provenance);

  if (opts.add_scalars)
    if (auto sc = scalar_map(pts.field, pts.m)) {
      gens.push_back(*sc);
      sources.push_back("scalar");
    }
  if (opts.add_frobenius)
    if (auto fr = frobenius_map(pts)) {
      gens.push_back(*fr);
      sources.push_back("frobenius");
    }

  CtReport report;
  report.rho = table.rho;
  report.nodes = nodes;
  report.exhaustive = exhaustive;
  report.generator_count = static_cast<long long>(gens.size());
  for (size_t i = 0; i < sources.size(); ++i)
    report.provenance += (i ? "+" : "") + sources[i];

  const OrbitPartition orb = orbits(gens, table, pts);
  report.orbit_count = orb.orbit_count;
  report.orbits_per_weight = orb.per_weight;
  if (opts.keep_generators) report.generators = gens;

  const bool prime = f.prime_field();
  const bool full_rank = pts.rank() == pts.m;
  // the search pins the first basis image modulo scalars, so a negative
  // verdict needs the scalar generators back in the set
  const bool scalars_covered = opts.add_scalars || f.q() == 2;
  if (orb.orbit_count == table.rho + 1) {
    report.status = CtStatus::certified_yes;
  } else if (exhaustive && prime && full_rank && scalars_covered) {
    report.status = CtStatus::certified_no;
  } else {
    report.status = CtStatus::unknown;
    report.caveat_nonprime_q = !prime && orb.orbit_count > table.rho + 1;
  }
  return report;
}

}  // namespace

CtReport certify_ct(const PointSet& pts, const CosetTable& table, const CtOptions& opts) {
  if (opts.generators == CtOptions::Generators::hkmn)
    throw std::invalid_argument("family generators need the embedded-Hamming pair");
  StabilizerResult sr = stabilizer_search(pts, opts.budget);
  return certify_with_generators(std::move(sr.generators), sr.exhaustive, sr.nodes, pts, table,
                                 opts);
}

CtReport certify_ct(const SupplementaryPair& pair, bool side_b, const CosetTable& table,
                    const CtOptions& opts) {
  const PointSet& target = side_b ? pair.set_b : pair.set_a;
  const bool want_hkmn = opts.generators == CtOptions::Generators::hkmn ||
                         (opts.generators == CtOptions::Generators::automatic &&
                          pair.layout.has_value());
  if (want_hkmn) {
    if (!pair.layout) throw std::invalid_argument("family generators need the embedded-Hamming pair");
    std::vector<SyndromeMap> gens = hkmn_generators(pair.field, pair.layout->m, pair.layout->u);
    // the family group is a known subgroup: never a basis for a negative verdict
    return certify_with_generators(std::move(gens), false, 0, target, table, opts);
  }
  return certify_ct(target, table, opts);
}

std::vector<SyndromeMap> subgroup_embed(std::span<const SyndromeMap> generators_for_a,
                                        const SupplementaryPair& pair) {
  for (const SyndromeMap& g : generators_for_a)
    if (!induced_column_action(g, pair.set_a).action)
      throw std::invalid_argument("generator does not stabilize side A");
  std::vector<SyndromeMap> out(generators_for_a.begin(), generators_for_a.end());
  for (SyndromeMap& g : out) {
    if (!induced_column_action(g, pair.set_b).action)
      throw std::logic_error("side-A stabilizer fails on the complement; this is a bug");
    g.provenance += "+embedded";
  }
  return out;
}

}  // namespace suppcode
