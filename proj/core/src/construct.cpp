#include "suppcode/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "suppcode/errors.hpp"
#include "suppcode/pcm_io.hpp"

namespace suppcode {

namespace {

long long ipow(int q, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

}  // namespace

bool PointSet::contains(long long index) const {
  return std::binary_search(indices.begin(), indices.end(), index);
}

int PointSet::position(long long index) const {
  const auto it = std::lower_bound(indices.begin(), indices.end(), index);
  if (it == indices.end() || *it != index) return -1;
  return static_cast<int>(it - indices.begin());
}

Matrix PointSet::to_pcm() const {
  Matrix out(field, m, static_cast<int>(indices.size()));
  for (int j = 0; j < static_cast<int>(indices.size()); ++j) {
    const std::vector<int> v = point_vector(*field, m, indices[j]);
    for (int i = 0; i < m; ++i) out.set(i, j, v[i]);
  }
  return out;
}

int PointSet::rank() const { return to_pcm().rank(); }

Matrix hamming_pcm(FieldPtr field, int m) {
  if (m < 2) throw std::invalid_argument("hamming_pcm requires m >= 2");
  long long qm = 1;
  for (int i = 0; i < m; ++i) {
    qm *= field->q();
    if (qm > 10'000'000) throw budget_error("hamming_pcm bound q^m > 10^7 exceeded");
  }
  const long long n = projective_count(field->q(), m);
  Matrix out(field, m, static_cast<int>(n));
  for (long long j = 0; j < n; ++j) {
    const std::vector<int> v = point_vector(*field, m, j);
    for (int i = 0; i < m; ++i) out.set(i, static_cast<int>(j), v[i]);
  }
  return out;
}

long long BlockLayout::n_u() const { return projective_count(field->q(), u); }

long long BlockLayout::block_count() const { return ipow(field->q(), m - u) + 1; }

long long BlockLayout::block_of_point(long long point_index) const {
  const std::vector<int> v = point_vector(*field, m, point_index);
  const int q = field->q();
  bool top_zero = true;
  for (int i = 0; i < u; ++i) top_zero &= v[i] == 0;
  long long bottom = 0;
  for (int i = u; i < m; ++i) bottom = bottom * q + v[i];
  if (top_zero) return ipow(q, m - u);  // final block
  return bottom;                        // 0 when the bottom part vanishes
}

std::vector<long long> BlockLayout::form_point_order() const {
  const Field& f = *field;
  const int q = f.q();
  const long long nu = n_u();
  const long long blocks = ipow(q, m - u);
  std::vector<long long> order;
  order.reserve(projective_count(q, m));
  std::vector<int> v(m, 0);
  for (long long g = 0; g < blocks; ++g) {
    // bottom part: digits of g, row u most significant
    std::vector<int> bottom(m - u);
    long long rem = g;
    for (int i = m - u - 1; i >= 0; --i) {
      bottom[i] = static_cast<int>(rem % q);
      rem /= q;
    }
    for (long long t = 0; t < nu; ++t) {
      const std::vector<int> top = point_vector(f, u, t);
      for (int i = 0; i < u; ++i) v[i] = top[i];
      for (int i = u; i < m; ++i) v[i] = bottom[i - u];
      order.push_back(point_index(f, v));
    }
  }
  const long long nmu = projective_count(q, m - u);
  for (long long t = 0; t < nmu; ++t) {
    const std::vector<int> bottom = point_vector(f, m - u, t);
    std::fill(v.begin(), v.begin() + u, 0);
    for (int i = u; i < m; ++i) v[i] = bottom[i - u];
    order.push_back(point_index(f, v));
  }
  return order;
}

Matrix BlockLayout::form_matrix() const {
  const std::vector<long long> order = form_point_order();
  Matrix out(field, m, static_cast<int>(order.size()));
  for (int j = 0; j < static_cast<int>(order.size()); ++j) {
    const std::vector<int> v = point_vector(*field, m, order[j]);
    for (int i = 0; i < m; ++i) out.set(i, j, v[i]);
  }
  return out;
}

namespace {

SupplementaryPair pair_from_sets(FieldPtr field, int m, std::vector<long long> a_idx) {
  const long long n_m = projective_count(field->q(), m);
  std::sort(a_idx.begin(), a_idx.end());
  PointSet set_a{field, m, std::move(a_idx)};
  std::vector<long long> b_idx;
  b_idx.reserve(n_m - set_a.count());
  size_t ai = 0;
  for (long long i = 0; i < n_m; ++i) {
    if (ai < set_a.indices.size() && set_a.indices[ai] == i) {
      ++ai;
      continue;
    }
    b_idx.push_back(i);
  }
  PointSet set_b{field, m, std::move(b_idx)};
  Matrix pcm_a = set_a.to_pcm();
  Matrix pcm_b = set_b.to_pcm();
  return SupplementaryPair{field,           m,
                           std::move(set_a), std::move(set_b),
                           std::move(pcm_a), std::move(pcm_b),
                           "",              std::nullopt,
                           "",              {}};
}

}  // namespace

SupplementaryPair partition(FieldPtr field, int m, std::span<const long long> indices_a) {
  if (m < 2) throw std::invalid_argument("partition requires m >= 2");
  const long long n_m = projective_count(field->q(), m);
  if (indices_a.empty()) throw std::invalid_argument("side A must be non-empty");
  std::vector<long long> idx(indices_a.begin(), indices_a.end());
  std::sort(idx.begin(), idx.end());
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= n_m)
      throw std::invalid_argument("point index " + std::to_string(idx[i]) + " out of range");
    if (i > 0 && idx[i] == idx[i - 1])
      throw std::invalid_argument("duplicate point index " + std::to_string(idx[i]));
  }
  if (static_cast<long long>(idx.size()) >= n_m)
    throw std::invalid_argument("side A must be a strict subset of the point set");
  return pair_from_sets(std::move(field), m, std::move(idx));
}

SupplementaryPair supplementary(const SupplementaryPair& pair) {
  SupplementaryPair out = pair;
  std::swap(out.set_a, out.set_b);
  std::swap(out.pcm_a, out.pcm_b);
  return out;
}

SupplementaryPair embedded_hamming_pair(FieldPtr field, int m, int u) {
  if (u < 1 || u > m - 1) throw std::invalid_argument("embedded_hamming_pair requires 1 <= u <= m-1");
  const Field& f = *field;
  const long long nu = projective_count(f.q(), u);
  // Side A: canonical points whose last m-u coordinates vanish.
  std::vector<long long> a_idx;
  a_idx.reserve(nu);
  std::vector<int> v(m, 0);
  for (long long t = 0; t < nu; ++t) {
    const std::vector<int> top = point_vector(f, u, t);
    for (int i = 0; i < u; ++i) v[i] = top[i];
    std::fill(v.begin() + u, v.end(), 0);
    a_idx.push_back(point_index(f, v));
  }
  SupplementaryPair pair = pair_from_sets(field, m, std::move(a_idx));
  pair.layout = BlockLayout{field, m, u};
  pair.preset_name = "buM";
  return pair;
}

EmbeddedColumns embed_columns(const Matrix& raw, int ambient_m) {
  if (raw.rows() > ambient_m)
    throw std::invalid_argument("raw pcm has more rows than the ambient redundancy");
  const Field& f = *raw.field();
  EmbeddedColumns out;
  out.trace.reserve(raw.cols());
  std::vector<long long> idx;
  std::vector<int> v(ambient_m, 0);
  std::vector<std::pair<long long, int>> seen;  // (point, first column)
  for (int j = 0; j < raw.cols(); ++j) {
    for (int i = 0; i < raw.rows(); ++i) v[i] = raw(i, j);
    std::fill(v.begin() + raw.rows(), v.end(), 0);
    bool zero = true;
    for (int x : v) zero &= x == 0;
    if (zero) throw std::invalid_argument("column " + std::to_string(j) + " is zero");
    const NormalizedPoint np = normalize_point(f, v);
    for (const auto& [p, col] : seen)
      if (p == np.index)
        throw std::invalid_argument("columns " + std::to_string(col) + " and " +
                                    std::to_string(j) + " are projectively dependent");
    seen.emplace_back(np.index, j);
    out.trace.push_back(np);
    idx.push_back(np.index);
  }
  std::sort(idx.begin(), idx.end());
  out.points = PointSet{raw.field(), ambient_m, std::move(idx)};
  return out;
}

namespace {

// [11,6,5] ternary Golay built cyclically from g(x) = 2 + x^2 + 2x^3 + x^4 + x^5;
// the parity check is a kernel basis of the generator matrix.
Matrix golay_fixture_raw() {
  FieldPtr f3 = Field::make(3);
  const std::vector<int> g = {2, 0, 1, 2, 1, 1};
  std::vector<std::vector<int>> rows(6, std::vector<int>(11, 0));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) rows[i][i + j] = g[j];
  const Matrix gen = Matrix::from_rows(f3, rows);
  return gen.kernel_basis();  // 5 x 11
}

void validate_golay(const Matrix& h) {
  if (h.rows() != 5 || h.cols() != 11 || h.rank() != 5)
    throw std::logic_error("golay fixture failed rank validation");
  const MinDistance md = min_distance(h, 5);
  if (!md.d || *md.d != 5) throw std::logic_error("golay fixture failed distance validation");
}

SupplementaryPair preset_golay3() {
  const Matrix h = ternary_golay_pcm();
  const EmbeddedColumns emb = embed_columns(h, 5);
  SupplementaryPair pair = pair_from_sets(h.field(), 5, emb.points.indices);
  pair.preset_name = "golay3";
  pair.fixture_hash = fnv1a64_hex(write_pcm(h));
  pair.embed_trace = emb.trace;
  return pair;
}

// Parity check of the punctured (last coordinate) Golay code: a basis of the
// dual words vanishing on that coordinate, padded with one zero row. The pad
// keeps the ambient redundancy at 5 while the rank stays 4, which is what
// makes dim = 6 > n - m representable.
SupplementaryPair preset_golay3_punctured() {
  const Matrix h = ternary_golay_pcm();
  FieldPtr f3 = h.field();
  // coefficients c with (c . last column) = 0
  const Matrix last_col = Matrix::from_rows(f3, {h.col(10)});
  const Matrix coeffs = last_col.kernel_basis();  // 4 x 5
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < coeffs.rows(); ++i) {
    std::vector<int> c = coeffs.row(i);
    std::vector<int> word = Matrix::from_rows(f3, {c}).operator*(h).row(0);
    word.pop_back();  // the shortened coordinate is zero
    rows.push_back(std::move(word));
  }
  rows.push_back(std::vector<int>(10, 0));
  const Matrix hp = Matrix::from_rows(f3, rows);  // 5 x 10, rank 4
  if (hp.rank() != 4) throw std::logic_error("punctured golay fixture failed rank validation");
  const MinDistance md = min_distance(hp, 4);
  if (!md.d || *md.d != 4)
    throw std::logic_error("punctured golay fixture failed distance validation");
  const EmbeddedColumns emb = embed_columns(hp, 5);
  SupplementaryPair pair = pair_from_sets(f3, 5, emb.points.indices);
  pair.preset_name = "golay3-punctured";
  pair.fixture_hash = fnv1a64_hex(write_pcm(hp));
  pair.embed_trace = emb.trace;
  return pair;
}

// Extended Golay [12,6,6]: the Golay parity check plus an all-ones sum check.
SupplementaryPair preset_golay3_extended() {
  const Matrix h = ternary_golay_pcm();
  FieldPtr f3 = h.field();
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < 5; ++i) {
    std::vector<int> r = h.row(i);
    r.push_back(0);
    rows.push_back(std::move(r));
  }
  rows.push_back(std::vector<int>(12, 1));
  const Matrix hx = Matrix::from_rows(f3, rows);  // 6 x 12
  if (hx.rank() != 6) throw std::logic_error("extended golay fixture failed rank validation");
  const MinDistance md = min_distance(hx, 6);
  if (!md.d || *md.d != 6)
    throw std::logic_error("extended golay fixture failed distance validation");
  const EmbeddedColumns emb = embed_columns(hx, 6);
  SupplementaryPair pair = pair_from_sets(f3, 6, emb.points.indices);
  pair.preset_name = "golay3-extended";
  pair.fixture_hash = fnv1a64_hex(write_pcm(hx));
  pair.embed_trace = emb.trace;
  return pair;
}

SupplementaryPair preset_binomial_7_4() {
  const Matrix h7 = binomial_7_4_pcm();
  FieldPtr f2 = h7.field();
  // The rows sum to zero, so the rank is 6; elimination keeps the row space.
  std::vector<int> colsum(h7.cols(), 0);
  for (int j = 0; j < h7.cols(); ++j) {
    int s = 0;
    for (int i = 0; i < 7; ++i) s = f2->add(s, h7(i, j));
    colsum[j] = s;
  }
  for (int v : colsum)
    if (v != 0) throw std::logic_error("binomial fixture rows do not sum to zero");
  const Echelon ech = h7.echelon();
  if (ech.rank != 6) throw std::logic_error("binomial fixture failed rank validation");
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < 6; ++i) rows.push_back(ech.reduced.row(i));
  const Matrix h6 = Matrix::from_rows(f2, rows);
  const EmbeddedColumns emb = embed_columns(h6, 6);
  SupplementaryPair pair = pair_from_sets(f2, 6, emb.points.indices);
  pair.preset_name = "binomial-7-4";
  pair.fixture_hash = fnv1a64_hex(write_pcm(h7));
  pair.embed_trace = emb.trace;
  return pair;
}

}  // namespace

Matrix ternary_golay_pcm() {
  static const Matrix h = [] {
    Matrix m = golay_fixture_raw();
    validate_golay(m);
    return m;
  }();
  return h;
}

Matrix binomial_7_4_pcm() {
  FieldPtr f2 = Field::make(2);
  std::vector<std::vector<int>> cols;
  for (int v = 0; v < 128; ++v) {
    std::vector<int> bits(7);
    int w = 0;
    for (int i = 0; i < 7; ++i) {
      bits[i] = (v >> (6 - i)) & 1;  // row 0 most significant
      w += bits[i];
    }
    if (w == 4) cols.push_back(std::move(bits));
  }
  Matrix out(f2, 7, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (int i = 0; i < 7; ++i) out.set(i, j, cols[j][i]);
  return out;
}

SupplementaryPair make_preset(const std::string& name, int q, int m, int u) {
  if (name == "golay3") return preset_golay3();
  if (name == "golay3-punctured") return preset_golay3_punctured();
  if (name == "golay3-extended") return preset_golay3_extended();
  if (name == "binomial-7-4") return preset_binomial_7_4();
  if (name == "buM") {
    if (q < 2 || m < 2) throw std::invalid_argument("buM preset needs --q and --m");
    int p = q, e = 1;
    if (!is_prime(q)) {
      // factor q = p^e
      for (p = 2; p * p <= q; ++p)
        if (q % p == 0) break;
      int qq = q;
      e = 0;
      while (qq % p == 0) {
        qq /= p;
        ++e;
      }
      if (qq != 1) throw std::invalid_argument("q must be a prime power");
    }
    return embedded_hamming_pair(Field::make(p, e), m, u);
  }
  throw std::invalid_argument("unknown preset: " + name);
}

PredictedIas predict_ias(int q, long long n_a, long long n_b, long long b1_of_a) {
  if (n_a < 1 || n_b < 1) throw std::invalid_argument("lengths must be positive");
  if ((n_a * b1_of_a) % n_b != 0)
    throw std::invalid_argument("predicted c_2 = n_A b_1 / n_B is not an integer");
  const long long c2_a = n_a * b1_of_a / n_b;
  const long long b1_b = (q - 1) * n_a - c2_a;
  const long long c2_b = (q - 1) * n_b - b1_of_a;
  if (b1_of_a < 0 || b1_b < 0 || c2_b < 0)
    throw std::invalid_argument("predicted intersection numbers are negative");

  auto build = [&](long long n, long long b1, long long c2) {
    IntersectionArray ia;
    ia.b = {(q - 1) * n, b1};
    ia.c = {1, c2};
    const long long degree = (q - 1) * n;
    ia.a = {degree - ia.b[0], degree - ia.b[1] - ia.c[0], degree - ia.c[1]};
    return ia;
  };
  return {build(n_a, b1_of_a, c2_a), build(n_b, b1_b, c2_b)};
}

std::vector<long long> weight3_incidence(const SupplementaryPair& pair, bool a_role_is_set_a) {
  const Field& f = *pair.field;
  const int q = f.q();
  const PointSet& role = a_role_is_set_a ? pair.set_a : pair.set_b;
  const PointSet& other = a_role_is_set_a ? pair.set_b : pair.set_a;

  std::vector<std::vector<int>> reps;
  reps.reserve(role.indices.size());
  for (long long idx : role.indices) reps.push_back(point_vector(f, pair.m, idx));

  std::vector<long long> counts(other.indices.size(), 0);
  std::vector<int> v(pair.m);
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      for (int beta = 1; beta < q; ++beta) {
        // third point of the line through reps[i], reps[j]
        for (int r = 0; r < pair.m; ++r) v[r] = f.add(reps[i][r], f.mul(beta, reps[j][r]));
        const int pos = other.position(point_index(f, v));
        if (pos >= 0) counts[pos] += q - 1;  // q-1 codewords per dependent triple
      }
  return counts;
}

}  // namespace suppcode
