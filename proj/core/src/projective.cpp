#include "suppcode/projective.hpp"

#include <limits>
#include <stdexcept>

namespace suppcode {

namespace {

// q^k with overflow guard.
long long ipow_checked(int q, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > std::numeric_limits<long long>::max() / q)
      throw std::invalid_argument("q^m does not fit in 64 bits");
    r *= q;
  }
  return r;
}

}  // namespace

long long projective_count(int q, int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return (ipow_checked(q, m) - 1) / (q - 1);
}

long long vector_value(int q, std::span<const int> v) {
  long long val = 0;
  for (int x : v) val = val * q + x;
  return val;
}

NormalizedPoint normalize_point(const Field& f, std::span<const int> v) {
  const int m = static_cast<int>(v.size());
  int t = -1;
  for (int i = 0; i < m; ++i)
    if (v[i] != 0) {
      t = i;
      break;
    }
  if (t < 0) throw std::invalid_argument("cannot normalize the zero vector");
  const int q = f.q();
  const int lambda = v[t];
  const int s = f.inv(lambda);
  // index = n_{m-1-t} + base-q value of the scaled suffix
  long long prefix = projective_count(q, m - 1 - t);  // 0 when t == m-1
  long long suffix = 0;
  for (int i = t + 1; i < m; ++i) suffix = suffix * q + f.mul(s, v[i]);
  return {prefix + suffix, lambda};
}

std::vector<int> point_vector(const Field& f, int m, long long index) {
  const int q = f.q();
  if (index < 0 || index >= projective_count(q, m))
    throw std::invalid_argument("point index out of range");
  // Find the pivot row: largest j with n_j <= index, pivot t = m-1-j.
  int j = 0;
  while (projective_count(q, j + 1) <= index) ++j;
  const int t = m - 1 - j;
  long long suffix = index - projective_count(q, j);
  std::vector<int> v(m, 0);
  v[t] = 1;
  for (int i = m - 1; i > t; --i) {
    v[i] = static_cast<int>(suffix % q);
    suffix /= q;
  }
  return v;
}

long long point_index(const Field& f, std::span<const int> v) {
  return normalize_point(f, v).index;
}

}  // namespace suppcode
