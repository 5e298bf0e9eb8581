#include "suppcode/field.hpp"

#include <stdexcept>
#include <string>

namespace suppcode {

namespace {

// Polynomials over GF(p) as digit vectors, degree 0 first, no trailing zeros.
using Poly = std::vector<int>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(r));
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  a = poly_trim(std::move(a));
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int c = a.back();
    if (c != 0) {
      const size_t off = a.size() - 1 - dm;
      for (size_t i = 0; i < m.size(); ++i) {
        int v = a[off + i] - c * m[i];
        v %= p;
        if (v < 0) v += p;
        a[off + i] = v;
      }
    }
    a.pop_back();
    a = poly_trim(std::move(a));
    if (a.size() <= dm) break;
  }
  return a;
}

Poly poly_from_code(long long code, int p) {
  Poly r;
  while (code) {
    r.push_back(static_cast<int>(code % p));
    code /= p;
  }
  return r;
}

int poly_to_code(const Poly& a, int p) {
  long long code = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) code = code * p + *it;
  return static_cast<int>(code);
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long low = 0; low < count; ++low) {
      Poly g = poly_from_code(low, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

constexpr int kTableMaxQ = 1024;

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr Field::make(int p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > (1 << 16)) throw std::invalid_argument("field order exceeds 2^16");
  }
  return FieldPtr(new Field(p, e));
}

Field::Field(int p, int e) : p_(p), e_(e) {
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  q_ = static_cast<int>(q);

  if (e_ == 1) {
    reduction_ = {0, 1};  // x: arithmetic is plain mod p
  } else {
    // Lexicographically smallest monic irreducible of degree e.
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    bool found = false;
    for (long long low = 0; low < count && !found; ++low) {
      Poly f = poly_from_code(low, p);
      f.resize(e + 1, 0);
      f[e] = 1;
      if (is_irreducible(f, p)) {
        reduction_ = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
  }

  if (q_ <= kTableMaxQ) {
    tables_ = true;
    add_tab_.resize(static_cast<size_t>(q_) * q_);
    mul_tab_.resize(static_cast<size_t>(q_) * q_);
    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      neg_tab_[a] = static_cast<uint16_t>(neg_slow(a));
      for (int b = 0; b < q_; ++b) {
        add_tab_[index(a, b)] = static_cast<uint16_t>(add_slow(a, b));
        mul_tab_[index(a, b)] = static_cast<uint16_t>(mul_slow(a, b));
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_tab_[index(a, b)] == 1) inv_tab_[a] = static_cast<uint16_t>(b);
  }

  // Smallest multiplicative generator: g has order q-1 iff g^((q-1)/r) != 1
  // for every prime r dividing q-1.
  std::vector<int> prime_factors;
  int rest = q_ - 1;
  for (int r = 2; r * r <= rest; ++r)
    if (rest % r == 0) {
      prime_factors.push_back(r);
      while (rest % r == 0) rest /= r;
    }
  if (rest > 1) prime_factors.push_back(rest);
  for (int g = 1; g < q_; ++g) {
    bool primitive = true;
    for (int r : prime_factors)
      if (pow(g, (q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      primitive_ = g;
      break;
    }
  }
}

int Field::add_slow(int a, int b) const {
  if (e_ == 1) {
    int r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  int r = 0, mult = 1;
  while (a || b) {
    int d = (a % p_) + (b % p_);
    if (d >= p_) d -= p_;
    r += d * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

int Field::neg_slow(int a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  int r = 0, mult = 1;
  while (a) {
    int d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    a /= p_;
  }
  return r;
}

int Field::mul_slow(int a, int b) const {
  if (e_ == 1) return static_cast<int>((static_cast<long long>(a) * b) % p_);
  Poly pa = poly_from_code(a, p_);
  Poly pb = poly_from_code(b, p_);
  return poly_to_code(poly_mod(poly_mul(pa, pb, p_), reduction_, p_), p_);
}

int Field::inv(int a) const {
  if (a == 0) throw std::invalid_argument("division by zero in GF(" + std::to_string(q_) + ")");
  if (tables_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

int Field::pow(int a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

}  // namespace suppcode
