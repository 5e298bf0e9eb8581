#ifndef SUPPCODE_FIELD_HPP
#define SUPPCODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace suppcode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^e), p prime, p^e <= 2^16.
///
/// Elements are integer codes in [0, q). The base-p digits of a code are the
/// coefficients of the polynomial representation, digit i being the
/// coefficient of x^i. Code 0 is the additive identity, code 1 the
/// multiplicative identity. For e > 1 the field is F_p[x] modulo a fixed
/// monic irreducible polynomial: the lexicographically smallest one, where
/// candidates are ordered by the integer whose base-p digits are the
/// non-leading coefficients.
///
/// Fields are immutable after construction and safe to share across threads.
class Field {
 public:
  static FieldPtr make(int p, int e = 1);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  bool prime_field() const { return e_ == 1; }

  /// Coefficients of the reduction polynomial, degree 0 first, e+1 entries.
  /// For e == 1 this is {0, 1}, i.e. plain arithmetic mod p.
  const std::vector<int>& reduction() const { return reduction_; }

  int add(int a, int b) const {
    return tables_ ? add_tab_[index(a, b)] : add_slow(a, b);
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return tables_ ? neg_tab_[a] : neg_slow(a); }
  int mul(int a, int b) const {
    return tables_ ? mul_tab_[index(a, b)] : mul_slow(a, b);
  }
  /// Multiplicative inverse; throws std::invalid_argument on a == 0.
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long k) const;
  /// Frobenius endomorphism a -> a^p.
  int frob(int a) const { return pow(a, p_); }

  /// Smallest generator of the multiplicative group.
  int primitive_element() const { return primitive_; }

  bool same(const Field& other) const { return p_ == other.p_ && e_ == other.e_; }

 private:
  Field(int p, int e);

  size_t index(int a, int b) const { return static_cast<size_t>(a) * q_ + b; }
  int add_slow(int a, int b) const;
  int neg_slow(int a) const;
  int mul_slow(int a, int b) const;

  int p_, e_, q_;
  std::vector<int> reduction_;
  bool tables_ = false;
  std::vector<uint16_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
  int primitive_ = 1;
};

bool is_prime(int n);

}  // namespace suppcode

#endif
