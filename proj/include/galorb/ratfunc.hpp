#pragma once

#include "galorb/poly.hpp"

namespace galorb {

/// Reduced rational function num/den: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  explicit RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1, p.d())) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  long d() const { return common_d(num_.d(), den_.d()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  friend RatFunc rf_reduce(const Poly& num, const Poly& den);

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  Poly num_;
  Poly den_;
};

// Divides out the gcd and makes den monic; den = 0 throws DivisionByZero.
RatFunc rf_reduce(const Poly& num, const Poly& den);
RatFunc rf_add(const RatFunc& a, const RatFunc& b);
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);

inline RatFunc operator+(const RatFunc& a, const RatFunc& b) { return rf_add(a, b); }
inline RatFunc operator*(const RatFunc& a, const RatFunc& b) { return rf_mul(a, b); }

}  // namespace galorb
