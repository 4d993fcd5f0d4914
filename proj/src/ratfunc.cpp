#include "galorb/ratfunc.hpp"

#include "galorb/errors.hpp"

namespace galorb {

RatFunc rf_reduce(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  long d = common_d(num.d(), den.d());
  RatFunc r;
  if (num.is_zero()) {
    r.num_ = Poly(d);
    r.den_ = Poly::constant(1, d);
    return r;
  }
  Poly g = gcd(num, den);
  Poly n = divrem(num, g).first;
  Poly m = divrem(den, g).first;
  QuadRat scale = m.lead().inverse();
  r.num_ = n * scale;
  r.den_ = m * scale;
  return r;
}

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  if (a.den() == b.den()) return rf_reduce(a.num() + b.num(), a.den());
  return rf_reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  return rf_reduce(a.num() * b.num(), a.den() * b.den());
}

}  // namespace galorb
