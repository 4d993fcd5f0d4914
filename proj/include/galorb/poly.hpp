#pragma once

#include <utility>
#include <vector>

#include "galorb/quadrat.hpp"

namespace galorb {

/// Dense univariate polynomial over Q[sqrt D], lowest degree first.
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients
/// and degree -1. Every coefficient carries the polynomial's field tag.
class Poly {
 public:
  Poly() = default;
  explicit Poly(long d) : d_(d) {}
  Poly(std::vector<QuadRat> coeffs, long d = 1);

  static Poly constant(const QuadRat& c, long d = 1);
  static Poly x(long d = 1);
  static Poly monomial(const QuadRat& c, int k, long d = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  long d() const { return d_; }
  const std::vector<QuadRat>& coeffs() const { return c_; }
  QuadRat coeff(int i) const;
  const QuadRat& lead() const;

  bool is_rational() const;  // all coefficients have v = 0
  Poly with_d(long d) const;
  QuadRat eval(const QuadRat& x) const;
  Poly derivative() const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);
  Poly& operator*=(const QuadRat& s);

  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Poly f, const QuadRat& s) { return f *= s; }
  friend Poly operator*(const QuadRat& s, Poly f) { return f *= s; }

  friend bool operator==(const Poly& f, const Poly& g);
  friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

 private:
  void trim();

  std::vector<QuadRat> c_;
  long d_ = 1;
};

// f = q*g + r, deg r < deg g. Throws DivisionByZero when g = 0.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);

// Monic gcd; gcd(0, 0) throws.
Poly gcd(const Poly& f, const Poly& g);

struct ExtGcd {
  Poly gcd;  // monic
  Poly u;    // u*f + v*g = gcd
  Poly v;
};
ExtGcd ext_gcd(const Poly& f, const Poly& g);

// P(Q(X)) mod f, Horner over K[X]/(f).
Poly compose_mod(const Poly& p, const Poly& q, const Poly& f);

/// Canonical representative of the K*-orbit of f.
///
/// D = 1: integer coefficients with content 1 and positive leading
/// coefficient. D > 1: all u and v parts integral with joint gcd 1, and the
/// first nonzero component of the leading coefficient positive.
Poly normalize_primitive(const Poly& f);

// f = lambda*g for some nonzero lambda in K.
bool proportional(const Poly& f, const Poly& g);

/// Polynomial with integer coefficients, lowest degree first, trimmed.
struct IntPoly {
  std::vector<Integer> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Integer& lead() const { return c.back(); }
  Integer content() const;
  Rational eval(const Rational& x) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

struct Integralized {
  Integer m;  // lcm of coefficient denominators
  IntPoly g;  // m*f
};
// Throws DomainError for an irrational coefficient.
Integralized integralize(const Poly& f);

Poly to_poly(const IntPoly& f);
// Requires integral rational coefficients.
IntPoly to_int_poly(const Poly& f);

}  // namespace galorb
