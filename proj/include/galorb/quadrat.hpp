#pragma once

#include <gmpxx.h>

#include <string>

namespace galorb {

using Rational = mpq_class;
using Integer = mpz_class;

// max(|num|, den)
Integer height(const Rational& x);

bool is_squarefree(long d);

/// Element u + v*sqrt(D) of the quadratic field Q[sqrt D].
///
/// D = 1 encodes Q itself, in which case v is always zero. Rational values
/// carrying D = 1 combine freely with any field; two elements with distinct
/// tags D > 1 never mix.
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(int u) : u_(u) {}  // NOLINT: implicit integer embedding
  QuadRat(Rational u, long d = 1);
  QuadRat(Rational u, Rational v, long d);

  static QuadRat sqrt_d(long d) { return QuadRat(0, 1, d); }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  long d() const { return d_; }

  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  bool is_rational() const { return sgn(v_) == 0; }

  // u^2 - D v^2
  Rational norm() const;
  QuadRat conj() const { return QuadRat(u_, -v_, d_); }
  QuadRat inverse() const;

  // Same value re-tagged into field d (only rationals may change field).
  QuadRat with_d(long d) const;

  QuadRat operator-() const { return QuadRat(-u_, -v_, d_); }
  QuadRat& operator+=(const QuadRat& y);
  QuadRat& operator-=(const QuadRat& y);
  QuadRat& operator*=(const QuadRat& y);
  QuadRat& operator/=(const QuadRat& y);

  friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
  friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
  friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
  friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }

  friend bool operator==(const QuadRat& x, const QuadRat& y);
  friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

 private:
  Rational u_{0};
  Rational v_{0};
  long d_ = 1;
};

// Field tag two operands combine into; throws DomainError on a mismatch.
long common_d(long a, long b);
long common_d(const QuadRat& x, const QuadRat& y);

inline QuadRat qmul(const QuadRat& x, const QuadRat& y) { return x * y; }
inline QuadRat qinv(const QuadRat& x) { return x.inverse(); }
inline QuadRat qconj(const QuadRat& x) { return x.conj(); }

// Componentwise height max(height(u), height(v)).
Integer height(const QuadRat& x);

}  // namespace galorb
