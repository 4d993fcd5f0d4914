#pragma once

#include <mpfr.h>

#include <string>

#include "galorb/quadrat.hpp"

namespace galorb {

/// Binary floating point number with a fixed mantissa length, rounded to
/// nearest. Arithmetic results take the larger precision of the operands.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 256);
  BigFloat(long value, mpfr_prec_t prec);
  BigFloat(const Integer& value, mpfr_prec_t prec);
  BigFloat(const Rational& value, mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Nearest integer.
  Integer round() const;
  // Fixed-point decimal string with `digits` digits after the point.
  std::string str(int digits) const;
  // log2 |x| estimate; very negative for zero.
  long exponent() const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& y);
  BigFloat& operator-=(const BigFloat& y);
  BigFloat& operator*=(const BigFloat& y);
  BigFloat& operator/=(const BigFloat& y);

  friend BigFloat operator+(BigFloat x, const BigFloat& y) { return x += y; }
  friend BigFloat operator-(BigFloat x, const BigFloat& y) { return x -= y; }
  friend BigFloat operator*(BigFloat x, const BigFloat& y) { return x *= y; }
  friend BigFloat operator/(BigFloat x, const BigFloat& y) { return x /= y; }

  friend int compare(const BigFloat& x, const BigFloat& y) { return mpfr_cmp(x.v_, y.v_); }
  friend bool operator<(const BigFloat& x, const BigFloat& y) { return compare(x, y) < 0; }
  friend bool operator>(const BigFloat& x, const BigFloat& y) { return compare(x, y) > 0; }
  friend bool operator<=(const BigFloat& x, const BigFloat& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const BigFloat& x, const BigFloat& y) { return compare(x, y) >= 0; }
  friend bool operator==(const BigFloat& x, const BigFloat& y) { return compare(x, y) == 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat pi(mpfr_prec_t prec);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
// 2^e at the given precision
BigFloat pow2(long e, mpfr_prec_t prec);
BigFloat max(const BigFloat& x, const BigFloat& y);

struct CplxF {
  BigFloat re;
  BigFloat im;

  explicit CplxF(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
  CplxF(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit CplxF(BigFloat r) : re(r), im(r.prec()) {}

  mpfr_prec_t prec() const { return re.prec(); }
  CplxF conj() const { return {re, -im}; }
  BigFloat abs() const { return hypot(re, im); }

  CplxF operator-() const { return {-re, -im}; }
  CplxF& operator+=(const CplxF& y);
  CplxF& operator-=(const CplxF& y);
  CplxF& operator*=(const CplxF& y);
  CplxF& operator/=(const CplxF& y);

  friend CplxF operator+(CplxF x, const CplxF& y) { return x += y; }
  friend CplxF operator-(CplxF x, const CplxF& y) { return x -= y; }
  friend CplxF operator*(CplxF x, const CplxF& y) { return x *= y; }
  friend CplxF operator/(CplxF x, const CplxF& y) { return x /= y; }
};

// |u + v sqrt D| relative error <= 2^(2 - prec); sqrt D > 0.
BigFloat embed(const QuadRat& x, mpfr_prec_t prec);

}  // namespace galorb
