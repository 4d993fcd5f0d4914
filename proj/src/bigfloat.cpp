#include "galorb/bigfloat.hpp"

#include <algorithm>
#include <utility>

namespace galorb {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, other.prec());
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

Integer BigFloat::round() const {
  Integer r;
  mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNf", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

long BigFloat::exponent() const {
  if (is_zero()) return -(1L << 40);
  return mpfr_get_exp(v_);
}

namespace {
mpfr_prec_t joint(const BigFloat& x, const BigFloat& y) { return std::max(x.prec(), y.prec()); }
}  // namespace

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& y) {
  BigFloat r(joint(*this, y));
  mpfr_add(r.v_, v_, y.v_, MPFR_RNDN);
  return *this = std::move(r);
}

BigFloat& BigFloat::operator-=(const BigFloat& y) {
  BigFloat r(joint(*this, y));
  mpfr_sub(r.v_, v_, y.v_, MPFR_RNDN);
  return *this = std::move(r);
}

BigFloat& BigFloat::operator*=(const BigFloat& y) {
  BigFloat r(joint(*this, y));
  mpfr_mul(r.v_, v_, y.v_, MPFR_RNDN);
  return *this = std::move(r);
}

BigFloat& BigFloat::operator/=(const BigFloat& y) {
  BigFloat r(joint(*this, y));
  mpfr_div(r.v_, v_, y.v_, MPFR_RNDN);
  return *this = std::move(r);
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(joint(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow2(long e, mpfr_prec_t prec) {
  BigFloat r(1, prec);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& x, const BigFloat& y) { return x < y ? y : x; }

CplxF& CplxF::operator+=(const CplxF& y) {
  re += y.re;
  im += y.im;
  return *this;
}

CplxF& CplxF::operator-=(const CplxF& y) {
  re -= y.re;
  im -= y.im;
  return *this;
}

CplxF& CplxF::operator*=(const CplxF& y) {
  BigFloat r = re * y.re - im * y.im;
  BigFloat i = re * y.im + im * y.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

CplxF& CplxF::operator/=(const CplxF& y) {
  BigFloat den = y.re * y.re + y.im * y.im;
  BigFloat r = (re * y.re + im * y.im) / den;
  BigFloat i = (im * y.re - re * y.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigFloat embed(const QuadRat& x, mpfr_prec_t prec) {
  if (x.is_rational()) return BigFloat(x.u(), prec);
  // cancellation in u + v sqrt D costs at most log2 |u - v sqrt D| / |N(x)| bits
  long extra = 64 + static_cast<long>(mpz_sizeinbase(x.u().get_num_mpz_t(), 2) +
                                      mpz_sizeinbase(x.u().get_den_mpz_t(), 2) +
                                      mpz_sizeinbase(x.v().get_num_mpz_t(), 2) +
                                      mpz_sizeinbase(x.v().get_den_mpz_t(), 2)) *
                            2;
  mpfr_prec_t work = prec + extra;
  BigFloat root(work);
  mpfr_sqrt_ui(root.get(), static_cast<unsigned long>(x.d()), MPFR_RNDN);
  BigFloat val = BigFloat(x.u(), work) + BigFloat(x.v(), work) * root;
  BigFloat out(prec);
  mpfr_set(out.get(), val.get(), MPFR_RNDN);
  return out;
}

}  // namespace galorb
