#include "galorb/quadrat.hpp"

#include <stdexcept>

#include "galorb/errors.hpp"

namespace galorb {

Integer height(const Rational& x) {
  Integer n = abs(x.get_num());
  return n > x.get_den() ? n : Integer(x.get_den());
}

Integer height(const QuadRat& x) {
  Integer hu = height(x.u());
  Integer hv = height(x.v());
  return hu > hv ? hu : hv;
}

bool is_squarefree(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

QuadRat::QuadRat(Rational u, long d) : u_(std::move(u)), d_(d) {
  u_.canonicalize();
  if (!is_squarefree(d)) throw DomainError("field tag D must be positive squarefree");
}

QuadRat::QuadRat(Rational u, Rational v, long d)
    : u_(std::move(u)), v_(std::move(v)), d_(d) {
  u_.canonicalize();
  v_.canonicalize();
  if (!is_squarefree(d)) throw DomainError("field tag D must be positive squarefree");
  if (d == 1 && sgn(v_) != 0) throw DomainError("sqrt(1) component given for the rational field");
}

long common_d(long a, long b) {
  if (a == b) return a;
  if (a == 1) return b;
  if (b == 1) return a;
  throw DomainError("mixed quadratic fields Q[sqrt " + std::to_string(a) + "] and Q[sqrt " +
                    std::to_string(b) + "]");
}

long common_d(const QuadRat& x, const QuadRat& y) { return common_d(x.d(), y.d()); }

QuadRat QuadRat::with_d(long d) const {
  if (d == d_) return *this;
  if (!is_rational()) throw DomainError("cannot move an irrational element to another field");
  return QuadRat(u_, d);
}

Rational QuadRat::norm() const {
  Rational n = u_ * u_ - v_ * v_ * d_;
  return n;
}

QuadRat QuadRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q[sqrt D]");
  Rational n = norm();
  // sqrt D is irrational for D > 1, so a nonzero element has nonzero norm
  if (sgn(n) == 0) throw std::logic_error("zero norm of a nonzero element; D not squarefree?");
  return QuadRat(u_ / n, -v_ / n, d_);
}

QuadRat& QuadRat::operator+=(const QuadRat& y) {
  d_ = common_d(*this, y);
  u_ += y.u_;
  v_ += y.v_;
  return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& y) {
  d_ = common_d(*this, y);
  u_ -= y.u_;
  v_ -= y.v_;
  return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& y) {
  long d = common_d(*this, y);
  Rational u = u_ * y.u_ + v_ * y.v_ * d;
  Rational v = u_ * y.v_ + v_ * y.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  d_ = d;
  return *this;
}

QuadRat& QuadRat::operator/=(const QuadRat& y) {
  common_d(*this, y);
  return *this *= y.inverse();
}

bool operator==(const QuadRat& x, const QuadRat& y) {
  if (x.u_ != y.u_ || x.v_ != y.v_) return false;
  return x.is_rational() || x.d_ == y.d_;
}

}  // namespace galorb
