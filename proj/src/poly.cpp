#include "galorb/poly.hpp"

#include <algorithm>

#include "galorb/errors.hpp"

namespace galorb {

Poly::Poly(std::vector<QuadRat> coeffs, long d) : c_(std::move(coeffs)), d_(d) {
  for (const auto& x : c_) d_ = common_d(d_, x.d());
  for (auto& x : c_) x = x.with_d(d_);
  trim();
}

Poly Poly::constant(const QuadRat& c, long d) { return Poly({c}, d); }

Poly Poly::x(long d) { return Poly({QuadRat(0), QuadRat(1)}, d); }

Poly Poly::monomial(const QuadRat& c, int k, long d) {
  std::vector<QuadRat> v(static_cast<size_t>(k) + 1, QuadRat(0));
  v.back() = c;
  return Poly(std::move(v), d);
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QuadRat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return QuadRat(0).with_d(d_);
  return c_[static_cast<size_t>(i)];
}

const QuadRat& Poly::lead() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

bool Poly::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const QuadRat& x) { return x.is_rational(); });
}

Poly Poly::with_d(long d) const {
  Poly r;
  r.d_ = d;
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(x.with_d(d));
  return r;
}

QuadRat Poly::eval(const QuadRat& x) const {
  QuadRat acc = QuadRat(0).with_d(common_d(d_, x.d()));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<QuadRat> v;
  for (int i = 1; i <= degree(); ++i) v.push_back(c_[static_cast<size_t>(i)] * QuadRat(i));
  return Poly(std::move(v), d_);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& g) {
  d_ = common_d(d_, g.d_);
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), QuadRat(0).with_d(d_));
  for (auto& x : c_) x = x.with_d(d_);
  for (size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) { return *this += -g; }

Poly operator*(const Poly& f, const Poly& g) {
  long d = common_d(f.d_, g.d_);
  if (f.is_zero() || g.is_zero()) return Poly(d);
  std::vector<QuadRat> v(f.c_.size() + g.c_.size() - 1, QuadRat(0).with_d(d));
  for (size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i].is_zero()) continue;
    for (size_t j = 0; j < g.c_.size(); ++j) v[i + j] += f.c_[i] * g.c_[j];
  }
  return Poly(std::move(v), d);
}

Poly& Poly::operator*=(const Poly& g) { return *this = *this * g; }

Poly& Poly::operator*=(const QuadRat& s) {
  d_ = common_d(d_, s.d());
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

bool operator==(const Poly& f, const Poly& g) {
  if (f.c_.size() != g.c_.size()) return false;
  for (size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i] != g.c_[i]) return false;
  }
  return true;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  long d = common_d(f.d(), g.d());
  std::vector<QuadRat> r = f.with_d(d).coeffs();
  const int n = g.degree();
  if (f.degree() < n) return {Poly(d), f.with_d(d)};
  std::vector<QuadRat> q(static_cast<size_t>(f.degree() - n) + 1, QuadRat(0).with_d(d));
  const QuadRat inv_lead = g.lead().inverse();
  for (int k = f.degree() - n; k >= 0; --k) {
    QuadRat coef = r[static_cast<size_t>(k + n)] * inv_lead;
    if (coef.is_zero()) continue;
    q[static_cast<size_t>(k)] = coef;
    for (int j = 0; j <= n; ++j) r[static_cast<size_t>(k + j)] -= coef * g.coeffs()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(n));
  return {Poly(std::move(q), d), Poly(std::move(r), d)};
}

Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).second; }

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("ext_gcd(0, 0) is undefined");
  long d = common_d(f.d(), g.d());
  Poly r0 = f.with_d(d), r1 = g.with_d(d);
  Poly s0 = Poly::constant(1, d), s1(d);
  Poly t0(d), t1 = Poly::constant(1, d);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  QuadRat scale = r0.lead().inverse();
  return {r0 * scale, s0 * scale, t0 * scale};
}

Poly compose_mod(const Poly& p, const Poly& q, const Poly& f) {
  if (f.is_zero()) throw DivisionByZero("compose_mod modulo the zero polynomial");
  long d = common_d(common_d(p.d(), q.d()), f.d());
  Poly qr = q % f;
  Poly acc(d);
  for (int i = p.degree(); i >= 0; --i) {
    acc = (acc * qr + Poly::constant(p.coeffs()[static_cast<size_t>(i)], d)) % f;
  }
  return acc;
}

Poly normalize_primitive(const Poly& f) {
  if (f.is_zero()) throw DomainError("normalize of the zero polynomial");
  Integer den = 1;
  for (const auto& x : f.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.u().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.v().get_den_mpz_t());
  }
  Integer content = 0;
  for (const auto& x : f.coeffs()) {
    Rational u = x.u() * den;
    Rational v = x.v() * den;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), u.get_num_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
  }
  Rational scale(den, content);
  const QuadRat& lc = f.lead();
  int sign = sgn(lc.u()) != 0 ? sgn(lc.u()) : sgn(lc.v());
  if (sign < 0) scale = -scale;
  return f * QuadRat(scale);
}

bool proportional(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.degree() != g.degree()) return false;
  return f * g.lead() == g * f.lead();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Integralized integralize(const Poly& f) {
  if (!f.is_rational()) throw DomainError("integralize needs rational coefficients");
  Integer m = 1;
  for (const auto& x : f.coeffs()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), x.u().get_den_mpz_t());
  std::vector<Integer> g;
  g.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) {
    Rational y = x.u() * m;
    g.push_back(y.get_num());
  }
  return {m, IntPoly(std::move(g))};
}

Poly to_poly(const IntPoly& f) {
  std::vector<QuadRat> v;
  v.reserve(f.c.size());
  for (const auto& x : f.c) v.emplace_back(Rational(x));
  return Poly(std::move(v), 1);
}

IntPoly to_int_poly(const Poly& f) {
  auto [m, g] = integralize(f);
  if (m != 1) throw DomainError("polynomial has non-integral coefficients");
  return g;
}

}  // namespace galorb
