#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "galorb/errors.hpp"
#include "galorb/field_spec.hpp"
#include "support.hpp"

using namespace galorb;
using galorb::test::Gen;

TEST_CASE("quadrat field axioms on random elements") {
  Gen g(11);
  for (long d : test::kFields) {
    for (int i = 0; i < 200; ++i) {
      QuadRat x = g.quadrat(d, 9), y = g.quadrat(d, 9), z = g.quadrat(d, 9);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x - x == QuadRat(0));
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == QuadRat(1));
        CHECK((y / x) * x == y);
      }
    }
  }
}

TEST_CASE("conjugation is a ring automorphism and norm is multiplicative") {
  Gen g(12);
  for (long d : {2L, 3L, 5L}) {
    for (int i = 0; i < 200; ++i) {
      QuadRat x = g.quadrat(d, 9), y = g.quadrat(d, 9);
      CHECK((x + y).conj() == x.conj() + y.conj());
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK(x.conj().conj() == x);
      CHECK((x * y).norm() == x.norm() * y.norm());
      QuadRat n = x * x.conj();
      CHECK(n.is_rational());
      CHECK(n.u() == x.norm());
    }
  }
}

TEST_CASE("quadrat basics") {
  QuadRat s = QuadRat::sqrt_d(5);
  CHECK(s * s == QuadRat(5));
  CHECK(QuadRat(Rational(3, 6)).u() == Rational(1, 2));
  CHECK_THROWS_AS(QuadRat(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(QuadRat(1, 1, 1), DomainError);
  // mixing two different quadratic fields is an error, rationals promote
  CHECK_THROWS_AS(QuadRat::sqrt_d(2) + QuadRat::sqrt_d(3), DomainError);
  CHECK((QuadRat(2) + s).d() == 5);
  CHECK(height(QuadRat(Rational(-7, 3), Rational(2, 5), 5)) == 7);
  CHECK(is_squarefree(5));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("quadrat text round trip") {
  Gen g(13);
  for (long d : test::kFields) {
    for (int i = 0; i < 200; ++i) {
      QuadRat x = g.quadrat(d, 50);
      CHECK(parse_quadrat(format_quadrat(x), d) == x);
    }
  }
  CHECK(parse_quadrat("(-5+1*s)/2", 5) == QuadRat(Rational(-5, 2), Rational(1, 2), 5));
  CHECK(parse_quadrat("(3-s)", 5) == QuadRat(3, -1, 5));
  CHECK_THROWS_AS(parse_quadrat("(1+s)", 1), ParseError);
}

namespace {

// Dickson polynomial coefficients: C_k(Y) = zeta^k + zeta^-k for Y = zeta + 1/zeta.
Poly dickson(int k) {
  Poly c0 = Poly::constant(2), c1 = Poly::x();
  if (k == 0) return c0;
  for (int i = 1; i < k; ++i) {
    Poly next = Poly::x() * c1 - c0;
    c0 = c1;
    c1 = next;
  }
  return c1;
}

// Evaluates an even polynomial in Y at Y^2 = t.
QuadRat eval_even_at_square(const Poly& p, const QuadRat& t) {
  QuadRat acc(0), tp(1);
  for (int i = 0; i <= p.degree(); i += 2) {
    acc += p.coeff(i) * tp;
    tp *= t;
  }
  return acc;
}

double to_double(const QuadRat& x) { return x.u().get_d() + x.v().get_d() * std::sqrt(double(x.d())); }

}  // namespace

TEST_CASE("field table rows match primitive roots of unity") {
  for (const auto& spec : field_spec_table()) {
    CAPTURE(spec.n);
    const int big_n = spec.n % 2 ? spec.n : 2 * spec.n;
    CHECK(spec.root_order == big_n);
    CHECK(spec.t.d() == (spec.t.is_rational() ? 1 : spec.d));

    // numeric oracle: the set {(2cos(2 pi k/N))^2 : gcd(k, N) = 1}
    std::vector<double> values;
    for (int k = 1; k < big_n; ++k) {
      if (std::gcd(k, big_n) != 1) continue;
      double v = 2 * std::cos(2 * M_PI * k / big_n);
      v *= v;
      bool seen = false;
      for (double w : values) seen = seen || std::abs(w - v) < 1e-9;
      if (!seen) values.push_back(v);
    }
    REQUIRE(values.size() == spec.admissible_t.size());
    for (const auto& t : spec.admissible_t) {
      bool found = false;
      for (double w : values) found = found || std::abs(w - to_double(t)) < 1e-12;
      CHECK(found);
    }

    // exact oracle: with Y^2 = t, C_N(Y)^2 = 4 and C_d(Y)^2 != 4 for proper d != N/2
    for (const auto& t : spec.admissible_t) {
      Poly sq = dickson(big_n) * dickson(big_n);
      CHECK(eval_even_at_square(sq, t) == QuadRat(4));
      for (int dd = 1; dd < big_n; ++dd) {
        if (big_n % dd || 2 * dd == big_n) continue;
        Poly sd = dickson(dd) * dickson(dd);
        CHECK(eval_even_at_square(sd, t) != QuadRat(4));
      }
    }
  }
}

TEST_CASE("field table lookup") {
  CHECK(field_spec(10, 5).t == QuadRat(Rational(5, 2), Rational(-1, 2), 5));
  CHECK(field_spec(3, 1).extension);
  CHECK_FALSE(field_spec(5, 5).extension);
  CHECK_FALSE(find_field_spec(7, 1).has_value());
  CHECK_THROWS_AS(field_spec(5, 1), DomainError);
  CHECK(root_of_unity_order(5) == 5);
  CHECK(root_of_unity_order(8) == 16);
}
