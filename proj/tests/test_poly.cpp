#include <doctest.h>

#include "galorb/errors.hpp"
#include "galorb/ratfunc.hpp"
#include "support.hpp"

using namespace galorb;
using galorb::test::Gen;

TEST_CASE("divrem reconstructs the dividend") {
  Gen g(21);
  for (long d : test::kFields) {
    for (int i = 0; i < 200; ++i) {
      Poly f = g.poly(d, static_cast<int>(g.integer(0, 8)), 20);
      Poly h = g.poly(d, static_cast<int>(g.integer(0, 5)), 20);
      auto [q, r] = divrem(f, h);
      CHECK(q * h + r == f);
      CHECK((r.is_zero() || r.degree() < h.degree()));
    }
  }
  CHECK_THROWS_AS(divrem(Poly::x(), Poly()), DivisionByZero);
}

TEST_CASE("extended gcd satisfies the Bezout identity") {
  Gen g(22);
  for (long d : test::kFields) {
    for (int i = 0; i < 200; ++i) {
      Poly common = g.poly(d, static_cast<int>(g.integer(0, 2)), 5);
      Poly f = g.poly(d, static_cast<int>(g.integer(0, 4)), 9) * common;
      Poly h = g.poly(d, static_cast<int>(g.integer(0, 4)), 9) * common;
      ExtGcd eg = ext_gcd(f, h);
      CHECK(eg.u * f + eg.v * h == eg.gcd);
      CHECK(eg.gcd.lead() == QuadRat(1));
      CHECK((f % eg.gcd).is_zero());
      CHECK((h % eg.gcd).is_zero());
      CHECK((eg.gcd % common.monic()).is_zero());
      CHECK(gcd(f, h) == eg.gcd);
    }
  }
}

TEST_CASE("compose_mod agrees with composition followed by reduction") {
  Gen g(23);
  for (int i = 0; i < 200; ++i) {
    long d = test::kFields[i % 4];
    Poly p = g.poly(d, static_cast<int>(g.integer(0, 5)), 7);
    Poly q = g.poly(d, static_cast<int>(g.integer(0, 4)), 7);
    Poly m = g.poly(d, static_cast<int>(g.integer(1, 5)), 7);
    Poly direct;
    Poly qpow = Poly::constant(1, d);
    for (int k = 0; k <= p.degree(); ++k) {
      direct += qpow * p.coeff(k);
      qpow = qpow * q;
    }
    CHECK(compose_mod(p, q, m) == direct % m);
  }
}

TEST_CASE("normalize_primitive is idempotent and invariant under rational scaling") {
  Gen g(24);
  for (long d : test::kFields) {
    for (int i = 0; i < 200; ++i) {
      Poly f = g.poly(d, static_cast<int>(g.integer(0, 7)), 30);
      Poly n = normalize_primitive(f);
      CHECK(normalize_primitive(n) == n);
      Rational lambda = g.rational(40);
      if (sgn(lambda) == 0) lambda = 3;
      CHECK(normalize_primitive(f * QuadRat(lambda)) == n);
      CHECK(proportional(f, n));
      int s = sgn(n.lead().u()) != 0 ? sgn(n.lead().u()) : sgn(n.lead().v());
      CHECK(s > 0);
    }
  }
}

TEST_CASE("proportional over the quadratic field") {
  Poly f = parse_poly("X^2+(1+1*s)*X-3", 5);
  QuadRat unit(2, 1, 5);
  CHECK(proportional(f, f * unit));
  CHECK_FALSE(proportional(f, f + Poly::constant(1, 5)));
  CHECK_FALSE(proportional(f, Poly::x(5) * f));
}

TEST_CASE("polynomial text round trip") {
  Gen g(25);
  for (long d : test::kFields) {
    for (int i = 0; i < 200; ++i) {
      Poly f = g.poly(d, static_cast<int>(g.integer(0, 9)), 100);
      CHECK(parse_poly(format_poly(f), d) == f);
    }
  }
  CHECK(format_poly(Poly()) == "0");
  CHECK(format_poly(parse_poly("-X^3 + 2 X - 1/2", 1)) == "-X^3+2*X-1/2");
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_poly("X^2 + * 3", 1, 7);
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 7);
  }
  auto lines = parse_fixture("# comment\nX^2-2\n\n  X + 1  # trailing\n", 1);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].line == 2);
  CHECK(lines[1].line == 4);
  CHECK_THROWS_AS(parse_fixture("X^2\nX^^2\n", 1), ParseError);
}

TEST_CASE("integer polynomial conversions") {
  Poly f = parse_poly("1/2*X^2-1/3", 1);
  auto ig = integralize(f);
  CHECK(ig.m == 6);
  CHECK(ig.g == IntPoly({Integer(-2), Integer(0), Integer(3)}));
  CHECK(to_poly(ig.g) == f * QuadRat(6));
  CHECK_THROWS_AS(to_int_poly(f), DomainError);
  CHECK(IntPoly({Integer(4), Integer(6)}).content() == 2);
}

TEST_CASE("rational functions reduce and add") {
  Gen g(26);
  for (int i = 0; i < 200; ++i) {
    long d = test::kFields[i % 4];
    auto rf = [&] {
      return rf_reduce(g.poly(d, static_cast<int>(g.integer(0, 3)), 5), g.poly(d, static_cast<int>(g.integer(0, 3)), 5));
    };
    RatFunc a = rf(), b = rf(), c = rf();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.den().lead() == QuadRat(1));
    CHECK(gcd(a.num().is_zero() ? Poly::constant(1, d) : a.num(), a.den()).degree() == 0);
  }
  RatFunc half = rf_reduce(Poly::x() * Poly::x(), Poly::x() * QuadRat(2));
  CHECK(half.num() == Poly::x() * QuadRat(Rational(1, 2)));
  CHECK(half.den() == Poly::constant(1));
}
