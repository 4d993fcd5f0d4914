#include <doctest.h>

#include "galorb/errors.hpp"
#include "galorb/field_spec.hpp"
#include "galorb/moebius.hpp"
#include "galorb/ratfunc.hpp"
#include "support.hpp"

using namespace galorb;
using galorb::test::Gen;

namespace {

Mat2 random_matrix(Gen& g, long d) {
  for (;;) {
    Mat2 m{g.quadrat(d, 6), g.quadrat(d, 6), g.quadrat(d, 6), g.quadrat(d, 6)};
    if (!m.det().is_zero()) return m;
  }
}

// A random matrix with trace^2 = t * det, built from (a, c, trace) and scaled.
Mat2 random_valid_matrix(Gen& g, const FieldSpec& spec, const QuadRat& t) {
  QuadRat a = g.quadrat(spec.d, 5);
  QuadRat c = g.nonzero_quadrat(spec.d, 5);
  QuadRat s = g.nonzero_quadrat(spec.d, 5);
  QuadRat det = s * s / t;
  QuadRat dd = s - a;
  Mat2 m{a, (a * dd - det) / c, c, dd};
  return m.scaled(g.nonzero_quadrat(spec.d, 4));
}

}  // namespace

TEST_CASE("moebius action is associative") {
  Gen g(31);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    long d = test::kFields[i % 4];
    Mat2 a = random_matrix(g, d), b = random_matrix(g, d);
    RatFunc x = rf_reduce(g.poly(d, static_cast<int>(g.integer(1, 3)), 5), g.poly(d, static_cast<int>(g.integer(0, 2)), 5));
    try {
      RatFunc lhs = moebius_apply(a, moebius_apply(b, x));
      RatFunc rhs = moebius_apply(a * b, x);
      CHECK(lhs == rhs);
      ++checked;
    } catch (const DegenerateError&) {
      // cX + d vanished identically on this draw
    }
  }
  CHECK(checked >= 200);
  // associativity of the matrix product itself
  for (int i = 0; i < 200; ++i) {
    Mat2 a = random_matrix(g, 5), b = random_matrix(g, 5), c = random_matrix(g, 5);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("valid matrices have A^n scalar and no earlier scalar power") {
  Gen g(32);
  int cases = 0;
  for (const auto& spec : field_spec_table()) {
    for (const auto& t : spec.admissible_t) {
      for (int i = 0; i < 40; ++i, ++cases) {
        Mat2 m = random_valid_matrix(g, spec, t);
        CAPTURE(spec.n);
        CAPTURE(format_matrix(m));
        ValidityReport v = validate_matrix(spec, m);
        CHECK(v.ok);
        CHECK(mat_pow(m, static_cast<unsigned>(spec.n)).is_scalar());
        for (int k = 1; k < spec.n; ++k) CHECK_FALSE(mat_pow(m, static_cast<unsigned>(k)).is_scalar());
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("orbit sum numerator has degree at most n and is scale invariant") {
  Gen g(33);
  int cases = 0;
  for (const auto& spec : field_spec_table()) {
    for (int i = 0; i < 40; ++i) {
      Mat2 m = random_valid_matrix(g, spec, spec.t);
      QuadRat c = g.quadrat(spec.d, 4);
      try {
        Construction con = construct_f1({spec, m, c});
        CHECK(con.degree <= spec.n);
        Construction scaled = construct_f1({spec, m.scaled(g.nonzero_quadrat(spec.d, 5)), c});
        CHECK(scaled.f1 == con.f1);
        ++cases;
      } catch (const DegenerateError&) {
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("invalid and singular matrices are rejected") {
  auto spec = field_spec(6, 1);
  auto v = validate_matrix(spec, parse_matrix("1,1;0,2", 1));
  CHECK_FALSE(v.ok);
  CHECK(v.reason == "matrix fails trace^2=t*det");
  CHECK(validate_matrix(spec, parse_matrix("1,1;1,1", 1)).reason == "matrix is singular");
  CHECK_THROWS_AS(construct_f1({spec, parse_matrix("1,1;0,2", 1), QuadRat(0)}), DomainError);
  // the conjugate t is admissible too
  auto s5 = field_spec(5, 5);
  Mat2 a = parse_matrix("1,(-5+1*s)/2;1,(-3+1*s)/2", 5);
  CHECK(validate_matrix(s5, a).ok);
  CHECK(validate_matrix(s5, a.conj()).ok);
  CHECK(*validate_matrix(s5, a.conj()).matched_t == s5.t.conj());
}

TEST_CASE("projective equality") {
  Mat2 a = parse_matrix("1,1;-1,2", 1);
  CHECK(projectively_equal(a, a.scaled(QuadRat(-3))));
  CHECK_FALSE(projectively_equal(a, parse_matrix("1,1;-1,3", 1)));
  CHECK(projectively_equal(mat_pow(a, 6), Mat2::identity()));
}

TEST_CASE("degenerate moebius application") {
  // (g + 1)/(g - 1) with g = 1 has a zero denominator
  Mat2 a = parse_matrix("1,1;1,-1", 1);
  CHECK_THROWS_AS(moebius_apply(a, RatFunc(Poly::constant(1))), DegenerateError);
}

TEST_CASE("search rediscovers the rational sextic") {
  auto spec = field_spec(6, 1);
  SearchOptions opts;
  opts.budget = 5000;
  opts.height = 3;
  opts.max_hits = 0;
  SearchResult res = search_params(spec, opts);
  bool found = false;
  Poly target = parse_poly("2*X^6+2*X^5-35*X^4+40*X^3+5*X^2-14*X+2", 1);
  for (const auto& h : res.hits) {
    CHECK(h.f1.degree() == 6);
    CHECK(validate_matrix(spec, h.params.matrix).ok);
    if (projectively_equal(h.params.matrix, parse_matrix("1,1;-1,2", 1)) && h.params.c == QuadRat(1)) {
      found = true;
      CHECK(h.f1 == target);
    }
  }
  CHECK(found);
  CHECK(res.evaluated <= opts.budget);
}

TEST_CASE("search seeds, budget and determinism") {
  auto spec = field_spec(5, 5);
  SearchOptions opts;
  opts.budget = 0;
  CHECK(search_params(spec, opts).evaluated == 0);

  opts.budget = 1;
  opts.seeds.push_back({spec, parse_matrix("1,(-5+1*s)/2;1,(-3+1*s)/2", 5), QuadRat(-1)});
  SearchResult seeded = search_params(spec, opts);
  REQUIRE(seeded.hits.size() == 1);
  CHECK(seeded.evaluated == 1);
  CHECK(seeded.hits[0].index == 0);

  SearchOptions plain;
  plain.budget = 300;
  plain.max_hits = 0;
  SearchResult r1 = search_params(spec, plain), r2 = search_params(spec, plain);
  REQUIRE(r1.hits.size() == r2.hits.size());
  for (size_t i = 0; i < r1.hits.size(); ++i) CHECK(r1.hits[i].f1 == r2.hits[i].f1);
  CHECK(r1.evaluated == 300);
}

TEST_CASE("elements are enumerated by increasing height") {
  auto e = elements_by_height(1, 2);
  REQUIRE(e.size() >= 5);
  CHECK(e[0] == QuadRat(0));
  Integer prev = 0;
  for (const auto& x : e) {
    CHECK(height(x) >= prev);
    prev = height(x);
    CHECK(height(x) <= 2);
  }
  auto q = elements_by_height(5, 1);
  bool has_s = false;
  for (const auto& x : q) has_s = has_s || x == QuadRat::sqrt_d(5);
  CHECK(has_s);
}

TEST_CASE("seeded search confirms the octic matrix") {
  auto spec = field_spec(8, 2);
  SearchOptions opts;
  opts.budget = 1;
  opts.seeds.push_back({spec, parse_matrix("2,(-2+1*s);1,(0+1*s)", 2), QuadRat(1)});
  SearchResult res = search_params(spec, opts);
  REQUIRE(res.hits.size() == 1);
  CHECK(res.hits[0].f1.degree() == 8);
}

TEST_CASE("orbit sum of the sextic is unchanged by rational scaling of A") {
  auto spec = field_spec(6, 1);
  Mat2 a = parse_matrix("1,1;-1,2", 1);
  RatFunc f = orbit_sum({spec, a, QuadRat(1)});
  for (int k : {-3, 2, 7}) CHECK(orbit_sum({spec, a.scaled(QuadRat(Rational(k, 5))), QuadRat(1)}) == f);
}
