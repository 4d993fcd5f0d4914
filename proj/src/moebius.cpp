#include "galorb/moebius.hpp"

#include <algorithm>

#include "galorb/errors.hpp"
#include "galorb/galois.hpp"

namespace galorb {

Mat2 Mat2::identity() { return {QuadRat(1), QuadRat(0), QuadRat(0), QuadRat(1)}; }

long Mat2::field() const { return common_d(common_d(a, b), common_d(c, d)); }

bool Mat2::is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

Mat2 mat_pow(const Mat2& m, unsigned k) {
  Mat2 r = Mat2::identity();
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

bool projectively_equal(const Mat2& x, const Mat2& y) {
  // x = lambda*y  <=>  all 2x2 minors of the stacked entry vectors vanish
  const QuadRat xs[4] = {x.a, x.b, x.c, x.d};
  const QuadRat ys[4] = {y.a, y.b, y.c, y.d};
  for (int i = 0; i < 4; ++i) {
    if (xs[i].is_zero() != ys[i].is_zero()) return false;
    for (int j = i + 1; j < 4; ++j) {
      if (xs[i] * ys[j] != xs[j] * ys[i]) return false;
    }
  }
  return true;
}

ValidityReport validate_matrix(const FieldSpec& spec, const Mat2& m) {
  ValidityReport rep;
  long d;
  try {
    d = m.field();
    common_d(d, spec.d);
  } catch (const DomainError& e) {
    rep.reason = e.what();
    return rep;
  }
  QuadRat det = m.det();
  if (det.is_zero()) {
    rep.reason = "matrix is singular";
    return rep;
  }
  QuadRat tr2 = m.trace() * m.trace();
  for (const auto& t : spec.admissible_t) {
    if (tr2 == t * det) {
      rep.ok = true;
      rep.matched_t = t;
      return rep;
    }
  }
  rep.reason = "matrix fails trace^2=t*det";
  return rep;
}

RatFunc moebius_apply(const Mat2& m, const RatFunc& g) {
  Poly num = g.num() * m.a + g.den() * m.b;
  Poly den = g.num() * m.c + g.den() * m.d;
  if (den.is_zero()) throw DegenerateError("Moebius denominator c*g + d vanishes");
  return rf_reduce(num, den);
}

RatFunc orbit_sum(const ConstructionParams& params) {
  long d = common_d(params.matrix.field(), common_d(params.c.d(), params.spec.d));
  RatFunc x(Poly::x(d));
  RatFunc acc = x + RatFunc(Poly::constant(params.c, d));
  Mat2 power = Mat2::identity();
  for (int k = 1; k < params.spec.n; ++k) {
    power = power * params.matrix;
    acc = acc + moebius_apply(power, x);
  }
  return acc;
}

Construction construct_f1(const ConstructionParams& params) {
  Construction out;
  out.validity = validate_matrix(params.spec, params.matrix);
  if (!out.validity.ok) throw DomainError("invalid matrix: " + out.validity.reason);
  out.orbit = orbit_sum(params);
  if (out.orbit.num().degree() <= 0) throw DegenerateError("orbit sum is constant");
  out.f1 = normalize_primitive(out.orbit.num());
  out.degree = out.f1.degree();
  out.full_degree = out.degree == params.spec.n;
  return out;
}

namespace {

std::vector<Rational> rationals_by_height(int h) {
  std::vector<Rational> out{Rational(0)};
  for (int k = 1; k <= h; ++k) {
    std::vector<Rational> level;
    for (int q = 1; q <= k; ++q) {
      for (int p = 0; p <= k; ++p) {
        if (std::max(p, q) != k || p == 0) continue;
        Rational r(p, q);
        r.canonicalize();
        if (r.get_num() == p && r.get_den() == q) level.push_back(r);
      }
    }
    std::sort(level.begin(), level.end());
    for (const auto& r : level) {
      out.push_back(r);
      out.push_back(-r);
    }
  }
  return out;
}

int height_int(const QuadRat& x) { return static_cast<int>(height(x).get_si()); }

}  // namespace

std::vector<QuadRat> elements_by_height(long d, int h) {
  std::vector<Rational> rats = rationals_by_height(h);
  if (d == 1) {
    std::vector<QuadRat> out;
    for (const auto& r : rats) out.emplace_back(r);
    return out;
  }
  std::vector<QuadRat> out;
  for (int level = 0; level <= h; ++level) {
    for (const auto& u : rats) {
      for (const auto& v : rats) {
        QuadRat x(u, v, d);
        if (height_int(x) == level) out.push_back(x);
      }
    }
  }
  return out;
}

SearchResult search_params(const FieldSpec& spec, const SearchOptions& opts) {
  SearchResult res;
  auto done = [&] { return opts.max_hits != 0 && res.hits.size() >= opts.max_hits; };

  auto evaluate = [&](const ConstructionParams& params) {
    ++res.evaluated;
    try {
      Construction con = construct_f1(params);
      if (!con.full_degree) return;
      if (!irreducible_over_field(con.f1, opts.prime_budget)) return;
      res.hits.push_back({params, con.f1, res.evaluated - 1});
    } catch (const DomainError&) {
    } catch (const DegenerateError&) {
    }
  };

  for (const auto& seed : opts.seeds) {
    if (res.evaluated >= opts.budget || done()) return res;
    evaluate(seed);
  }
  if (opts.budget == 0) return res;

  std::vector<QuadRat> elems = elements_by_height(spec.d, opts.height);
  std::vector<int> heights;
  for (const auto& e : elems) heights.push_back(height_int(e));
  // count of elements with height <= level
  std::vector<size_t> upto(static_cast<size_t>(opts.height) + 1, 0);
  for (int level = 0; level <= opts.height; ++level) {
    upto[static_cast<size_t>(level)] = static_cast<size_t>(
        std::count_if(heights.begin(), heights.end(), [&](int x) { return x <= level; }));
  }
  const QuadRat t_inv = spec.t.inverse();
  for (int level = 0; level <= opts.height; ++level) {
    const size_t hi = upto[static_cast<size_t>(level)];
    for (size_t i = 0; i < hi; ++i) {
      for (size_t j = 0; j < hi; ++j) {
        for (size_t k = 0; k < hi; ++k) {
          int top = std::max({heights[i], heights[j], heights[k]});
          if (top != level) continue;
          const QuadRat& a = elems[i];
          const QuadRat& s = elems[j];
          if (s.is_zero()) continue;  // det = s^2/t
          if (res.evaluated >= opts.budget || done()) return res;
          QuadRat dd = s - a;
          Mat2 m{a, a * dd - s * s * t_inv, QuadRat(1), dd};
          evaluate({spec, m, elems[k]});
        }
      }
    }
  }
  res.exhausted = true;
  return res;
}

}  // namespace galorb
