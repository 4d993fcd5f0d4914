#include "galorb/roots.hpp"

#include <algorithm>

#include "galorb/errors.hpp"

namespace galorb {

std::vector<CplxF> embed_coeffs(const Poly& f, mpfr_prec_t prec) {
  std::vector<CplxF> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.emplace_back(embed(x, prec));
  return c;
}

CplxF eval(const std::vector<CplxF>& coeffs, const CplxF& x) {
  CplxF acc(x.prec());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigFloat eval_scale(const std::vector<CplxF>& coeffs, const CplxF& x) {
  BigFloat r = x.abs();
  BigFloat acc(x.prec());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + it->abs();
  return acc;
}

namespace {

// p(x) and p'(x) by Horner
void eval_with_derivative(const std::vector<CplxF>& c, const CplxF& x, CplxF& p, CplxF& dp) {
  p = CplxF(x.prec());
  dp = CplxF(x.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
}

}  // namespace

std::vector<CplxF> aberth_roots(const std::vector<CplxF>& coeffs, const RootOptions& opts) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) throw DomainError("root finding needs degree >= 1");
  const mpfr_prec_t prec = opts.prec;
  if (coeffs.back().abs().is_zero()) throw DomainError("leading coefficient is zero");
  std::vector<CplxF> c;
  for (const auto& x : coeffs) {
    CplxF y(prec);
    mpfr_set(y.re.get(), x.re.get(), MPFR_RNDN);
    mpfr_set(y.im.get(), x.im.get(), MPFR_RNDN);
    c.push_back(std::move(y));
  }

  BigFloat lead = c.back().abs();
  BigFloat radius(1, prec);
  {
    BigFloat m(prec);
    for (int i = 0; i < n; ++i) m = max(m, c[static_cast<size_t>(i)].abs() / lead);
    radius += m;
  }
  std::vector<CplxF> z;
  const BigFloat two_pi = pi(prec) * BigFloat(2, prec);
  for (int k = 0; k < n; ++k) {
    BigFloat angle = two_pi * BigFloat(k, prec) / BigFloat(n, prec) + BigFloat(Rational(2, 5), prec);
    z.emplace_back(radius * cos(angle), radius * sin(angle));
  }

  const int cap = opts.max_iterations > 0 ? opts.max_iterations : 200 + 20 * n + static_cast<int>(prec) / 4;
  // a correction below this (relative) means the root is settled
  const BigFloat settle = pow2(-static_cast<long>(prec) + 8, prec);
  std::vector<bool> done(static_cast<size_t>(n), false);
  CplxF p(prec), dp(prec);
  const CplxF one(BigFloat(1, prec));
  bool converged = false;
  for (int it = 0; it < cap; ++it) {
    bool all = true;
    for (int k = 0; k < n; ++k) {
      auto kk = static_cast<size_t>(k);
      if (done[kk]) continue;
      eval_with_derivative(c, z[kk], p, dp);
      if (p.abs().is_zero()) {
        done[kk] = true;
        continue;
      }
      CplxF ratio = p / dp;
      CplxF sum(prec);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        sum += one / (z[kk] - z[static_cast<size_t>(j)]);
      }
      CplxF w = ratio / (one - ratio * sum);
      z[kk] -= w;
      BigFloat scale = max(z[kk].abs(), BigFloat(1, prec));
      if (w.abs() <= settle * scale) {
        done[kk] = true;
      } else {
        all = false;
      }
    }
    if (all) {
      converged = true;
      break;
    }
  }

  const BigFloat bound = pow2(-static_cast<long>(prec) / 2, prec);
  for (const auto& r : z) {
    BigFloat resid = eval(c, r).abs();
    if (resid > bound * eval_scale(c, r)) {
      throw PrecisionError("root finder did not converge at " + std::to_string(prec) + " bits");
    }
  }
  (void)converged;  // stalled iterations are accepted when the residual bound holds
  return z;
}

std::vector<CplxF> find_roots(const Poly& f, mpfr_prec_t prec) {
  if (f.degree() < 1) throw DomainError("find_roots needs degree >= 1");
  if (gcd(f, f.derivative()).degree() > 0) throw DomainError("find_roots needs a squarefree polynomial");
  return aberth_roots(embed_coeffs(f, prec), {prec, 0});
}

void sort_roots(std::vector<CplxF>& roots) {
  std::sort(roots.begin(), roots.end(), [](const CplxF& a, const CplxF& b) {
    int c = compare(a.re, b.re);
    if (c != 0) return c < 0;
    return a.im < b.im;
  });
}

}  // namespace galorb
