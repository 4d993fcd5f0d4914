#include "galorb/resolvent.hpp"

#include <algorithm>
#include <optional>

#include "galorb/errors.hpp"
#include "galorb/group_model.hpp"

namespace galorb {

CplxF moebius_eval(const Mat2& a, const CplxF& z) {
  const mpfr_prec_t prec = z.prec();
  CplxF ea(embed(a.a, prec)), eb(embed(a.b, prec)), ec(embed(a.c, prec)), ed(embed(a.d, prec));
  return (ea * z + eb) / (ec * z + ed);
}

namespace {

BigFloat distance(const CplxF& x, const CplxF& y) { return (x - y).abs(); }

struct Orbit {
  std::vector<CplxF> points;
  BigFloat residual;
};

Orbit trace_orbit(const std::vector<CplxF>& roots, const Mat2& a, mpfr_prec_t prec) {
  const int n = static_cast<int>(roots.size());
  const BigFloat tol = pow2(-static_cast<long>(prec) / 4, prec);
  const BigFloat one(1, prec);
  std::vector<bool> used(roots.size(), false);
  Orbit out{{}, BigFloat(prec)};

  // x_1: smallest real part among numerically real roots, else overall
  const BigFloat real_tol = pow2(-static_cast<long>(prec) / 2, prec);
  size_t start = roots.size();
  for (size_t i = 0; i < roots.size(); ++i) {
    if (abs(roots[i].im) > real_tol * max(one, roots[i].abs())) continue;
    if (start == roots.size() || roots[i].re < roots[start].re) start = i;
  }
  if (start == roots.size()) start = 0;  // sorted input: smallest real part first
  used[start] = true;
  out.points.push_back(roots[start]);

  for (int j = 1; j <= n; ++j) {
    CplxF image = moebius_eval(a, out.points.back());
    size_t best = roots.size();
    BigFloat best_d(prec);
    for (size_t i = 0; i < roots.size(); ++i) {
      BigFloat dist = distance(image, roots[i]);
      if (best == roots.size() || dist < best_d) {
        best = i;
        best_d = dist;
      }
    }
    if (best_d > tol * max(one, image.abs())) {
      throw PrecisionError("orbit point " + std::to_string(j + 1) + " matches no root");
    }
    out.residual = max(out.residual, best_d);
    if (j == n) {
      if (best != start) throw PrecisionError("Moebius orbit does not close after n steps");
      break;
    }
    if (used[best]) throw PrecisionError("Moebius orbit revisits a root early");
    used[best] = true;
    out.points.push_back(roots[best]);
  }
  return out;
}

}  // namespace

RootOrbit orbit_roots(const Poly& f1, const Mat2& a, mpfr_prec_t prec) {
  RootOrbit orbit;
  orbit.prec = prec;
  std::vector<CplxF> xr = find_roots(f1, prec);
  std::vector<CplxF> yr = find_roots(conjugate_poly(f1), prec);
  sort_roots(xr);
  sort_roots(yr);
  orbit.max_imag = BigFloat(prec);
  for (const auto* rs : {&xr, &yr}) {
    for (const auto& r : *rs) orbit.max_imag = max(orbit.max_imag, abs(r.im));
  }
  Orbit ox = trace_orbit(xr, a, prec);
  Orbit oy = trace_orbit(yr, a.conj(), prec);
  orbit.xs = std::move(ox.points);
  orbit.ys = std::move(oy.points);
  orbit.residual = max(ox.residual, oy.residual);
  return orbit;
}

std::vector<CplxF> resolvent_conjugates(const RootOrbit& orbit, int power) {
  if (power < 1) throw DomainError("resolvent power must be >= 1");
  const size_t n = orbit.xs.size();
  auto pw = [&](const CplxF& z) {
    CplxF r = z;
    for (int i = 1; i < power; ++i) r = r * z;
    return r;
  };
  std::vector<CplxF> xp, yp;
  for (size_t j = 0; j < n; ++j) {
    xp.push_back(pw(orbit.xs[j]));
    yp.push_back(pw(orbit.ys[j]));
  }
  std::vector<CplxF> out;
  for (size_t k = 0; k < n; ++k) {
    CplxF z(orbit.prec);
    for (size_t j = 0; j < n; ++j) z += xp[(j + k) % n] * yp[j];
    out.push_back(std::move(z));
  }
  return out;
}

IntPoly reconstruct_integer_poly(const std::vector<CplxF>& values, double tol) {
  if (values.empty()) return IntPoly({Integer(1)});
  const mpfr_prec_t prec = values.front().prec();
  BigFloat tolf(prec);
  mpfr_set_d(tolf.get(), tol, MPFR_RNDN);
  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t j = i + 1; j < values.size(); ++j) {
      if (distance(values[i], values[j]) <= tolf * BigFloat(2, prec)) {
        throw CollisionError("resolvent conjugates " + std::to_string(i) + " and " +
                             std::to_string(j) + " coincide");
      }
    }
  }
  // coefficients of prod (X - z), lowest degree first
  std::vector<CplxF> c{CplxF(BigFloat(1, prec))};
  for (const auto& z : values) {
    std::vector<CplxF> next(c.size() + 1, CplxF(prec));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * z;
    }
    c = std::move(next);
  }
  std::vector<Integer> out;
  for (size_t i = 0; i < c.size(); ++i) {
    Integer r = c[i].re.round();
    BigFloat err = abs(c[i].re - BigFloat(r, prec));
    if (err > tolf || abs(c[i].im) > tolf) {
      throw PrecisionError("coefficient of X^" + std::to_string(i) + " is " +
                           c[i].re.str(12) + ", not within tolerance of an integer");
    }
    out.push_back(r);
  }
  return IntPoly(std::move(out));
}

IntPoly roots_round_trip(const Poly& f, mpfr_prec_t prec, double tol, mpfr_prec_t cap) {
  for (mpfr_prec_t p = prec;; p *= 2) {
    try {
      return reconstruct_integer_poly(find_roots(f, p), tol);
    } catch (const PrecisionError&) {
      if (p * 2 > cap) throw;
    }
  }
}

namespace {

struct Attempt {
  IntPoly g;
  RootOrbit orbit;
  std::vector<CplxF> conjugates;
};

Attempt attempt(const WreathReport& report, const Mat2& a, mpfr_prec_t prec, int power,
                const Integer& scale, double tol) {
  Attempt at;
  at.orbit = orbit_roots(report.f1, a, prec);
  at.conjugates = resolvent_conjugates(at.orbit, power);
  if (scale != 1) {
    CplxF s(BigFloat(scale, prec));
    for (auto& z : at.conjugates) z = z * s;
  }
  at.g = reconstruct_integer_poly(at.conjugates, tol);
  return at;
}

}  // namespace

DihedralResult dihedral_resolvent(const WreathReport& report, const Mat2& a,
                                  const ResolventOptions& opts) {
  if (!report.complete) throw DomainError("dihedral resolvent needs a completed wreath certificate");
  DihedralResult res;
  const Integer ell = report.wreath.f.lead();
  std::vector<int> powers = opts.power == 0 ? std::vector<int>{1, 2} : std::vector<int>{opts.power};

  std::optional<Attempt> found;
  for (int power : powers) {
    Integer scale = 1;
    for (int i = 0; i < 2 * power; ++i) scale *= ell;
    try {
      for (mpfr_prec_t prec = opts.prec;; prec *= 2) {
        try {
          found = attempt(report, a, prec, power, scale, opts.int_tol);
          res.prec_used = prec;
          break;
        } catch (const PrecisionError& e) {
          res.escalations.push_back(prec);
          res.notes.push_back(std::string("precision ") + std::to_string(prec) + ": " + e.what());
          if (prec * 2 > opts.prec_cap) {
            throw std::runtime_error("precision cap reached: " + std::string(e.what()));
          }
        }
      }
      res.power = power;
      res.scale = scale;
      break;
    } catch (const CollisionError& e) {
      res.notes.push_back("power " + std::to_string(power) + ": " + e.what());
    }
  }
  if (!found) {
    std::string msg = "all resolvents collide";
    for (const auto& n : res.notes) msg += "; " + n;
    throw std::runtime_error(msg);
  }
  res.g = found->g;
  res.orbit = std::move(found->orbit);
  res.conjugates = std::move(found->conjugates);

  try {
    Attempt again = attempt(report, a, res.prec_used * 2, res.power, res.scale, opts.int_tol);
    res.recompute_ok = again.g == res.g;
  } catch (const std::exception& e) {
    res.notes.push_back(std::string("recompute failed: ") + e.what());
    res.recompute_ok = false;
  }
  res.irreducibility = certify_irreducible_Q(res.g, opts.prime_budget);
  res.type_scan = scan_primes(res.g, nullptr, opts.type_scan_primes);
  const auto allowed = admissible_types(dihedral_model(report.n));
  for (const auto& e : res.type_scan.log) {
    if (!allowed.count(e.type)) res.inadmissible_types.push_back(e.type);
  }
  res.types_admissible = res.inadmissible_types.empty();
  return res;
}

}  // namespace galorb
