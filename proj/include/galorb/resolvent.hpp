#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galorb/galois.hpp"
#include "galorb/roots.hpp"

namespace galorb {

/// Roots of f1 and f1' numbered along the Moebius orbits:
/// x_(j+1) = A o x_j and y_(j+1) = A' o y_j.
struct RootOrbit {
  std::vector<CplxF> xs;
  std::vector<CplxF> ys;
  BigFloat residual;       // largest distance between an orbit point and its matched root
  BigFloat max_imag;       // largest |im| over all roots
  mpfr_prec_t prec = 0;
};

CplxF moebius_eval(const Mat2& a, const CplxF& z);

// x_1 is the root of f1 with the smallest real part. Throws PrecisionError
// when an orbit point matches no root.
RootOrbit orbit_roots(const Poly& f1, const Mat2& a, mpfr_prec_t prec);

// z_k = sum_j x_(j+k)^power * y_j^power, k = 0..n-1
std::vector<CplxF> resolvent_conjugates(const RootOrbit& orbit, int power);

/// Expands prod (X - z_k) and rounds every coefficient to an integer.
///
/// Throws CollisionError if two values are within 2*tol of each other and
/// PrecisionError if some coefficient is farther than tol from an integer.
IntPoly reconstruct_integer_poly(const std::vector<CplxF>& values, double tol);

// find_roots + reconstruct_integer_poly, doubling the precision on failure.
IntPoly roots_round_trip(const Poly& f, mpfr_prec_t prec, double tol, mpfr_prec_t cap = 4096);

struct ResolventOptions {
  mpfr_prec_t prec = 256;
  double int_tol = 1e-6;
  int power = 0;  // 0: z = sum x_j y_j with the squared fallback on collision
  mpfr_prec_t prec_cap = 4096;
  unsigned prime_budget = 100;
  unsigned type_scan_primes = 50;
};

struct DihedralResult {
  IntPoly g;
  int power = 1;
  mpfr_prec_t prec_used = 0;
  std::vector<mpfr_prec_t> escalations;  // precisions that failed
  std::vector<std::string> notes;
  // ell^(2*power) where ell = lc(f); resolvent values are scaled by it so they
  // stay algebraic integers
  Integer scale = 1;
  RootOrbit orbit;
  std::vector<CplxF> conjugates;

  bool recompute_ok = false;  // identical integers at doubled precision
  IrreducibilityCertificate irreducibility;
  ScanResult type_scan;
  bool types_admissible = false;
  std::vector<FactorType> inadmissible_types;
  bool verified() const {
    return recompute_ok && irreducibility.status == IrreducibilityStatus::Irreducible &&
           types_admissible;
  }
};

// Throws std::runtime_error with diagnostics when both resolvents collide or
// the precision cap is reached.
DihedralResult dihedral_resolvent(const WreathReport& report, const Mat2& a,
                                  const ResolventOptions& opts);

}  // namespace galorb
