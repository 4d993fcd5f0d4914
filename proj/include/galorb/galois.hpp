#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galorb/moebius.hpp"
#include "galorb/modp.hpp"

namespace galorb {

// sqrt D -> -sqrt D on every coefficient.
Poly conjugate_poly(const Poly& f);

struct WreathProduct {
  Poly product;      // f1 * f1', exact, re-tagged to Q
  Integer m;         // m * product is integral
  IntPoly f;         // primitive normalization of the product
  bool square = false;  // f1 had rational coefficients, so product = f1^2
};

// Throws DomainError for D = 1 input and std::logic_error if the product
// keeps an irrational coefficient.
WreathProduct wreath_product_poly(const Poly& f1);

/// P with (A^(k-1)) o x1 = P(x1) modulo f1, deg P < deg f1.
///
/// For A^(k-1) = [[a, b], [c, d]] this is (aX + b)*h mod f1 where
/// (cX + d)*h = 1 mod f1. Throws DegenerateError if cX + d and f1 share a factor.
Poly zero_expression(const Poly& f1, const Mat2& a, int k);

struct Check {
  std::string name;
  bool ok = false;
  int index = 0;  // k for per-root checks, 0 otherwise
  bool informational = false;  // reported, but does not decide pass
};

struct CyclicCertificate {
  Poly f1;
  std::optional<Mat2> matrix;
  std::vector<Poly> zero_exprs;  // P_2, ..., P_n
  std::vector<Check> checks;
  bool pass = false;
  std::optional<int> failed_index;
};

// Root identities f1(P_k) = 0 mod f1, chain P_(k+1) = P_2(P_k) mod f1 and
// P_2(P_n) = X, plus A^n scalar with no earlier scalar power.
CyclicCertificate verify_cyclic(const Poly& f1, const Mat2& a);
// Externally supplied P_2, ..., P_n. The root identities decide pass; the
// set {X, P_2, ..., P_n} must also be closed under composition and contain
// a generator. The chain checks depend on the caller's numbering and are
// only informational here.
CyclicCertificate verify_cyclic(const Poly& f1, const std::vector<Poly>& zero_exprs);

struct WreathReport {
  int n = 0;
  Poly f1, f1_conj;
  WreathProduct wreath;
  IrreducibilityCertificate irreducibility;
  ScanResult witness_scan;
  std::optional<ScanEntry> witness;  // type (n, 1, ..., 1)
  bool types_consistent = false;     // every logged type is a wreath cycle type
  std::vector<FactorType> inconsistent_types;
  long degree_claim = 0;             // [L:Q] = 2 n^2 once certified
  bool complete = false;
  std::string reason;
};

FactorType wreath_witness_type(int n);

WreathReport certify_wreath(const Poly& f1, const Mat2& a, unsigned prime_budget);

// Irreducibility of f1 over its own field: directly for D = 1, through the
// irreducibility of f1 * f1' over Q otherwise.
bool irreducible_over_field(const Poly& f1, unsigned prime_budget);

}  // namespace galorb
