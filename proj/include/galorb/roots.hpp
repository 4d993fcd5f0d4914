#pragma once

#include <vector>

#include "galorb/bigfloat.hpp"
#include "galorb/poly.hpp"

namespace galorb {

struct RootOptions {
  mpfr_prec_t prec = 256;
  int max_iterations = 0;  // 0 picks a default from the degree and precision
};

/// Simultaneous Aberth-Ehrlich iteration on complex coefficients.
///
/// Start points sit on the circle of radius 1 + max|c_i/c_n| at angles
/// 2*pi*k/n + 0.4. Every returned root satisfies
///   |f(r)| <= 2^(-prec/2) * sum |c_i| |r|^i.
/// Throws PrecisionError when the iteration does not settle.
std::vector<CplxF> aberth_roots(const std::vector<CplxF>& coeffs, const RootOptions& opts);

// Real embedding (sqrt D > 0) of a squarefree polynomial; squarefreeness is
// checked exactly first (DomainError otherwise).
std::vector<CplxF> find_roots(const Poly& f, mpfr_prec_t prec);

std::vector<CplxF> embed_coeffs(const Poly& f, mpfr_prec_t prec);
CplxF eval(const std::vector<CplxF>& coeffs, const CplxF& x);
// sum |c_i| |x|^i
BigFloat eval_scale(const std::vector<CplxF>& coeffs, const CplxF& x);

// Smallest real part first, then smallest imaginary part.
void sort_roots(std::vector<CplxF>& roots);

}  // namespace galorb
