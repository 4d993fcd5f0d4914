#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galorb/field_spec.hpp"
#include "galorb/ratfunc.hpp"

namespace galorb {

/// Invertible 2x2 matrix [[a, b], [c, d]] over Q[sqrt D].
struct Mat2 {
  QuadRat a, b, c, d;

  static Mat2 identity();
  long field() const;
  QuadRat trace() const { return a + d; }
  QuadRat det() const { return a * d - b * c; }
  Mat2 conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
  // lambda * I for some lambda
  bool is_scalar() const;
  Mat2 scaled(const QuadRat& s) const { return {a * s, b * s, c * s, d * s}; }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_pow(const Mat2& m, unsigned k);
inline Mat2 operator*(const Mat2& x, const Mat2& y) { return mat_mul(x, y); }
// x = lambda*y for a nonzero lambda
bool projectively_equal(const Mat2& x, const Mat2& y);

struct ValidityReport {
  bool ok = false;
  std::optional<QuadRat> matched_t;
  std::string reason;
};

// Accepts iff det != 0 and trace^2 = t*det for an admissible t.
ValidityReport validate_matrix(const FieldSpec& spec, const Mat2& m);

// (a*g + b)/(c*g + d), reduced. Throws DegenerateError if the denominator vanishes.
RatFunc moebius_apply(const Mat2& m, const RatFunc& g);

struct ConstructionParams {
  FieldSpec spec;
  Mat2 matrix;
  QuadRat c;  // additive constant of the orbit sum
};

// X + A o X + A^2 o X + ... + A^(n-1) o X + C
RatFunc orbit_sum(const ConstructionParams& params);

struct Construction {
  RatFunc orbit;
  Poly f1;  // normalized numerator of the orbit sum
  int degree = 0;
  bool full_degree = false;  // degree == n
  ValidityReport validity;
};

// Throws DomainError for an invalid matrix and DegenerateError when the
// orbit sum is constant.
Construction construct_f1(const ConstructionParams& params);

struct SearchOptions {
  std::uint64_t budget = 0;  // candidates evaluated
  int height = 3;            // componentwise height bound
  std::size_t max_hits = 1;  // stop after this many hits; 0 = unlimited
  unsigned prime_budget = 100;
  std::vector<ConstructionParams> seeds;  // evaluated first, count against budget
};

struct SearchHit {
  ConstructionParams params;
  Poly f1;
  std::uint64_t index = 0;  // position in the enumeration
};

struct SearchResult {
  std::vector<SearchHit> hits;
  std::uint64_t evaluated = 0;
  bool exhausted = false;  // enumeration space ran out before the budget
};

/// Enumerates matrices [[a, b], [1, s - a]] with b = a(s - a) - s^2/t, so
/// trace^2 = t*det holds by construction, together with constants C. The
/// triples (a, s, C) run through elements of bounded height in order of
/// increasing max height, ties broken lexicographically in the enumeration
/// order of `elements_by_height`.
SearchResult search_params(const FieldSpec& spec, const SearchOptions& opts);

// All elements of Q[sqrt D] with componentwise height <= h, ordered by
// height, then by position of (u, v) in the rational ordering.
std::vector<QuadRat> elements_by_height(long d, int h);

}  // namespace galorb
