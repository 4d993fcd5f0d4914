// Shared generators and fixture helpers for the unit tests.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "galorb/poly.hpp"
#include "galorb/quadrat.hpp"
#include "galorb/text.hpp"

#ifndef GALORB_FIXTURE_DIR
#define GALORB_FIXTURE_DIR "fixtures"
#endif

namespace galorb::test {

inline std::string fixture(const std::string& name) { return std::string(GALORB_FIXTURE_DIR) + "/" + name; }

// Fixed seeds keep every run identical.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long h) { return Rational(integer(-h, h), integer(1, h)); }

  QuadRat quadrat(long d, long h) {
    if (d == 1) return QuadRat(rational(h));
    return QuadRat(rational(h), rational(h), d);
  }

  QuadRat nonzero_quadrat(long d, long h) {
    for (;;) {
      QuadRat x = quadrat(d, h);
      if (!x.is_zero()) return x;
    }
  }

  Poly poly(long d, int deg, long h) {
    std::vector<QuadRat> c;
    for (int i = 0; i < deg; ++i) c.push_back(quadrat(d, h));
    c.push_back(nonzero_quadrat(d, h));
    return Poly(std::move(c), d);
  }

  IntPoly monic_int_poly(int deg, long bound) {
    std::vector<Integer> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(integer(-bound, bound));
    c.emplace_back(1);
    return IntPoly(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline const long kFields[] = {1, 2, 3, 5};

}  // namespace galorb::test
