#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galorb/poly.hpp"

namespace galorb {

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n

/// Polynomial over F_p, lowest degree first, residues in [0, p).
class PolyP {
 public:
  // Throws DomainError unless p is a prime below 2^63.
  PolyP(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  std::uint64_t p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  friend bool operator==(const PolyP&, const PolyP&) = default;

 private:
  struct Unchecked {};
  PolyP(Unchecked, std::uint64_t p, std::vector<std::uint64_t> coeffs);
  friend class Fp;

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Arithmetic in F_p[X] for a fixed prime (128-bit intermediate products).
class Fp {
 public:
  explicit Fp(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;

  PolyP make(std::vector<std::uint64_t> coeffs) const;
  PolyP x() const;
  PolyP sub(const PolyP& f, const PolyP& g) const;
  PolyP mul(const PolyP& f, const PolyP& g) const;
  std::pair<PolyP, PolyP> divrem(const PolyP& f, const PolyP& g) const;
  PolyP rem(const PolyP& f, const PolyP& g) const { return divrem(f, g).second; }
  PolyP gcd(const PolyP& f, const PolyP& g) const;  // monic
  PolyP monic(const PolyP& f) const;
  PolyP derivative(const PolyP& f) const;
  PolyP mulmod(const PolyP& f, const PolyP& g, const PolyP& m) const;
  // base^e mod m by square-and-multiply
  PolyP powmod(const PolyP& base, const Integer& e, const PolyP& m) const;

 private:
  std::uint64_t p_;
};

/// Multiset of irreducible factor degrees, sorted descending.
struct FactorType {
  std::vector<int> degrees;

  FactorType() = default;
  explicit FactorType(std::vector<int> d);

  int total() const;
  std::string str() const;  // "(5,1,1,1,1,1)"

  friend auto operator<=>(const FactorType&, const FactorType&) = default;
};

FactorType parse_factor_type(std::string_view text);

// Throws DomainError("bad prime") when p divides the leading coefficient.
PolyP reduce_mod_p(const IntPoly& f, std::uint64_t p);
bool is_squarefree_mod_p(const PolyP& f);
// Distinct-degree factorization; throws DomainError on non-squarefree input.
FactorType ddf_type(const PolyP& f);

struct ScanEntry {
  std::uint64_t p;
  FactorType type;
};

struct SkippedPrime {
  std::uint64_t p;
  std::string reason;  // "divides leading coefficient" | "not squarefree"
};

struct ScanResult {
  std::optional<ScanEntry> match;
  std::vector<ScanEntry> log;
  std::vector<SkippedPrime> skipped;
  unsigned primes_examined = 0;
};

using TypePredicate = std::function<bool(const FactorType&)>;

// Walks 2, 3, 5, ... examining `budget` primes (bad ones included) and stops
// at the first type accepted by `pred`; a null predicate never matches.
ScanResult scan_primes(const IntPoly& f, const TypePredicate& pred, unsigned budget);

// {"p":29,"type":[5,1,1,1,1,1]}
std::string scan_entry_json(const ScanEntry& e);

enum class IrreducibilityStatus { Irreducible, Reducible, Inconclusive };
std::string to_string(IrreducibilityStatus s);

struct IrreducibilityCertificate {
  IrreducibilityStatus status = IrreducibilityStatus::Inconclusive;
  // Irreducible reduction mod a single prime, if one was found.
  std::optional<ScanEntry> irreducible_mod;
  // Primes whose degree sets jointly exclude every proper factor degree.
  std::vector<std::uint64_t> sieve_primes;
  std::optional<Rational> rational_root;
  std::string reason;
  ScanResult scan;
};

// Rational-root pre-check, then a single irreducible reduction or a
// factor-degree sieve across primes.
IrreducibilityCertificate certify_irreducible_Q(const IntPoly& f, unsigned budget,
                                                bool rational_root_check = true);

}  // namespace galorb
