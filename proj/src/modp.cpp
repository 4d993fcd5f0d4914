#include "galorb/modp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "galorb/errors.hpp"

namespace galorb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q <= n / q; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

namespace {
constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 63;

void trim(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

PolyP::PolyP(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p >= kMaxPrime || !is_prime(p)) throw DomainError("modulus is not a prime below 2^63");
  for (auto& x : c_) x %= p_;
  trim(c_);
}

PolyP::PolyP(Unchecked, std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  trim(c_);
}

Fp::Fp(std::uint64_t p) : p_(p) {
  if (p >= kMaxPrime || !is_prime(p)) throw DomainError("modulus is not a prime below 2^63");
}

std::uint64_t Fp::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
}

std::uint64_t Fp::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t s = a + b;  // p < 2^63, no overflow
  return s >= p_ ? s - p_ : s;
}

std::uint64_t Fp::sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

std::uint64_t Fp::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero mod p");
  // a^(p-2)
  std::uint64_t r = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

PolyP Fp::make(std::vector<std::uint64_t> coeffs) const {
  for (auto& x : coeffs) x %= p_;
  return PolyP(PolyP::Unchecked{}, p_, std::move(coeffs));
}

PolyP Fp::x() const { return make({0, 1}); }

PolyP Fp::sub(const PolyP& f, const PolyP& g) const {
  std::vector<std::uint64_t> r(std::max(f.c_.size(), g.c_.size()), 0);
  for (size_t i = 0; i < f.c_.size(); ++i) r[i] = f.c_[i];
  for (size_t i = 0; i < g.c_.size(); ++i) r[i] = sub(r[i], g.c_[i]);
  return PolyP(PolyP::Unchecked{}, p_, std::move(r));
}

PolyP Fp::mul(const PolyP& f, const PolyP& g) const {
  if (f.is_zero() || g.is_zero()) return make({});
  std::vector<std::uint64_t> r(f.c_.size() + g.c_.size() - 1, 0);
  for (size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i] == 0) continue;
    for (size_t j = 0; j < g.c_.size(); ++j) r[i + j] = add(r[i + j], mul(f.c_[i], g.c_[j]));
  }
  return PolyP(PolyP::Unchecked{}, p_, std::move(r));
}

std::pair<PolyP, PolyP> Fp::divrem(const PolyP& f, const PolyP& g) const {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial mod p");
  std::vector<std::uint64_t> r = f.c_;
  const int n = g.degree();
  if (f.degree() < n) return {make({}), f};
  std::vector<std::uint64_t> q(static_cast<size_t>(f.degree() - n) + 1, 0);
  const std::uint64_t il = inv(g.c_.back());
  for (int k = f.degree() - n; k >= 0; --k) {
    std::uint64_t coef = mul(r[static_cast<size_t>(k + n)], il);
    if (coef == 0) continue;
    q[static_cast<size_t>(k)] = coef;
    for (int j = 0; j <= n; ++j) {
      auto& slot = r[static_cast<size_t>(k + j)];
      slot = sub(slot, mul(coef, g.c_[static_cast<size_t>(j)]));
    }
  }
  r.resize(static_cast<size_t>(n));
  return {PolyP(PolyP::Unchecked{}, p_, std::move(q)), PolyP(PolyP::Unchecked{}, p_, std::move(r))};
}

PolyP Fp::monic(const PolyP& f) const {
  if (f.is_zero()) return f;
  std::uint64_t il = inv(f.c_.back());
  std::vector<std::uint64_t> r = f.c_;
  for (auto& x : r) x = mul(x, il);
  return PolyP(PolyP::Unchecked{}, p_, std::move(r));
}

PolyP Fp::gcd(const PolyP& f, const PolyP& g) const {
  PolyP a = f, b = g;
  while (!b.is_zero()) {
    PolyP r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

PolyP Fp::derivative(const PolyP& f) const {
  std::vector<std::uint64_t> r;
  for (int i = 1; i <= f.degree(); ++i) {
    r.push_back(mul(f.c_[static_cast<size_t>(i)], static_cast<std::uint64_t>(i) % p_));
  }
  return PolyP(PolyP::Unchecked{}, p_, std::move(r));
}

PolyP Fp::mulmod(const PolyP& f, const PolyP& g, const PolyP& m) const { return rem(mul(f, g), m); }

PolyP Fp::powmod(const PolyP& base, const Integer& e, const PolyP& m) const {
  PolyP result = rem(make({1}), m);
  PolyP b = rem(base, m);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

FactorType::FactorType(std::vector<int> d) : degrees(std::move(d)) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
}

int FactorType::total() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

std::string FactorType::str() const {
  std::string s = "(";
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees[i]);
  }
  return s + ")";
}

FactorType parse_factor_type(std::string_view text) {
  std::vector<int> d;
  std::string cur;
  bool open = false, closed = false;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("empty degree in factor type", 1, 1);
    int v = std::stoi(cur);
    if (v <= 0) throw ParseError("factor degrees must be positive", 1, 1);
    d.push_back(v);
    cur.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    int col = static_cast<int>(i) + 1;
    if (ch == ' ' || ch == '\t') continue;
    if (ch == '(' && !open) {
      open = true;
    } else if (ch == ')' && open && !closed) {
      flush();
      closed = true;
    } else if (ch == ',' && open && !closed) {
      flush();
    } else if (ch >= '0' && ch <= '9' && open && !closed) {
      cur += ch;
    } else {
      throw ParseError(std::string("unexpected '") + ch + "' in factor type", 1, col);
    }
  }
  if (!closed) throw ParseError("unterminated factor type", 1, static_cast<int>(text.size()) + 1);
  return FactorType(std::move(d));
}

PolyP reduce_mod_p(const IntPoly& f, std::uint64_t p) {
  Fp field(p);
  if (f.is_zero()) throw DomainError("bad prime: zero polynomial");
  Integer pz(std::to_string(p));
  std::vector<std::uint64_t> c;
  c.reserve(f.c.size());
  for (const auto& x : f.c) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
    c.push_back(std::stoull(r.get_str()));
  }
  if (c.back() == 0) throw DomainError("bad prime: p divides the leading coefficient");
  return field.make(std::move(c));
}

bool is_squarefree_mod_p(const PolyP& f) {
  Fp field(f.p());
  PolyP df = field.derivative(f);
  if (df.is_zero()) return false;
  return field.gcd(f, df).degree() == 0;
}

FactorType ddf_type(const PolyP& input) {
  Fp field(input.p());
  if (input.degree() < 1) return FactorType{};
  if (!is_squarefree_mod_p(input)) throw DomainError("ddf_type needs a squarefree polynomial");
  PolyP f = field.monic(input);
  const PolyP x = field.x();
  const Integer p(std::to_string(input.p()));
  std::vector<int> degrees;
  PolyP h = field.rem(x, f);  // X^(p^d) mod f
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = field.powmod(h, p, f);
    PolyP g = field.gcd(f, field.sub(h, x));
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / d; ++k) degrees.push_back(d);
      f = field.divrem(f, g).first;
      h = field.rem(h, f);
    }
  }
  if (f.degree() > 0) degrees.push_back(f.degree());
  return FactorType(std::move(degrees));
}

ScanResult scan_primes(const IntPoly& f, const TypePredicate& pred, unsigned budget) {
  ScanResult res;
  std::uint64_t p = 1;
  for (unsigned i = 0; i < budget; ++i) {
    p = next_prime(p);
    ++res.primes_examined;
    PolyP fp = [&]() -> PolyP {
      try {
        return reduce_mod_p(f, p);
      } catch (const DomainError&) {
        return PolyP(p, {});
      }
    }();
    if (fp.is_zero() || fp.degree() != f.degree()) {
      res.skipped.push_back({p, "divides leading coefficient"});
      continue;
    }
    if (fp.degree() >= 1 && !is_squarefree_mod_p(fp)) {
      res.skipped.push_back({p, "not squarefree"});
      continue;
    }
    ScanEntry e{p, ddf_type(fp)};
    res.log.push_back(e);
    if (pred && pred(e.type)) {
      res.match = e;
      break;
    }
  }
  return res;
}

std::string scan_entry_json(const ScanEntry& e) {
  std::string s = "{\"p\":" + std::to_string(e.p) + ",\"type\":[";
  for (size_t i = 0; i < e.type.degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e.type.degrees[i]);
  }
  return s + "]}";
}

std::string to_string(IrreducibilityStatus s) {
  switch (s) {
    case IrreducibilityStatus::Irreducible:
      return "irreducible";
    case IrreducibilityStatus::Reducible:
      return "reducible";
    case IrreducibilityStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// Divisors of |n| by trial division, or nullopt when n has a prime factor
// beyond the trial bound or too many divisors.
std::optional<std::vector<Integer>> small_divisors(const Integer& n) {
  constexpr unsigned long kTrialBound = 1'000'000;
  constexpr size_t kMaxDivisors = 5000;
  Integer m = abs(n);
  if (m == 0) return std::nullopt;
  std::map<Integer, int> fac;
  for (unsigned long q = 2; q <= kTrialBound && Integer(q) * q <= m; ++q) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      fac[Integer(q)]++;
      m /= q;
    }
  }
  if (m > 1) {
    if (m > Integer(kTrialBound) * kTrialBound) return std::nullopt;
    fac[m]++;
  }
  std::vector<Integer> divs{1};
  for (const auto& [q, e] : fac) {
    std::vector<Integer> next;
    Integer pw = 1;
    for (int i = 0; i <= e; ++i) {
      for (const auto& d : divs) next.push_back(d * pw);
      pw *= q;
    }
    divs = std::move(next);
    if (divs.size() > kMaxDivisors) return std::nullopt;
  }
  return divs;
}

// sums[k]: some sub-multiset of the degrees adds up to k
std::vector<bool> subset_sums(const FactorType& t, int n) {
  std::vector<bool> sums(static_cast<size_t>(n) + 1, false);
  sums[0] = true;
  for (int deg : t.degrees) {
    for (int s = n; s >= deg; --s) {
      if (sums[static_cast<size_t>(s - deg)]) sums[static_cast<size_t>(s)] = true;
    }
  }
  return sums;
}

std::optional<Rational> find_rational_root(const IntPoly& f) {
  if (sgn(f.c.front()) == 0) return Rational(0);
  auto nums = small_divisors(f.c.front());
  auto dens = small_divisors(f.lead());
  if (!nums || !dens || nums->size() * dens->size() > 200000) return std::nullopt;
  for (const auto& q : *dens) {
    for (const auto& p : *nums) {
      for (int sign : {1, -1}) {
        Rational r(p * sign, q);
        r.canonicalize();
        if (r.get_den() != q) continue;  // already tried in lowest terms
        if (sgn(f.eval(r)) == 0) return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

IrreducibilityCertificate certify_irreducible_Q(const IntPoly& f, unsigned budget,
                                                bool rational_root_check) {
  IrreducibilityCertificate cert;
  const int n = f.degree();
  if (n < 1) throw DomainError("certify_irreducible_Q needs degree >= 1");
  if (n == 1) {
    cert.status = IrreducibilityStatus::Irreducible;
    cert.reason = "linear";
    return cert;
  }
  if (auto r = rational_root_check ? find_rational_root(f) : std::nullopt) {
    cert.status = IrreducibilityStatus::Reducible;
    cert.rational_root = *r;
    cert.reason = "rational root " + r->get_str();
    return cert;
  }
  // degrees a proper factor could still have
  std::vector<bool> possible(static_cast<size_t>(n), true);
  possible[0] = false;
  std::vector<size_t> sieve_steps;  // indices into the scan log
  size_t calls = 0;
  auto pred = [&](const FactorType& t) {
    const size_t index = calls++;
    if (t.degrees.size() == 1) return true;
    std::vector<bool> sums = subset_sums(t, n);
    bool changed = false;
    bool any = false;
    for (int s = 1; s < n; ++s) {
      auto k = static_cast<size_t>(s);
      if (possible[k] && !sums[k]) {
        possible[k] = false;
        changed = true;
      }
      any = any || possible[k];
    }
    if (changed) sieve_steps.push_back(index);
    return !any;
  };
  cert.scan = scan_primes(f, pred, budget);
  for (size_t i : sieve_steps) cert.sieve_primes.push_back(cert.scan.log[i].p);
  if (cert.scan.match) {
    cert.status = IrreducibilityStatus::Irreducible;
    if (cert.scan.match->type.degrees.size() == 1) {
      cert.irreducible_mod = cert.scan.match;
      cert.sieve_primes.clear();
      cert.reason = "irreducible mod " + std::to_string(cert.scan.match->p);
    } else {
      cert.reason = "factor degree sets are disjoint across primes";
    }
    return cert;
  }
  cert.status = IrreducibilityStatus::Inconclusive;
  cert.reason = "no certificate within " + std::to_string(budget) + " primes";
  return cert;
}

}  // namespace galorb
