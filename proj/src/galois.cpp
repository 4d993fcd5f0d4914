#include "galorb/galois.hpp"

#include <stdexcept>

#include "galorb/errors.hpp"
#include "galorb/group_model.hpp"

namespace galorb {

Poly conjugate_poly(const Poly& f) {
  std::vector<QuadRat> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(x.conj());
  return Poly(std::move(c), f.d());
}

WreathProduct wreath_product_poly(const Poly& f1) {
  if (f1.d() == 1) throw DomainError("wreath product needs a quadratic ground field");
  WreathProduct w;
  w.square = f1.is_rational();
  Poly prod = f1 * conjugate_poly(f1);
  if (!prod.is_rational()) throw std::logic_error("f1 * f1' has an irrational coefficient");
  w.product = prod.with_d(1);
  auto integral = integralize(w.product);
  w.m = integral.m;
  w.f = to_int_poly(normalize_primitive(w.product));
  return w;
}

Poly zero_expression(const Poly& f1, const Mat2& a, int k) {
  if (k < 1) throw DomainError("zero_expression index must be >= 1");
  Mat2 m = mat_pow(a, static_cast<unsigned>(k - 1));
  long d = common_d(f1.d(), m.field());
  Poly num = Poly({m.b, m.a}, d);
  if (m.c.is_zero()) return (num * m.d.inverse()) % f1;
  Poly den = Poly({m.d, m.c}, d);
  ExtGcd eg = ext_gcd(f1, den);
  if (eg.gcd.degree() != 0) throw DegenerateError("cX + d is not coprime to f1");
  return (num * eg.v) % f1;
}

namespace {

void finish(CyclicCertificate& cert) {
  cert.pass = true;
  for (const auto& c : cert.checks) {
    if (!c.ok && !c.informational) {
      cert.pass = false;
      if (!cert.failed_index && c.index > 0) cert.failed_index = c.index;
    }
  }
}

void identity_checks(CyclicCertificate& cert, bool chain_informational) {
  const Poly& f1 = cert.f1;
  const auto& ps = cert.zero_exprs;
  for (size_t i = 0; i < ps.size(); ++i) {
    int k = static_cast<int>(i) + 2;
    cert.checks.push_back({"root", compose_mod(f1, ps[i], f1).is_zero(), k});
  }
  if (ps.empty()) return;
  const Poly& p2 = ps.front();
  for (size_t i = 1; i < ps.size(); ++i) {
    int k = static_cast<int>(i) + 1;  // P_2(P_k) = P_(k+1)
    bool ok = compose_mod(p2, ps[i - 1], f1) == ps[i] % f1;
    cert.checks.push_back({"chain", ok, k + 1, chain_informational});
  }
  bool closes = compose_mod(p2, ps.back(), f1) == Poly::x(f1.d()) % f1;
  cert.checks.push_back({"closure", closes, static_cast<int>(ps.size()) + 1, chain_informational});
}

// {X, P_2, ..., P_n} closed under composition mod f1, with an element of order n.
void group_checks(CyclicCertificate& cert) {
  const Poly& f1 = cert.f1;
  std::vector<Poly> set{Poly::x(f1.d()) % f1};
  for (const auto& p : cert.zero_exprs) set.push_back(p % f1);
  auto index_of = [&](const Poly& q) {
    for (size_t i = 0; i < set.size(); ++i) {
      if (set[i] == q) return static_cast<int>(i);
    }
    return -1;
  };
  bool distinct = true;
  for (size_t i = 0; i < set.size(); ++i) distinct = distinct && index_of(set[i]) == static_cast<int>(i);
  cert.checks.push_back({"distinct", distinct, 0});
  bool closed = distinct;
  for (size_t i = 1; closed && i < set.size(); ++i) {
    for (size_t j = 1; closed && j < set.size(); ++j) {
      closed = index_of(compose_mod(set[i], set[j], f1)) >= 0;
    }
  }
  cert.checks.push_back({"closed under composition", closed, 0});
  bool generator = false;
  for (size_t i = 1; closed && !generator && i < set.size(); ++i) {
    Poly q = set[i];
    size_t order = 1;
    while (!(q == set[0]) && order <= set.size()) {
      q = compose_mod(set[i], q, f1);
      ++order;
    }
    generator = order == set.size();
  }
  cert.checks.push_back({"cyclic generator", generator, 0});
}

}  // namespace

CyclicCertificate verify_cyclic(const Poly& f1, const Mat2& a) {
  CyclicCertificate cert;
  cert.f1 = f1;
  cert.matrix = a;
  const int n = f1.degree();
  if (n < 3) throw DomainError("verify_cyclic needs deg f1 >= 3");
  for (int k = 2; k <= n; ++k) {
    try {
      cert.zero_exprs.push_back(zero_expression(f1, a, k));
    } catch (const DegenerateError&) {
      cert.checks.push_back({"zero_expression", false, k});
      finish(cert);
      return cert;
    }
  }
  identity_checks(cert, false);
  Mat2 pw = Mat2::identity();
  bool early_scalar = false;
  for (int l = 1; l < n; ++l) {
    pw = pw * a;
    early_scalar = early_scalar || pw.is_scalar();
  }
  pw = pw * a;
  cert.checks.push_back({"A^n scalar", pw.is_scalar(), 0});
  cert.checks.push_back({"no earlier scalar power", !early_scalar, 0});
  finish(cert);
  return cert;
}

CyclicCertificate verify_cyclic(const Poly& f1, const std::vector<Poly>& zero_exprs) {
  CyclicCertificate cert;
  cert.f1 = f1;
  cert.zero_exprs = zero_exprs;
  if (static_cast<int>(zero_exprs.size()) != f1.degree() - 1) {
    cert.checks.push_back({"count", false, 0});
    cert.pass = false;
    return cert;
  }
  identity_checks(cert, true);
  group_checks(cert);
  finish(cert);
  return cert;
}

FactorType wreath_witness_type(int n) {
  std::vector<int> d(static_cast<size_t>(n) + 1, 1);
  d[0] = n;
  return FactorType(std::move(d));
}

WreathReport certify_wreath(const Poly& f1, const Mat2& /*a*/, unsigned prime_budget) {
  WreathReport rep;
  rep.n = f1.degree();
  rep.f1 = f1;
  rep.f1_conj = conjugate_poly(f1);
  rep.wreath = wreath_product_poly(f1);
  if (rep.wreath.square) {
    rep.reason = "f reducible (f = f1^2)";
    return rep;
  }
  rep.irreducibility = certify_irreducible_Q(rep.wreath.f, prime_budget);
  if (rep.irreducibility.status == IrreducibilityStatus::Reducible) {
    rep.reason = "f reducible";
    return rep;
  }
  if (rep.irreducibility.status == IrreducibilityStatus::Inconclusive) {
    rep.reason = "irreducibility of f inconclusive";
    return rep;
  }
  const FactorType target = wreath_witness_type(rep.n);
  rep.witness_scan = scan_primes(
      rep.wreath.f, [&](const FactorType& t) { return t == target; }, prime_budget);
  rep.witness = rep.witness_scan.match;

  const auto allowed = admissible_types(wreath_group_model(rep.n));
  for (const auto* log : {&rep.irreducibility.scan.log, &rep.witness_scan.log}) {
    for (const auto& e : *log) {
      if (!allowed.count(e.type)) rep.inconsistent_types.push_back(e.type);
    }
  }
  rep.types_consistent = rep.inconsistent_types.empty();
  if (!rep.witness) {
    rep.reason = "no prime with type " + target.str() + " within budget";
    return rep;
  }
  if (!rep.types_consistent) {
    rep.reason = "factorization type outside the wreath product cycle types";
    return rep;
  }
  rep.degree_claim = 2L * rep.n * rep.n;
  rep.complete = true;
  return rep;
}

bool irreducible_over_field(const Poly& f1, unsigned prime_budget) {
  if (f1.degree() < 1) return false;
  if (f1.d() == 1 || f1.is_rational()) {
    if (f1.d() != 1) return false;  // f1' = f1, nothing certifies irreducibility over K here
    auto cert = certify_irreducible_Q(to_int_poly(normalize_primitive(f1)), prime_budget);
    return cert.status == IrreducibilityStatus::Irreducible;
  }
  auto w = wreath_product_poly(f1);
  auto cert = certify_irreducible_Q(w.f, prime_budget);
  return cert.status == IrreducibilityStatus::Irreducible;
}

}  // namespace galorb
