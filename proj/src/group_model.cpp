#include "galorb/group_model.hpp"

#include <numeric>
#include <stdexcept>

#include "galorb/errors.hpp"

namespace galorb {

Perm identity_perm(int size) {
  Perm p(static_cast<size_t>(size));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<size_t>(q[i])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Perm perm_pow(const Perm& p, int k) {
  Perm r = identity_perm(static_cast<int>(p.size()));
  Perm base = k < 0 ? inverse(p) : p;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r = compose(base, r);
  return r;
}

FactorType cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return FactorType(std::move(lens));
}

bool GroupModel::relations_hold() const {
  const Perm id = identity_perm(2 * n);
  if (compose(rho, rho) != id) return false;
  if (compose(rho, sigma) != compose(tau, rho)) return false;
  if (compose(rho, tau) != compose(sigma, rho)) return false;
  if (perm_pow(sigma, n) != id || perm_pow(tau, n) != id) return false;
  if (compose(sigma, tau) != compose(tau, sigma)) return false;
  std::set<Perm> distinct(elements.begin(), elements.end());
  return distinct.size() == static_cast<size_t>(2 * n * n);
}

GroupModel wreath_group_model(int n) {
  if (n < 3) throw DomainError("wreath model needs n >= 3");
  GroupModel g;
  g.n = n;
  g.sigma = identity_perm(2 * n);
  g.tau = identity_perm(2 * n);
  g.rho = identity_perm(2 * n);
  for (int i = 0; i < n; ++i) {
    g.sigma[static_cast<size_t>(i)] = (i + 1) % n;
    g.tau[static_cast<size_t>(n + i)] = n + (i + 1) % n;
    g.rho[static_cast<size_t>(i)] = n + i;
    g.rho[static_cast<size_t>(n + i)] = i;
  }
  g.elements.reserve(static_cast<size_t>(2 * n * n));
  for (int j = 0; j < n; ++j) {
    Perm sj = perm_pow(g.sigma, j);
    for (int k = 0; k < n; ++k) {
      Perm sjtk = compose(sj, perm_pow(g.tau, k));
      g.elements.push_back(sjtk);
      g.elements.push_back(compose(sjtk, g.rho));
    }
  }
  if (!g.relations_hold()) throw std::logic_error("wreath model relations failed");
  return g;
}

DihedralModel dihedral_model(int n) {
  if (n < 3) throw DomainError("dihedral model needs n >= 3");
  DihedralModel g;
  g.n = n;
  g.rotation.resize(static_cast<size_t>(n));
  g.reflection.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    g.rotation[static_cast<size_t>(i)] = (i + 1) % n;
    g.reflection[static_cast<size_t>(i)] = (n - i) % n;
  }
  for (int k = 0; k < n; ++k) g.elements.push_back(perm_pow(g.rotation, k));
  for (int k = 0; k < n; ++k) g.elements.push_back(compose(g.reflection, perm_pow(g.rotation, k)));
  return g;
}

std::set<FactorType> admissible_types(const GroupModel& g) {
  std::set<FactorType> out;
  for (const auto& e : g.elements) out.insert(cycle_type(e));
  return out;
}

std::set<FactorType> admissible_types(const DihedralModel& g) {
  std::set<FactorType> out;
  for (const auto& e : g.elements) out.insert(cycle_type(e));
  return out;
}

std::set<FactorType> cyclic_types(int n) {
  std::set<FactorType> out;
  Perm c = identity_perm(n);
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = (i + 1) % n;
  for (int k = 0; k < n; ++k) out.insert(cycle_type(perm_pow(c, k)));
  return out;
}

}  // namespace galorb
