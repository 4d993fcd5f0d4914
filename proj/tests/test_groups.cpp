#include <doctest.h>

#include <set>

#include "galorb/errors.hpp"
#include "galorb/group_model.hpp"

using namespace galorb;

TEST_CASE("wreath model order and relations") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    GroupModel g = wreath_group_model(n);
    std::set<Perm> distinct(g.elements.begin(), g.elements.end());
    CHECK(distinct.size() == static_cast<size_t>(2 * n * n));
    CHECK(compose(g.rho, g.sigma) == compose(g.tau, g.rho));
    CHECK(compose(g.rho, g.tau) == compose(g.sigma, g.rho));
    CHECK(compose(compose(g.rho, g.sigma), compose(g.tau, g.rho)) == compose(g.sigma, g.tau));
    CHECK(compose(g.sigma, g.tau) == compose(g.tau, g.sigma));
    CHECK(perm_pow(g.sigma, n) == identity_perm(2 * n));
    CHECK(compose(g.rho, g.rho) == identity_perm(2 * n));
    CHECK(g.relations_hold());
    // closed under composition
    for (const auto& a : {g.sigma, g.tau, g.rho}) {
      for (const auto& e : g.elements) CHECK(distinct.count(compose(a, e)) == 1);
    }
    CHECK(g.element(1, 0, 0) == g.sigma);
    CHECK(g.element(0, 1, 0) == g.tau);
    CHECK(g.element(0, 0, 1) == g.rho);
  }
  CHECK_THROWS(wreath_group_model(2));
}

TEST_CASE("dihedral model order and relation") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    DihedralModel g = dihedral_model(n);
    std::set<Perm> distinct(g.elements.begin(), g.elements.end());
    CHECK(distinct.size() == static_cast<size_t>(2 * n));
    CHECK(compose(g.reflection, g.rotation) == compose(inverse(g.rotation), g.reflection));
    CHECK(perm_pow(g.rotation, n) == identity_perm(n));
    CHECK(compose(g.reflection, g.reflection) == identity_perm(n));
  }
}

TEST_CASE("admissible cycle types") {
  auto d10 = admissible_types(dihedral_model(10));
  std::set<FactorType> expect{FactorType({10}), FactorType({5, 5}), FactorType({2, 2, 2, 2, 2}),
                              FactorType({2, 2, 2, 2, 1, 1}), FactorType(std::vector<int>(10, 1))};
  CHECK(d10 == expect);
  auto d5 = admissible_types(dihedral_model(5));
  CHECK(d5 == std::set<FactorType>{FactorType({5}), FactorType({2, 2, 1}), FactorType({1, 1, 1, 1, 1})});
  CHECK(cyclic_types(5) == std::set<FactorType>{FactorType({5}), FactorType({1, 1, 1, 1, 1})});
  CHECK(cyclic_types(6).count(FactorType({3, 3})) == 1);
  CHECK(cyclic_types(6).count(FactorType({2, 2, 2})) == 1);
  auto w5 = admissible_types(wreath_group_model(5));
  CHECK(w5.count(FactorType({5, 1, 1, 1, 1, 1})) == 1);
  CHECK(w5.count(FactorType({10})) == 1);
  CHECK(w5.count(FactorType({2, 2, 2, 2, 2})) == 1);
  CHECK(w5.count(FactorType({3, 1, 1, 1, 1, 1, 1, 1})) == 0);
}

TEST_CASE("permutation helpers") {
  Perm p{1, 2, 0, 3};
  CHECK(compose(p, inverse(p)) == identity_perm(4));
  CHECK(perm_pow(p, 3) == identity_perm(4));
  CHECK(cycle_type(p) == FactorType({3, 1}));
  Perm q{1, 0, 2, 3};
  // compose(p, q)(i) = p(q(i))
  CHECK(compose(p, q)[0] == p[q[0]]);
}
