#pragma once

#include <set>
#include <vector>

#include "galorb/modp.hpp"

namespace galorb {

// Permutation of {0, ..., size-1}; perm[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int size);
// (p * q)(i) = p(q(i)): q acts first.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Perm perm_pow(const Perm& p, int k);
FactorType cycle_type(const Perm& p);

/// C_n wr C_2 acting on x_1..x_n (points 0..n-1) and y_1..y_n (points n..2n-1).
struct GroupModel {
  int n = 0;
  Perm sigma;  // (x_1 ... x_n)
  Perm tau;    // (y_1 ... y_n)
  Perm rho;    // (x_1 y_1)...(x_n y_n)
  // sigma^j tau^k rho^l at index (j*n + k)*2 + l
  std::vector<Perm> elements;

  const Perm& element(int j, int k, int l) const {
    return elements[static_cast<size_t>((j * n + k) * 2 + l)];
  }
  bool relations_hold() const;
};

// Throws DomainError for n < 3 and std::logic_error if a relation fails.
GroupModel wreath_group_model(int n);

/// D_n acting on the vertices of an n-gon.
struct DihedralModel {
  int n = 0;
  Perm rotation;
  Perm reflection;
  std::vector<Perm> elements;  // rotation^k then reflection*rotation^k
};

DihedralModel dihedral_model(int n);

std::set<FactorType> admissible_types(const GroupModel& g);
std::set<FactorType> admissible_types(const DihedralModel& g);
std::set<FactorType> cyclic_types(int n);

}  // namespace galorb
