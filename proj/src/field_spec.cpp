#include "galorb/field_spec.hpp"

#include <string>

#include "galorb/errors.hpp"

namespace galorb {

int root_of_unity_order(int n) { return n % 2 == 1 ? n : 2 * n; }

namespace {

FieldSpec row(int n, long d, QuadRat t, bool extension) {
  FieldSpec s;
  s.n = n;
  s.root_order = root_of_unity_order(n);
  s.d = d;
  s.t = t;
  s.admissible_t.push_back(t);
  // the Galois conjugate t' is (zeta^k + zeta^-k)^2 for another primitive k
  if (!t.is_rational()) s.admissible_t.push_back(t.conj());
  s.extension = extension;
  return s;
}

std::vector<FieldSpec> build_table() {
  std::vector<FieldSpec> table;
  table.push_back(row(3, 1, QuadRat(1), true));
  table.push_back(row(4, 1, QuadRat(2), true));
  table.push_back(row(5, 5, QuadRat(Rational(3, 2), Rational(-1, 2), 5), false));
  table.push_back(row(6, 1, QuadRat(3), false));
  table.push_back(row(8, 2, QuadRat(2, 1, 2), false));
  table.push_back(row(10, 5, QuadRat(Rational(5, 2), Rational(-1, 2), 5), false));
  table.push_back(row(12, 3, QuadRat(2, 1, 3), false));
  return table;
}

}  // namespace

const std::vector<FieldSpec>& field_spec_table() {
  static const std::vector<FieldSpec> table = build_table();
  return table;
}

std::optional<FieldSpec> find_field_spec(int n, long d) {
  for (const auto& s : field_spec_table()) {
    if (s.n == n && s.d == d) return s;
  }
  return std::nullopt;
}

FieldSpec field_spec(int n, long d) {
  auto s = find_field_spec(n, d);
  if (!s) {
    throw DomainError("no field table row for n=" + std::to_string(n) + ", D=" + std::to_string(d));
  }
  return *s;
}

}  // namespace galorb
