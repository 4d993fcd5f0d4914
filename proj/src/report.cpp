#include "galorb/report.hpp"

#include "galorb/text.hpp"

namespace galorb {

using nlohmann::json;

json to_json(const FactorType& t) { return t.degrees; }

json to_json(const ScanEntry& e) { return {{"p", e.p}, {"type", to_json(e.type)}}; }

json to_json(const ScanResult& s) {
  json log = json::array();
  for (const auto& e : s.log) log.push_back(to_json(e));
  json skipped = json::array();
  for (const auto& k : s.skipped) skipped.push_back({{"p", k.p}, {"reason", k.reason}});
  json out = {{"primes_examined", s.primes_examined}, {"log", log}, {"skipped", skipped}};
  out["match"] = s.match ? to_json(*s.match) : json(nullptr);
  return out;
}

json to_json(const IrreducibilityCertificate& c) {
  json out = {{"status", to_string(c.status)}, {"reason", c.reason}, {"sieve_primes", c.sieve_primes}};
  out["irreducible_mod"] = c.irreducible_mod ? to_json(*c.irreducible_mod) : json(nullptr);
  out["rational_root"] = c.rational_root ? json(c.rational_root->get_str()) : json(nullptr);
  out["scan"] = to_json(c.scan);
  return out;
}

json to_json(const ValidityReport& v) {
  json out = {{"ok", v.ok}, {"reason", v.reason}};
  out["matched_t"] = v.matched_t ? json(format_quadrat(*v.matched_t)) : json(nullptr);
  return out;
}

json to_json(const Construction& c) {
  return {{"f1", format_poly(c.f1)},
          {"degree", c.degree},
          {"full_degree", c.full_degree},
          {"orbit_num", format_poly(c.orbit.num())},
          {"orbit_den", format_poly(c.orbit.den())},
          {"validity", to_json(c.validity)}};
}

json to_json(const CyclicCertificate& c) {
  json ps = json::array();
  for (const auto& p : c.zero_exprs) ps.push_back(format_poly(p));
  json checks = json::array();
  for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"ok", k.ok}, {"index", k.index}, {"informational", k.informational}});
  json out = {{"f1", format_poly(c.f1)}, {"zero_exprs", ps}, {"checks", checks}, {"pass", c.pass}};
  out["matrix"] = c.matrix ? json(format_matrix(*c.matrix)) : json(nullptr);
  out["failed_index"] = c.failed_index ? json(*c.failed_index) : json(nullptr);
  return out;
}

json to_json(const WreathReport& r) {
  json bad = json::array();
  for (const auto& t : r.inconsistent_types) bad.push_back(to_json(t));
  json out = {{"n", r.n},
              {"f1", format_poly(r.f1)},
              {"f1_conj", format_poly(r.f1_conj)},
              {"product", format_poly(r.wreath.product)},
              {"m", r.wreath.m.get_str()},
              {"f", format_poly(r.wreath.f)},
              {"irreducibility", to_json(r.irreducibility)},
              {"witness_scan", to_json(r.witness_scan)},
              {"types_consistent", r.types_consistent},
              {"inconsistent_types", bad},
              {"degree_claim", r.degree_claim},
              {"complete", r.complete},
              {"reason", r.reason}};
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return out;
}

json to_json(const DihedralResult& r, int digits) {
  auto nums = [&](const std::vector<CplxF>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(z.re.str(digits));
    return a;
  };
  json bad = json::array();
  for (const auto& t : r.inadmissible_types) bad.push_back(to_json(t));
  return {{"g", format_poly(r.g)},
          {"power", r.power},
          {"prec_bits", r.prec_used},
          {"escalations", r.escalations},
          {"scale", r.scale.get_str()},
          {"x", nums(r.orbit.xs)},
          {"y", nums(r.orbit.ys)},
          {"conjugates", nums(r.conjugates)},
          {"recompute_ok", r.recompute_ok},
          {"irreducibility", to_json(r.irreducibility)},
          {"type_scan", to_json(r.type_scan)},
          {"types_admissible", r.types_admissible},
          {"inadmissible_types", bad},
          {"verified", r.verified()},
          {"notes", r.notes}};
}

}  // namespace galorb
