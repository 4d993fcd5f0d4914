#pragma once

#include <json.hpp>

#include "galorb/galois.hpp"
#include "galorb/moebius.hpp"
#include "galorb/resolvent.hpp"

namespace galorb {

// JSON views of certificates; polynomials and matrices use the text grammar.
nlohmann::json to_json(const FactorType& t);
nlohmann::json to_json(const ScanEntry& e);
nlohmann::json to_json(const ScanResult& s);
nlohmann::json to_json(const IrreducibilityCertificate& c);
nlohmann::json to_json(const ValidityReport& v);
nlohmann::json to_json(const Construction& c);
nlohmann::json to_json(const CyclicCertificate& c);
nlohmann::json to_json(const WreathReport& r);
nlohmann::json to_json(const DihedralResult& r, int digits);

}  // namespace galorb
