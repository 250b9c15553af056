#ifndef GB_REPORT_JSON_HPP
#define GB_REPORT_JSON_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gb/bounds.hpp"

namespace gb {

inline constexpr const char* kToolVersion = "genusbound 1.0.0";

/// Lossless report serialization: every integer is emitted as a decimal
/// string together with a factorization sidecar, and parsing re-verifies
/// that the sidecar multiplies back to the stated value.
nlohmann::json report_to_json(const BoundReport& rep, std::uint64_t seed, double seconds);
BoundReport report_from_json(const nlohmann::json& j);

std::string serialize_report(const BoundReport& rep, std::uint64_t seed, double seconds);
BoundReport parse_report(const std::string& text);

// building blocks shared with the cache
nlohmann::json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const nlohmann::json& j);
nlohmann::json prime_above_to_json(const PrimeAbove& pa);
PrimeAbove prime_above_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const FieldCertificate& c);
FieldCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace gb

#endif
