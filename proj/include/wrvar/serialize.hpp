#ifndef WRVAR_SERIALIZE_HPP
#define WRVAR_SERIALIZE_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "wrvar/structure.hpp"
#include "wrvar/variety.hpp"

namespace wrvar {

// All documents use alphabetically ordered keys (the library default), so
// equal inputs render byte-identically.
nlohmann::json structure_json(const StructureReport& report);
nlohmann::json verdict_json(const CriterionVerdict& verdict);
nlohmann::json fingen_json(const FinGenResult& result);
nlohmann::json law_json(const Word& word, const LawCheckResult& result);
nlohmann::json membership_json(const MembershipResult& result);
nlohmann::json certificate_json(const SeparationCertificate& cert);
nlohmann::json separation_json(const SeparationOutcome& outcome);

// Rebuild both sides of a serialized certificate and re-run the checks: the
// word must be an exhaustive law of the law-side group with the recorded
// tuple count, and the recorded tuple must lie in the witness and violate the
// word there.  Each check lands in `checks` as "name: detail".
struct VerifyReport {
  bool ok = false;
  std::vector<std::string> checks;
};
VerifyReport verify_certificate(const nlohmann::json& doc,
                                std::uint64_t cap = kEnumerationCap,
                                std::uint64_t scan_cap = kScanCap);

// Structure-report cache: one JSON file per key under dir.  The key hashes
// the canonical expression text together with the cap, and every document
// carries a version marker; a mismatch in any of the three is a miss.
std::string cache_key(const std::string& expr_text, std::uint64_t cap);
std::optional<nlohmann::json> cache_load(const std::string& dir, const std::string& expr_text,
                                         std::uint64_t cap);
void cache_store(const std::string& dir, const std::string& expr_text, std::uint64_t cap,
                 const nlohmann::json& report);

}  // namespace wrvar

#endif
