#ifndef SUPERAL_REPORT_HPP
#define SUPERAL_REPORT_HPP

#include "superal/scalar.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace superal {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr const char* kReportSchemaVersion = "1";

/// Machine-readable record of one verification run.
///
/// Serialization is deliberately deterministic: JSON keys are sorted, every
/// integer is rendered as a decimal string (several exceed 2^53), and wall
/// time is reported on stderr by the CLI rather than stored here, so that
/// identical configurations produce byte-identical reports regardless of
/// worker count or machine speed.
struct VerificationReport {
  std::string claim;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t tuples_checked = 0;
  nlohmann::json failures = nlohmann::json::array();
  std::vector<std::uint64_t> primes;
  std::string coefficient_bound;  // decimal string; empty when not applicable
  std::uint64_t seed = 0;
  std::string status = "verified";

  bool pass() const { return status == "verified"; }

  void record_failure(nlohmann::json witness, std::size_t cap = 5) {
    status = "falsified";
    if (failures.size() < cap) failures.push_back(std::move(witness));
  }

  /// Merges a sub-report: claim/status aggregation for suite runners.
  void absorb(const VerificationReport& sub) {
    tuples_checked += sub.tuples_checked;
    if (!sub.pass()) status = "falsified";
    for (const auto& f : sub.failures)
      if (failures.size() < 5) failures.push_back(f);
    for (std::uint64_t p : sub.primes)
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
};

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["toolkit_version"] = kToolkitVersion;
  j["claim"] = r.claim;
  j["parameters"] = r.parameters;
  j["tuples_checked"] = std::to_string(r.tuples_checked);
  j["failures"] = r.failures;
  nlohmann::json primes = nlohmann::json::array();
  for (std::uint64_t p : r.primes) primes.push_back(std::to_string(p));
  j["primes"] = primes;
  j["coefficient_bound"] = r.coefficient_bound;
  j["seed"] = std::to_string(r.seed);
  j["status"] = r.status;
  return j;
}

/// Deterministic serialization; format is "json" or "text".
inline std::string emit_report(const VerificationReport& r, const std::string& format) {
  if (format == "json") return report_to_json(r).dump(2) + "\n";
  if (format != "text") throw std::invalid_argument("emit_report: format must be json or text");
  std::string out;
  out += "claim:             " + r.claim + "\n";
  out += "status:            " + r.status + "\n";
  out += "tuples_checked:    " + std::to_string(r.tuples_checked) + "\n";
  for (auto it = r.parameters.begin(); it != r.parameters.end(); ++it)
    out += "param " + it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
  if (!r.coefficient_bound.empty()) out += "coefficient_bound: " + r.coefficient_bound + "\n";
  for (std::uint64_t p : r.primes) out += "prime:             " + std::to_string(p) + "\n";
  out += "seed:              " + std::to_string(r.seed) + "\n";
  out += "failures:          " + std::to_string(r.failures.size()) + "\n";
  for (const auto& f : r.failures) out += "  witness: " + f.dump() + "\n";
  return out;
}

}  // namespace superal

#endif  // SUPERAL_REPORT_HPP
