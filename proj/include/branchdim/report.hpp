#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace branchdim {

using Json = nlohmann::ordered_json;

/// Outcome of one verification check. `witnesses` holds the computed orders,
/// indices and any offending elements; it is never empty.
struct VerificationReport {
  std::string check;
  bool passed = false;
  std::size_t level = 0;  // deepest congruence level the check used
  Json witnesses = Json::object();

  std::string status() const { return passed ? "pass" : "fail"; }
  /// {"check", "status", "level", "witnesses"} in that order.
  Json to_json() const;
  /// One line: "<check>: pass|fail (level n)".
  std::string summary() const;
};

Json to_json(const std::vector<VerificationReport>& reports, const std::string& suite);

}  // namespace branchdim
