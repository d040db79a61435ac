#include "branchdim/report.hpp"

namespace branchdim {

Json VerificationReport::to_json() const {
  Json out;
  out["check"] = check;
  out["status"] = status();
  out["level"] = level;
  out["witnesses"] = witnesses;
  return out;
}

std::string VerificationReport::summary() const {
  return check + ": " + status() + " (level " + std::to_string(level) + ")";
}

Json to_json(const std::vector<VerificationReport>& reports, const std::string& suite) {
  Json out;
  bool all = true;
  Json checks = Json::array();
  for (const auto& r : reports) {
    all = all && r.passed;
    checks.push_back(r.to_json());
  }
  out["suite"] = suite;
  out["status"] = all ? "pass" : "fail";
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace branchdim
