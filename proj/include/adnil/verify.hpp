#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace adnil {

/// kQuick limits every sweep to rank <= 4.
enum class Scope { kQuick, kFull };

struct ClaimInfo {
  std::string name;
  std::string summary;
};

struct ClaimResult {
  std::string name;
  bool passed = true;
  long long checks = 0;
  std::vector<std::string> failures;  // capped, with counterexamples
  std::vector<std::string> notes;
  double seconds = 0;
};

/// Every named claim, in report order.
const std::vector<ClaimInfo>& claims();

/// Throws std::invalid_argument for an unknown name.
ClaimResult run_claim(std::string_view name, Scope scope, int jobs = 1);
std::vector<ClaimResult> run_all(Scope scope, int jobs = 1);

nlohmann::json to_json(const ClaimResult& r);

}  // namespace adnil
