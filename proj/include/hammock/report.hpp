#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hammock {

/// Outcome of one named verification check. `counts` carries check-specific
/// numeric facts (cardinalities, residual summaries); `witness` stays null
/// unless the check found a counterexample. Serialization is deterministic:
/// running the same check twice yields byte-identical JSON.
struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, long long>> params;
  bool pass = false;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  nlohmann::ordered_json witness;

  nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports);

}  // namespace hammock
