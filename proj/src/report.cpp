#include "hammock/report.hpp"

namespace hammock {

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) p[key] = value;
  j["params"] = p;
  j["pass"] = pass;
  j["counts"] = counts;
  j["witness"] = witness;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr;
}

}  // namespace hammock
