#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace ybrg {

inline constexpr const char* kVersion = "0.1.0";

/// One verification check. `params` records what was swept; `pass` is
/// computed from value, threshold and the rule stored in params
/// ("require": "below" | "leq" | "above" | "range"). `value` is absent and
/// `error` set when the check aborted with a domain error.
struct Check {
  std::string name;
  nlohmann::json params;
  std::optional<double> value;
  double threshold = 0.0;
  bool pass = false;
  std::optional<std::string> error;
};

/// Machine-readable verification report; serialization round-trips
/// losslessly (numbers stored as JSON doubles with shortest-round-trip
/// formatting).
struct Report {
  std::string version;
  std::string timestamp;
  nlohmann::json config;
  std::vector<Check> checks;

  /// Conjunction of the individual pass flags.
  bool verdict() const;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string current_timestamp_utc();

}  // namespace ybrg
