#include "ybrg/report.hpp"

#include <ctime>

namespace ybrg {

bool Report::verdict() const {
  for (const auto& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& check : checks) {
    nlohmann::json j{{"name", check.name},
                     {"params", check.params},
                     {"threshold", check.threshold},
                     {"pass", check.pass}};
    j["value"] = check.value ? nlohmann::json(*check.value)
                             : nlohmann::json(nullptr);
    if (check.error) j["error"] = *check.error;
    checks_json.push_back(std::move(j));
  }
  return nlohmann::json{{"version", version},
                        {"timestamp", timestamp},
                        {"config", config},
                        {"checks", std::move(checks_json)},
                        {"verdict", verdict()}};
}

Report Report::from_json(const nlohmann::json& j) {
  Report report;
  report.version = j.at("version").get<std::string>();
  report.timestamp = j.at("timestamp").get<std::string>();
  report.config = j.at("config");
  for (const auto& cj : j.at("checks")) {
    Check check;
    check.name = cj.at("name").get<std::string>();
    check.params = cj.at("params");
    check.threshold = cj.at("threshold").get<double>();
    check.pass = cj.at("pass").get<bool>();
    if (!cj.at("value").is_null()) check.value = cj.at("value").get<double>();
    if (cj.contains("error")) check.error = cj.at("error").get<std::string>();
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::string current_timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ybrg
