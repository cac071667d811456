#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybrg/report.hpp"

namespace ybrg::suites {

/// Shared parameters of the verification suites.
struct VerifyConfig {
  double u = 0.5;
  std::optional<double> a;  // linear profile slope; default -2u/pi
  double c = 0.0;
  double L = 1.0;
  int n_particles = 2;
  double tol = 1e-9;          // transport commutation pass threshold
  std::string profile = "linear";  // "linear" | "sine"
  double eps = 0.1;                // sine perturbation amplitude
  std::uint64_t seed = 20250810;

  double resolved_a() const;
};

/// Suite names in canonical order; "all" expands to this list.
const std::vector<std::string>& suite_names();

/// Runs one suite and returns its checks.
std::vector<Check> run_suite_checks(const std::string& name,
                                    const VerifyConfig& cfg);

/// Runs the named suites in canonical order and assembles the report
/// (version, timestamp, config echo, checks, verdict).
Report run_suites(const std::vector<std::string>& names,
                  const VerifyConfig& cfg);

}  // namespace ybrg::suites
