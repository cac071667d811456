#include "ybrg/suites.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "ybrg/coupling.hpp"
#include "ybrg/rgflow.hpp"
#include "ybrg/smatrix.hpp"
#include "ybrg/spectral.hpp"
#include "ybrg/tensor.hpp"
#include "ybrg/transport.hpp"
#include "ybrg/wavefunction.hpp"

namespace ybrg::suites {

namespace {

enum class Require { below, leq, above, range };

const char* require_name(Require r) {
  switch (r) {
    case Require::below: return "below";
    case Require::leq: return "leq";
    case Require::above: return "above";
    case Require::range: return "range";
  }
  return "?";
}

Check run_check(std::string name, nlohmann::json params, Require rule,
                double threshold, double lower,
                const std::function<double()>& eval) {
  Check check;
  check.name = std::move(name);
  check.params = std::move(params);
  check.params["require"] = require_name(rule);
  if (rule == Require::range) check.params["lower"] = lower;
  check.threshold = threshold;
  try {
    const double value = eval();
    check.value = value;
    switch (rule) {
      case Require::below: check.pass = value < threshold; break;
      case Require::leq: check.pass = value <= threshold; break;
      case Require::above: check.pass = value > threshold; break;
      case Require::range:
        check.pass = lower <= value && value <= threshold;
        break;
    }
  } catch (const Error& e) {
    check.pass = false;
    check.error = e.what();
  }
  return check;
}

Check run_check(std::string name, nlohmann::json params, Require rule,
                double threshold, const std::function<double()>& eval) {
  return run_check(std::move(name), std::move(params), rule, threshold, 0.0,
                   eval);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

SpectralProfile profile_from(const VerifyConfig& cfg) {
  if (cfg.profile == "sine") {
    return SpectralProfile::sine_perturbed(cfg.resolved_a(), cfg.c, cfg.eps);
  }
  return SpectralProfile::linear(cfg.resolved_a(), cfg.c);
}

SpectralProfile monotone_cubic() {
  return SpectralProfile::custom([](double z) { return z + 0.3 * z * z * z; },
                                 "cubic(z+0.3z^3)");
}

// ---------------------------------------------------------------- ybe

std::vector<Check> ybe_suite(const VerifyConfig& cfg) {
  std::vector<Check> checks;

  checks.push_back(run_check(
      "smatrix_unitarity",
      {{"f_range", {-5.0, 5.0}}, {"u_range", {0.05, 3.09}}, {"grid", "41x40"}},
      Require::below, 1e-14, [] {
        double worst = 0.0;
        for (int i = 0; i <= 40; ++i) {
          const double f = -5.0 + 0.25 * i;
          for (int k = 0; k < 40; ++k) {
            const double u = 0.05 + (3.09 - 0.05) * k / 39.0;
            const TwoSiteOperator s = impurity_smatrix(SMatrixArgs(f, u));
            const Complex b = s(1, 1), c = s(1, 2);
            worst = std::max(worst, std::abs(std::norm(b) + std::norm(c) - 1.0));
            worst = std::max(worst, std::abs(2.0 * std::real(b * std::conj(c))));
          }
        }
        return worst;
      }));

  checks.push_back(run_check(
      "smatrix_inverse", {{"samples", 100}}, Require::below, 1e-13, [&cfg] {
        std::mt19937_64 rng(cfg.seed ^ 0x1001);
        const ChainSpec chain(1);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
          const double x = uniform(rng, -3.0, 3.0);
          const double u = uniform(rng, 0.05, 1.5);
          worst = std::max(worst, inverse_property_residual(x, u, chain, 1, 0));
        }
        return worst;
      }));

  const SpectralProfile lin = SpectralProfile::linear(cfg.resolved_a(), cfg.c);
  const SpectralProfile cub = monotone_cubic();
  struct YbeCase {
    const char* name;
    const SpectralProfile* profile;
    bool particle;
    std::uint64_t salt;
  };
  const YbeCase cases[] = {{"ybe_impurity_linear", &lin, false, 0x1002},
                           {"ybe_impurity_monotone", &cub, false, 0x1003},
                           {"ybe_particle_linear", &lin, true, 0x1004},
                           {"ybe_particle_monotone", &cub, true, 0x1005}};
  for (const auto& c : cases) {
    checks.push_back(run_check(
        c.name, {{"samples", 100}, {"profile", c.profile->label()}},
        Require::below, 1e-12, [&cfg, c] {
          std::mt19937_64 rng(cfg.seed ^ c.salt);
          double worst = 0.0;
          for (int k = 0; k < 100; ++k) {
            const double zi = uniform(rng, -2.0, 2.0);
            const double zj = uniform(rng, -2.0, 2.0);
            const double zk = uniform(rng, -2.0, 2.0);
            const double u = uniform(rng, 0.1, 1.4);
            worst = std::max(
                worst, c.particle
                           ? ybe_particle_residual(zi, zj, zk, *c.profile, u)
                           : ybe_impurity_residual(zi, zj, *c.profile, u));
          }
          return worst;
        }));
  }
  return checks;
}

// ---------------------------------------------------------- transport

std::vector<Check> transport_suite(const VerifyConfig& cfg) {
  std::vector<Check> checks;
  const SpectralProfile profile = profile_from(cfg);
  const double kappa = cfg.resolved_a() * cfg.L;

  checks.push_back(run_check(
      "transport_commutation",
      {{"n", cfg.n_particles}, {"configs", 50}, {"profile", profile.label()}},
      Require::below, cfg.tol, [&cfg, &profile, kappa] {
        std::mt19937_64 rng(cfg.seed ^ 0x2001);
        double worst = 0.0;
        for (int rep = 0; rep < 50; ++rep) {
          std::vector<double> zs(static_cast<std::size_t>(cfg.n_particles));
          for (auto& z : zs) z = uniform(rng, -2.0, 2.0);
          const TransportConfig tc{cfg.n_particles, zs, profile,
                                   uniform(rng, 0.1, 1.4), cfg.L, kappa};
          for (int i = 1; i <= cfg.n_particles; ++i) {
            for (int j = 1; j <= cfg.n_particles; ++j) {
              if (i != j) {
                worst = std::max(worst, commutation_residual(i, j, tc));
              }
            }
          }
        }
        return worst;
      }));

  checks.push_back(run_check(
      "transport_unitarity",
      {{"n", cfg.n_particles}, {"configs", 10}, {"profile", profile.label()}},
      Require::below, 1e-11, [&cfg, &profile, kappa] {
        std::mt19937_64 rng(cfg.seed ^ 0x2002);
        double worst = 0.0;
        for (int rep = 0; rep < 10; ++rep) {
          std::vector<double> zs(static_cast<std::size_t>(cfg.n_particles));
          for (auto& z : zs) z = uniform(rng, -2.0, 2.0);
          const TransportConfig tc{cfg.n_particles, zs, profile,
                                   uniform(rng, 0.1, 1.4), cfg.L, kappa};
          const Eigen::Index dim = tc.chain().dim();
          for (int j = 1; j <= cfg.n_particles; ++j) {
            const ChainOperator z_op = transport_operator(j, tc);
            worst = std::max(
                worst, residual(z_op.adjoint() * z_op,
                                ChainOperator::Identity(dim, dim)));
          }
        }
        return worst;
      }));

  checks.push_back(run_check(
      "transport_shift_property",
      {{"samples", 16}, {"profile", profile.label()}, {"kappa", kappa}},
      Require::below, cfg.tol, [&cfg, &profile, kappa] {
        std::mt19937_64 rng(cfg.seed ^ 0x2003);
        std::vector<double> samples(16);
        for (auto& z : samples) z = uniform(rng, -2.0, 2.0);
        return check_shift_property(profile, cfg.L, kappa, samples);
      }));

  return checks;
}

// ---------------------------------------------------------- couplings

std::vector<Check> couplings_suite(const VerifyConfig& cfg) {
  std::vector<Check> checks;

  checks.push_back(run_check(
      "coupling_roundtrip",
      {{"u_range", {0.06, 1.39}}, {"phi_range", {0.1, 5.0}}, {"grid", "25x40"}},
      Require::below, 1e-11, [] {
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
          const double u = 0.06 + (1.39 - 0.06) * i / 24.0;
          for (int k = 0; k < 40; ++k) {
            const double phi = 0.1 + (5.0 - 0.1) * k / 39.0;
            const CouplingPair pair = couplings_from_spectral(u, phi);
            const SpectralPoint pt = spectral_from_couplings(pair);
            worst = std::max(worst, std::abs(pt.f - phi));
            worst = std::max(worst, std::abs(pt.u - u));
          }
        }
        return worst;
      }));

  checks.push_back(run_check(
      "coupling_constraint_family",
      {{"u_range", {0.06, 1.39}}, {"phi_range", {-5.0, 5.0}}, {"branches", 2}},
      Require::below, 1e-13, [] {
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
          const double u = 0.06 + (1.39 - 0.06) * i / 24.0;
          for (int k = 0; k < 40; ++k) {
            const double phi = -5.0 + 10.0 * k / 39.0;
            for (const Branch br : {Branch::plus, Branch::minus}) {
              worst = std::max(
                  worst,
                  check_constraint(couplings_from_spectral(u, phi, br), u));
            }
          }
        }
        return worst;
      }));

  checks.push_back(run_check(
      "coupling_monotonicity", {{"u", cfg.u}, {"phi_range", {0.05, 6.0}}},
      Require::below, 0.0, [&cfg] {
        double prev = couplings_from_spectral(cfg.u, 0.05).j_perp;
        double max_increment = -1.0;
        for (int k = 1; k < 120; ++k) {
          const double phi = 0.05 + (6.0 - 0.05) * k / 119.0;
          const double next = couplings_from_spectral(cfg.u, phi).j_perp;
          max_increment = std::max(max_increment, next - prev);
          prev = next;
        }
        return max_increment;
      }));

  checks.push_back(run_check(
      "coupling_weak_residual", {{"u", 0.05}, {"phi", 2.0}}, Require::below,
      1e-5, [] {
        const CouplingPair pair = couplings_from_spectral(0.05, 2.0);
        return std::abs(weak_coupling_residual(pair, 0.05));
      }));

  checks.push_back(run_check(
      "coupling_toulouse", {{"u", "pi/2"}, {"phi_range", {0.05, 5.0}}},
      Require::below, 1e-12, [] {
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
          const double phi = 0.05 + (5.0 - 0.05) * k / 49.0;
          const CouplingPair pair = couplings_from_spectral(M_PI / 2.0, phi);
          worst = std::max(worst, std::abs(pair.j_par - M_PI));
        }
        return worst;
      }));

  checks.push_back(run_check(
      "kondo_temperature_equality",
      {{"j_values", {0.1, 0.25, 0.5, 1.0}}, {"cutoffs", {1.0, 10.0}}},
      Require::leq, 0.0, [] {
        double worst = 0.0;
        for (const double j : {0.1, 0.25, 0.5, 1.0}) {
          for (const double lam : {1.0, 10.0}) {
            const double bethe =
                kondo_temperature(1.0 / j, lam, KondoScheme::bethe);
            const double wilson = kondo_temperature(j, lam, KondoScheme::wilson);
            worst = std::max(worst, std::abs(bethe - wilson));
          }
        }
        return worst;
      }));

  checks.push_back(run_check(
      "shift_property_linear",
      {{"a", cfg.resolved_a()}, {"c", cfg.c}, {"L", cfg.L}}, Require::below,
      1e-15, [&cfg] {
        const SpectralProfile lin =
            SpectralProfile::linear(cfg.resolved_a(), cfg.c);
        const double samples[] = {-1.5, -0.25, 0.0, 0.3, 0.5, 1.0, 2.5};
        return check_shift_property(lin, cfg.L, cfg.resolved_a() * cfg.L,
                                    samples);
      }));

  return checks;
}

// ------------------------------------------------------------- rgflow

double aniso_family_deviation(double u) {
  const double a = -2.0 * u / M_PI;
  const double phi0 = -std::atanh(0.8);  // J_par = 2.5 u at the start
  const double phi1 = -3.0;
  const double t1 = (phi1 - phi0) / a;
  const CouplingPair start = couplings_from_spectral(u, phi0, Branch::minus);
  const RgTrajectory traj = integrate_rg(start, 0.0, t1, 4000, a, u);
  return compare_with_integrable(traj, u, a, phi0, Branch::minus).max_rel_dev;
}

std::vector<Check> rgflow_suite(const VerifyConfig& cfg) {
  std::vector<Check> checks;

  checks.push_back(run_check(
      "su2_closed_form_pointwise", {{"t_range", {0.5, 100.0}}, {"points", 2000}},
      Require::below, 1e-13, [] {
        double worst = 0.0;
        for (int k = 0; k < 2000; ++k) {
          const double t = 0.5 + (100.0 - 0.5) * k / 1999.0;
          worst = std::max(
              worst, std::abs(su2_rg_field(M_PI / t) + M_PI / (t * t)));
        }
        return worst;
      }));

  checks.push_back(run_check(
      "su2_rk4_endpoint",
      {{"t0", 1.0}, {"t1", 10.0}, {"steps", 100000}}, Require::below, 1e-8, [] {
        const auto traj = integrate_su2_rg(M_PI, 1.0, 10.0, 100000);
        const double expected = M_PI / 10.0;
        return std::abs(traj.back().second - expected) / expected;
      }));

  checks.push_back(run_check(
      "conserved_quantity_drift",
      {{"initial", {0.3, 0.1}}, {"steps", 10000}, {"u", cfg.u}},
      Require::below, 1e-10, [&cfg] {
        const double a = -2.0 * cfg.u / M_PI;
        const CouplingPair start{0.3, 0.1};
        const double q0 = conserved_quantity(start);
        const RgTrajectory traj =
            integrate_rg(start, 0.0, 10.0, 10000, a, cfg.u);
        double worst = 0.0;
        for (const auto& s : traj.samples) {
          worst = std::max(worst, std::abs(conserved_quantity(s.pair) - q0));
        }
        return worst;
      }));

  checks.push_back(run_check("aniso_dev_coarse", {{"u", 0.02}, {"steps", 4000}},
                             Require::below, 4e-5,
                             [] { return aniso_family_deviation(0.02); }));

  checks.push_back(run_check("aniso_dev_fine", {{"u", 0.002}, {"steps", 4000}},
                             Require::below, 4e-7,
                             [] { return aniso_family_deviation(0.002); }));

  checks.push_back(run_check(
      "aniso_scaling_ratio", {{"u_pair", {0.02, 0.002}}}, Require::range,
      120.0, 80.0,
      [] { return aniso_family_deviation(0.02) / aniso_family_deviation(0.002); }));

  checks.push_back(run_check(
      "rg_identification", {{"a", cfg.resolved_a()}, {"a_star", -2.0 * cfg.u / M_PI}},
      Require::below, 1e-3, [&cfg] {
        const double a_star = -2.0 * cfg.u / M_PI;
        return std::abs(cfg.resolved_a() - a_star) / std::abs(a_star);
      }));

  return checks;
}

// --------------------------------------------------------------- qkz1

std::vector<Check> qkz1_suite(const VerifyConfig& cfg) {
  std::vector<Check> checks;
  const SpectralProfile profile = profile_from(cfg);
  const int n_grid = 64;
  const int n_periods = 10;

  auto base_grid = [&cfg, n_grid] {
    std::vector<double> grid(n_grid);
    for (int k = 0; k < n_grid; ++k) grid[k] = cfg.L * k / n_grid;
    return grid;
  };

  auto random_field = [&cfg, &base_grid] {
    std::mt19937_64 rng(cfg.seed ^ 0x4001);
    std::vector<double> grid = base_grid();
    std::vector<AmplitudeVector> values(grid.size());
    for (auto& v : values) {
      v = AmplitudeVector(4);
      for (int i = 0; i < 4; ++i) {
        v[i] = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
      }
    }
    return AmplitudeField(0.0, cfg.L, std::move(grid), std::move(values));
  };

  checks.push_back(run_check(
      "qkz_roundtrip",
      {{"grid", n_grid}, {"periods", n_periods}, {"profile", profile.label()}},
      Require::below, 1e-11, [&] {
        const AmplitudeField initial = random_field();
        const AmplitudeField down =
            extend_one_particle(initial, n_periods, profile, cfg.u);
        // re-seed a base field at the lowest period and climb back up
        std::vector<double> grid(down.grid().size());
        std::vector<AmplitudeVector> values(down.grid().size());
        for (std::size_t k = 0; k < grid.size(); ++k) {
          grid[k] = down.z_at(k, -n_periods);
          values[k] = down.at(k, -n_periods);
        }
        const AmplitudeField reseeded(down.window_start() - n_periods * cfg.L,
                                      cfg.L, std::move(grid), std::move(values));
        const AmplitudeField up =
            extend_one_particle(reseeded, n_periods, profile, cfg.u);
        double worst = 0.0;
        for (std::size_t k = 0; k < initial.grid().size(); ++k) {
          worst = std::max(worst, (up.at(k, n_periods) - initial.at(k, 0))
                                      .cwiseAbs()
                                      .maxCoeff());
        }
        return worst;
      }));

  checks.push_back(run_check(
      "qkz_pbc_residual",
      {{"grid", n_grid}, {"periods", n_periods}, {"profile", profile.label()}},
      Require::below, 1e-12, [&] {
        const AmplitudeField field =
            extend_one_particle(random_field(), n_periods, profile, cfg.u);
        return pbc_residual(field, profile, cfg.u);
      }));

  checks.push_back(run_check(
      "qkz_sector_preservation", {{"sector", "S_z = 0"}}, Require::leq, 0.0,
      [&] {
        std::vector<AmplitudeVector> values(static_cast<std::size_t>(n_grid));
        for (auto& v : values) {
          v = AmplitudeVector::Zero(4);
          v[1] = 1.0;  // impurity up, particle down
        }
        const AmplitudeField field(0.0, cfg.L, base_grid(), std::move(values));
        const AmplitudeField ext =
            extend_one_particle(field, n_periods, profile, cfg.u);
        double leak = 0.0;
        for (int p = ext.min_period(); p <= ext.max_period(); ++p) {
          for (std::size_t k = 0; k < ext.grid().size(); ++k) {
            const AmplitudeVector& v = ext.at(k, p);
            leak = std::max(leak, std::max(std::abs(v[0]), std::abs(v[3])));
          }
        }
        return leak;
      }));

  checks.push_back(run_check(
      "qkz_highest_weight_invariance", {{"state", "all up"}}, Require::leq,
      0.0, [&] {
        std::vector<AmplitudeVector> values(static_cast<std::size_t>(n_grid));
        for (auto& v : values) {
          v = AmplitudeVector::Zero(4);
          v[0] = 1.0;
        }
        const AmplitudeField field(0.0, cfg.L, base_grid(), std::move(values));
        const AmplitudeField ext =
            extend_one_particle(field, n_periods, profile, cfg.u);
        double worst = 0.0;
        for (int p = ext.min_period(); p <= ext.max_period(); ++p) {
          for (std::size_t k = 0; k < ext.grid().size(); ++k) {
            worst = std::max(worst,
                             (ext.at(k, p) - ext.at(k, 0)).cwiseAbs().maxCoeff());
          }
        }
        return worst;
      }));

  return checks;
}

}  // namespace

double VerifyConfig::resolved_a() const {
  return a.value_or(-2.0 * u / M_PI);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ybe", "transport", "couplings",
                                              "rgflow", "qkz1"};
  return names;
}

std::vector<Check> run_suite_checks(const std::string& name,
                                    const VerifyConfig& cfg) {
  if (name == "ybe") return ybe_suite(cfg);
  if (name == "transport") return transport_suite(cfg);
  if (name == "couplings") return couplings_suite(cfg);
  if (name == "rgflow") return rgflow_suite(cfg);
  if (name == "qkz1") return qkz1_suite(cfg);
  throw DomainError("unknown suite: " + name);
}

Report run_suites(const std::vector<std::string>& names,
                  const VerifyConfig& cfg) {
  Report report;
  report.version = kVersion;
  report.timestamp = current_timestamp_utc();
  report.config = {{"u", cfg.u},
                   {"a", cfg.resolved_a()},
                   {"a_overridden", cfg.a.has_value()},
                   {"c", cfg.c},
                   {"L", cfg.L},
                   {"n", cfg.n_particles},
                   {"tol", cfg.tol},
                   {"profile", cfg.profile},
                   {"eps", cfg.eps},
                   {"seed", cfg.seed},
                   {"suites", names}};
  for (const auto& name : suite_names()) {
    if (std::find(names.begin(), names.end(), name) == names.end()) continue;
    for (auto& check : run_suite_checks(name, cfg)) {
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace ybrg::suites
