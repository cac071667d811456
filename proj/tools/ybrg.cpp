// Command-line front end: verification suites and trajectory export.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ybrg/coupling.hpp"
#include "ybrg/report.hpp"
#include "ybrg/rgflow.hpp"
#include "ybrg/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

// write-to-temp-then-rename so readers never observe a partial file
void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct TrajOptions {
  double u = 0.5;
  double c = 0.0;
  double t0 = 1.0;
  double t1 = 10.0;
  int samples = 100;
  std::string branch = "+";
  bool su2 = false;
  std::string csv_path;
};

std::string render_trajectory(const TrajOptions& opt) {
  std::string csv = "t,j_par,j_perp,phi,constraint_residual,conserved_q\n";
  const ybrg::Branch branch =
      opt.branch == "-" ? ybrg::Branch::minus : ybrg::Branch::plus;
  const double a = -2.0 * opt.u / M_PI;

  for (int k = 0; k <= opt.samples; ++k) {
    const double t =
        (k == opt.samples) ? opt.t1
                           : opt.t0 + (opt.t1 - opt.t0) * k / opt.samples;
    ybrg::CouplingPair pair{0.0, 0.0};
    double phi = 0.0;
    double constraint = 0.0;
    if (opt.su2) {
      const double j = ybrg::su2_coupling(t);
      pair = {j, j};
      phi = ybrg::su2_spectral(j);
      constraint = ybrg::check_constraint(pair, 0.0);
    } else {
      phi = a * t + opt.c;
      pair = ybrg::couplings_from_spectral(opt.u, phi, branch);
      constraint = ybrg::check_constraint(pair, opt.u);
    }
    csv += format_double(t) + "," + format_double(pair.j_par) + "," +
           format_double(pair.j_perp) + "," + format_double(phi) + "," +
           format_double(constraint) + "," +
           format_double(ybrg::conserved_quantity(pair)) + "\n";
  }
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrability checks for time-dependent Kondo couplings"};
  app.set_version_flag("--version", std::string(ybrg::kVersion));
  app.require_subcommand(1);

  // verify
  ybrg::suites::VerifyConfig cfg;
  std::string suite = "all";
  std::string out_path;
  double a_flag = 0.0;

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> valid_suites = ybrg::suites::suite_names();
  valid_suites.push_back("all");
  verify->add_option("suite", suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember(valid_suites));
  verify->add_option("--u", cfg.u, "Anisotropy (radians)");
  CLI::Option* a_opt =
      verify->add_option("--a", a_flag, "Linear profile slope (default -2u/pi)");
  verify->add_option("--c", cfg.c, "Linear profile offset");
  verify->add_option("--L", cfg.L, "System size");
  verify->add_option("--n", cfg.n_particles, "Particle count for transport checks")
      ->check(CLI::Range(1, 5));
  verify->add_option("--tol", cfg.tol, "Transport commutation pass threshold");
  verify->add_option("--profile", cfg.profile, "Spectral profile kind")
      ->check(CLI::IsMember({"linear", "sine"}));
  verify->add_option("--eps", cfg.eps, "Sine perturbation amplitude");
  verify->add_option("--seed", cfg.seed, "Seed for randomized sweeps");
  verify->add_option("--out", out_path, "Report path (default: stdout)");

  // traj
  TrajOptions traj;
  CLI::App* traj_cmd =
      app.add_subcommand("traj", "Export a coupling trajectory as CSV");
  traj_cmd->add_option("--u", traj.u, "Anisotropy (radians)");
  traj_cmd->add_option("--c", traj.c, "Linear profile offset");
  traj_cmd->add_option("--t0", traj.t0, "Start time");
  traj_cmd->add_option("--t1", traj.t1, "End time");
  traj_cmd->add_option("--samples", traj.samples, "Sample intervals (rows = samples+1)")
      ->check(CLI::PositiveNumber);
  traj_cmd->add_option("--branch", traj.branch, "Trajectory branch")
      ->check(CLI::IsMember({"+", "-"}));
  traj_cmd->add_flag("--su2", traj.su2, "Isotropic trajectory J = pi/t");
  traj_cmd->add_option("--csv", traj.csv_path, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      if (*a_opt) cfg.a = a_flag;
      if (const char* env_seed = std::getenv("YBRG_SEED")) {
        cfg.seed = std::strtoull(env_seed, nullptr, 10);
      }
      const std::vector<std::string> names =
          suite == "all" ? ybrg::suites::suite_names()
                         : std::vector<std::string>{suite};
      const ybrg::Report report = ybrg::suites::run_suites(names, cfg);

      for (const auto& check : report.checks) {
        std::cerr << (check.pass ? "PASS  " : "FAIL  ") << check.name;
        if (check.value) {
          std::cerr << "  value=" << format_double(*check.value)
                    << "  threshold=" << format_double(check.threshold);
        } else if (check.error) {
          std::cerr << "  error=" << *check.error;
        }
        std::cerr << "\n";
      }
      const std::string body = report.to_json().dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << body;
      } else {
        write_file_atomic(out_path, body);
        std::cerr << (report.verdict() ? "PASS" : "FAIL") << "  report: "
                  << out_path << "\n";
      }
      return report.verdict() ? kExitPass : kExitCheckFailure;
    }

    if (*traj_cmd) {
      const std::string csv = render_trajectory(traj);
      if (traj.csv_path.empty()) {
        std::cout << csv;
      } else {
        write_file_atomic(traj.csv_path, csv);
      }
      return kExitPass;
    }
  } catch (const ybrg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
