#include "ybrg/rgflow.hpp"

#include <cmath>
#include <string>

namespace ybrg {

namespace {

constexpr double kIdentificationTol = 1e-12;

// classical RK4 over a two-component state
template <typename Field>
CouplingPair rk4_step(const Field& field, const CouplingPair& y, double h) {
  const auto k1 = field(y);
  const auto k2 = field(CouplingPair{y.j_par + 0.5 * h * k1.j_par_rate,
                                     y.j_perp + 0.5 * h * k1.j_perp_rate});
  const auto k3 = field(CouplingPair{y.j_par + 0.5 * h * k2.j_par_rate,
                                     y.j_perp + 0.5 * h * k2.j_perp_rate});
  const auto k4 = field(CouplingPair{y.j_par + h * k3.j_par_rate,
                                     y.j_perp + h * k3.j_perp_rate});
  return {y.j_par + h / 6.0 *
                        (k1.j_par_rate + 2.0 * k2.j_par_rate +
                         2.0 * k3.j_par_rate + k4.j_par_rate),
          y.j_perp + h / 6.0 *
                         (k1.j_perp_rate + 2.0 * k2.j_perp_rate +
                          2.0 * k3.j_perp_rate + k4.j_perp_rate)};
}

}  // namespace

DivergedFlow::DivergedFlow(RgSample last)
    : Error("flow diverged after t = " + std::to_string(last.t)),
      last_(last) {}

CouplingRate rg_vector_field(const CouplingPair& pair, double a, double u) {
  if (u == 0.0 || !std::isfinite(u)) {
    throw DomainError(
        "rg_vector_field: u must be nonzero; the isotropic point is "
        "su2_rg_field");
  }
  const double k = a / (2.0 * u);
  return {k * pair.j_perp * pair.j_perp, k * pair.j_par * pair.j_perp};
}

double su2_rg_field(double j) { return -j * j / M_PI; }

RgTrajectory integrate_rg(const CouplingPair& initial, double t0, double t1,
                          int steps, double a, double u) {
  if (steps < 1) throw DomainError("integrate_rg: steps must be >= 1");
  if (!(t1 != t0) || !std::isfinite(t0) || !std::isfinite(t1)) {
    throw DomainError("integrate_rg: need a finite interval with t1 != t0");
  }
  const double h = (t1 - t0) / steps;

  RgTrajectory traj;
  traj.meta = {a, u, h, "rk4"};
  traj.samples.reserve(static_cast<std::size_t>(steps) + 1);
  traj.samples.push_back({t0, initial});

  auto field = [a, u](const CouplingPair& y) { return rg_vector_field(y, a, u); };
  CouplingPair y = initial;
  for (int k = 0; k < steps; ++k) {
    y = rk4_step(field, y, h);
    if (!std::isfinite(y.j_par) || !std::isfinite(y.j_perp)) {
      throw DivergedFlow(traj.samples.back());
    }
    const double t = (k + 1 == steps) ? t1 : t0 + (k + 1) * h;
    traj.samples.push_back({t, y});
  }
  return traj;
}

std::vector<std::pair<double, double>> integrate_su2_rg(double j0, double t0,
                                                        double t1, int steps) {
  if (steps < 1) throw DomainError("integrate_su2_rg: steps must be >= 1");
  if (!(t1 != t0) || !std::isfinite(t0) || !std::isfinite(t1)) {
    throw DomainError("integrate_su2_rg: need a finite interval with t1 != t0");
  }
  const double h = (t1 - t0) / steps;

  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.emplace_back(t0, j0);
  double j = j0;
  for (int k = 0; k < steps; ++k) {
    const double k1 = su2_rg_field(j);
    const double k2 = su2_rg_field(j + 0.5 * h * k1);
    const double k3 = su2_rg_field(j + 0.5 * h * k2);
    const double k4 = su2_rg_field(j + h * k3);
    j += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(j)) {
      throw DivergedFlow({out.back().first, {out.back().second, out.back().second}});
    }
    out.emplace_back((k + 1 == steps) ? t1 : t0 + (k + 1) * h, j);
  }
  return out;
}

double conserved_quantity(const CouplingPair& pair) {
  return pair.j_par * pair.j_par - pair.j_perp * pair.j_perp;
}

TrajectoryDeviation compare_with_integrable(const RgTrajectory& traj, double u,
                                            double a, double c, Branch branch) {
  const double a_star = -2.0 * u / M_PI;
  const double scale = std::max(1.0, std::abs(a_star));
  if (std::abs(a - a_star) > kIdentificationTol * scale ||
      std::abs(traj.meta.a - a_star) > kIdentificationTol * scale) {
    throw DomainError(
        "compare_with_integrable: requires the identification a = -2u/pi");
  }

  TrajectoryDeviation dev{0.0, {}};
  dev.per_sample.reserve(traj.samples.size());
  for (const auto& sample : traj.samples) {
    const CouplingPair cf = couplings_from_spectral(u, a * sample.t + c, branch);
    const double d_par = std::abs(sample.pair.j_par - cf.j_par) / std::abs(cf.j_par);
    const double d_perp =
        std::abs(sample.pair.j_perp - cf.j_perp) / std::abs(cf.j_perp);
    const double d = std::max(d_par, d_perp);
    dev.per_sample.push_back(d);
    dev.max_rel_dev = std::max(dev.max_rel_dev, d);
  }
  return dev;
}

}  // namespace ybrg
