#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ybrg/coupling.hpp"
#include "ybrg/errors.hpp"

namespace ybrg {

struct RgSample {
  double t;
  CouplingPair pair;
};

/// Fixed-step trajectory of the coupling flow.
struct RgTrajectory {
  struct Meta {
    double a;
    double u;
    double step;
    std::string method;
  };

  std::vector<RgSample> samples;
  Meta meta;
};

/// Thrown when the integrated flow leaves the finite domain; carries the
/// last finite sample.
class DivergedFlow : public Error {
 public:
  explicit DivergedFlow(RgSample last);
  const RgSample& last_finite() const { return last_; }

 private:
  RgSample last_;
};

struct CouplingRate {
  double j_par_rate;
  double j_perp_rate;
};

/// Anisotropic flow field
///   dJ_par/dt  = (a / 2u) J_perp^2
///   dJ_perp/dt = (a / 2u) J_par J_perp.
/// J_perp = 0 is a fixed line and J_par^2 - J_perp^2 is exactly conserved.
/// u must be nonzero; the isotropic point is served by su2_rg_field.
CouplingRate rg_vector_field(const CouplingPair& pair, double a, double u);

/// Isotropic flow field dJ/dt = -J^2 / pi, solved identically by J = pi/t.
double su2_rg_field(double j);

/// Classical fixed-step fourth-order Runge-Kutta integration of
/// rg_vector_field from t0 to t1 (either direction); steps+1 samples, the
/// last one at exactly t1. Throws DivergedFlow when the state leaves the
/// finite domain.
RgTrajectory integrate_rg(const CouplingPair& initial, double t0, double t1,
                          int steps, double a, double u);

/// Same integrator for the scalar isotropic flow; returns (t, J) samples.
std::vector<std::pair<double, double>> integrate_su2_rg(double j0, double t0,
                                                        double t1, int steps);

/// Conserved quantity j_par^2 - j_perp^2 of the anisotropic flow.
double conserved_quantity(const CouplingPair& pair);

struct TrajectoryDeviation {
  double max_rel_dev;
  std::vector<double> per_sample;
};

/// Relative deviation of a flow trajectory from the closed-form family
/// couplings_from_spectral(u, a t + c, branch), per sample and maximal.
/// Requires the cutoff identification a = -2u/pi (both the argument and
/// the trajectory metadata); a mismatch is an error, not a renormalization.
TrajectoryDeviation compare_with_integrable(const RgTrajectory& traj, double u,
                                            double a, double c, Branch branch);

}  // namespace ybrg
