#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "ybrg/errors.hpp"

namespace ybrg {

/// Spectral function phi(z) supplying the arguments of all S-matrices.
///
/// The linear kind phi(z) = a z + c is the integrable family: it satisfies
/// phi(z +- L) = phi(z) +- a L identically. The sine-perturbed and custom
/// kinds exist to demonstrate how the transport commutation fails without
/// that shift property.
class SpectralProfile {
 public:
  static SpectralProfile linear(double slope, double offset);
  static SpectralProfile sine_perturbed(double slope, double offset,
                                        double amplitude,
                                        double frequency = 3.0);
  static SpectralProfile custom(std::function<double(double)> fn,
                                std::string label);

  double operator()(double z) const { return fn_(z); }

  bool is_linear() const { return linear_; }
  double slope() const;   // linear kind only
  double offset() const;  // linear kind only
  const std::string& label() const { return label_; }

 private:
  SpectralProfile(std::function<double(double)> fn, std::string label,
                  bool linear, double slope, double offset);

  std::function<double(double)> fn_;
  std::string label_;
  bool linear_;
  double slope_;
  double offset_;
};

/// Parameters (a, c, u, L) of the integrable linear family; kappa = a L
/// by construction.
struct SpectralParams {
  SpectralParams(double a, double c, double u, double system_size);

  double a;
  double c;
  double u;
  double L;

  double kappa() const { return a * L; }
  SpectralProfile profile() const { return SpectralProfile::linear(a, c); }
};

/// Max over the sample points of |phi(z+L) - phi(z) - kappa| and
/// |phi(z-L) - phi(z) + kappa|. Zero (up to rounding) iff the profile has
/// the shift property with constant kappa on those points.
double check_shift_property(const SpectralProfile& profile, double L,
                            double kappa, std::span<const double> samples);

}  // namespace ybrg
