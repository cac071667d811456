#include "ybrg/spectral.hpp"

#include <cmath>
#include <sstream>

namespace ybrg {

SpectralProfile::SpectralProfile(std::function<double(double)> fn,
                                 std::string label, bool linear, double slope,
                                 double offset)
    : fn_(std::move(fn)),
      label_(std::move(label)),
      linear_(linear),
      slope_(slope),
      offset_(offset) {}

SpectralProfile SpectralProfile::linear(double slope, double offset) {
  std::ostringstream label;
  label << "linear(a=" << slope << ",c=" << offset << ")";
  return SpectralProfile([slope, offset](double z) { return slope * z + offset; },
                         label.str(), true, slope, offset);
}

SpectralProfile SpectralProfile::sine_perturbed(double slope, double offset,
                                                double amplitude,
                                                double frequency) {
  std::ostringstream label;
  label << "sine(a=" << slope << ",c=" << offset << ",eps=" << amplitude
        << ",w=" << frequency << ")";
  return SpectralProfile(
      [slope, offset, amplitude, frequency](double z) {
        return slope * z + offset + amplitude * std::sin(frequency * z);
      },
      label.str(), false, 0.0, 0.0);
}

SpectralProfile SpectralProfile::custom(std::function<double(double)> fn,
                                        std::string label) {
  if (!fn) throw DomainError("SpectralProfile::custom: empty function");
  return SpectralProfile(std::move(fn), std::move(label), false, 0.0, 0.0);
}

double SpectralProfile::slope() const {
  if (!linear_) throw DomainError("SpectralProfile: slope() on non-linear kind");
  return slope_;
}

double SpectralProfile::offset() const {
  if (!linear_) throw DomainError("SpectralProfile: offset() on non-linear kind");
  return offset_;
}

SpectralParams::SpectralParams(double a_, double c_, double u_,
                               double system_size)
    : a(a_), c(c_), u(u_), L(system_size) {
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw DomainError("SpectralParams: system size must be positive");
  }
  if (!(u > 0.0 && u <= M_PI / 2.0)) {
    throw InvalidAnisotropy("SpectralParams: u must lie in (0, pi/2], got " +
                            std::to_string(u));
  }
  if (!std::isfinite(a) || !std::isfinite(c)) {
    throw DomainError("SpectralParams: a, c must be finite");
  }
}

double check_shift_property(const SpectralProfile& profile, double L,
                            double kappa, std::span<const double> samples) {
  double worst = 0.0;
  for (double z : samples) {
    const double base = profile(z);
    worst = std::max(worst, std::abs(profile(z + L) - base - kappa));
    worst = std::max(worst, std::abs(profile(z - L) - base + kappa));
  }
  return worst;
}

}  // namespace ybrg
