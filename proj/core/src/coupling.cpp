#include "ybrg/coupling.hpp"

#include <cmath>
#include <string>

namespace ybrg {

namespace {

constexpr double kClampTol = 1e-12;

double clamped_acos(double x, const char* who) {
  if (x > 1.0) {
    if (x > 1.0 + kClampTol) {
      throw DomainError(std::string(who) + ": arccos argument " +
                        std::to_string(x) + " beyond [-1, 1]");
    }
    x = 1.0;
  } else if (x < -1.0) {
    if (x < -1.0 - kClampTol) {
      throw DomainError(std::string(who) + ": arccos argument " +
                        std::to_string(x) + " beyond [-1, 1]");
    }
    x = -1.0;
  }
  return std::acos(x);
}

}  // namespace

CouplingPair couplings_from_spectral(double u, double phi, Branch branch) {
  if (!(u > 0.0 && u <= M_PI / 2.0)) {
    throw InvalidAnisotropy("couplings_from_spectral: u must lie in (0, pi/2], got " +
                            std::to_string(u));
  }
  if (!std::isfinite(phi)) {
    throw DomainError("couplings_from_spectral: phi must be finite");
  }
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  const double th = std::tanh(phi);
  const double sech = 1.0 / std::cosh(phi);
  const double su = std::sin(u);
  const double cu = std::cos(u);
  // half angles via atan2; the common normalizer sqrt(sin^2 u + cos^2 u tanh^2 phi)
  // cancels between the sine and cosine parts
  const double j_par = 2.0 * std::atan2(su, sign * cu * th);
  const double j_perp = 2.0 * std::atan2(su * sech, sign * th);
  return {j_par, j_perp};
}

SpectralPoint spectral_from_couplings(const CouplingPair& pair) {
  if (!std::isfinite(pair.j_par) || !std::isfinite(pair.j_perp)) {
    throw DomainError("spectral_from_couplings: couplings must be finite");
  }
  if (!(pair.j_perp > 0.0) || pair.j_par < pair.j_perp) {
    throw NonHyperbolicRegime(
        "spectral_from_couplings: requires j_par >= j_perp > 0, got (" +
        std::to_string(pair.j_par) + ", " + std::to_string(pair.j_perp) + ")");
  }
  if (!(pair.j_par < 2.0 * M_PI)) {
    throw DomainError("spectral_from_couplings: j_par must be below 2 pi");
  }
  const double half_par = pair.j_par / 2.0;
  const double half_perp = pair.j_perp / 2.0;

  double s2 = std::sin(half_par - half_perp) * std::sin(half_par + half_perp);
  if (s2 < 0.0) {
    if (s2 < -kClampTol) {
      throw NonHyperbolicRegime(
          "spectral_from_couplings: sin((j_par-j_perp)/2) sin((j_par+j_perp)/2) "
          "negative; pair outside the invertible branch");
    }
    s2 = 0.0;
  }
  const double sin_par = std::sin(half_par);
  const double tanh_f = std::sqrt(s2) / sin_par;
  // log form of atanh: 1 - tanh^2 f = (sin(half_perp)/sin(half_par))^2,
  // so f = log((1 + tanh f) sin(half_par) / sin(half_perp)); accurate as
  // tanh f -> 1
  const double f = std::log((1.0 + tanh_f) * sin_par / std::sin(half_perp));

  const double cos_perp = std::cos(half_perp);
  const double u = clamped_acos(std::cos(half_par) / cos_perp,
                                "spectral_from_couplings");
  return {f, u};
}

double check_constraint(const CouplingPair& pair, double u) {
  if (!std::isfinite(pair.j_par) || !std::isfinite(pair.j_perp) ||
      !std::isfinite(u)) {
    throw DomainError("check_constraint: arguments must be finite");
  }
  return std::abs(std::cos(pair.j_par / 2.0) -
                  std::cos(u) * std::cos(pair.j_perp / 2.0));
}

double weak_coupling_residual(const CouplingPair& pair, double u) {
  return 4.0 * u * u - (pair.j_par * pair.j_par - pair.j_perp * pair.j_perp);
}

double su2_coupling(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw InvalidTime("su2_coupling: t must be positive, got " +
                      std::to_string(t));
  }
  return M_PI / t;
}

double su2_spectral(double j) {
  if (!(j > 0.0 && j <= M_PI)) {
    throw DomainError("su2_spectral: J must lie in (0, pi], got " +
                      std::to_string(j));
  }
  return std::cos(j / 2.0) / std::sin(j / 2.0);
}

double kondo_temperature(double f_or_j, double cutoff, KondoScheme scheme) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw DomainError("kondo_temperature: cutoff must be positive");
  }
  double f = f_or_j;
  if (scheme == KondoScheme::wilson) {
    if (f_or_j == 0.0) {
      throw DomainError("kondo_temperature: J = 0 in the wilson scheme");
    }
    f = 1.0 / f_or_j;  // shared exponent path keeps the two schemes bit-equal
  }
  return cutoff * std::exp(-M_PI * f);
}

}  // namespace ybrg
