#pragma once

#include "ybrg/spectral.hpp"

namespace ybrg {

/// Exchange couplings (J_parallel, J_perp) in radians.
struct CouplingPair {
  double j_par;
  double j_perp;
};

/// Sign choice inside the closed-form coupling trajectories. The two
/// branches are mirror images: minus at phi equals plus at -phi.
enum class Branch { plus, minus };

/// Spectral data recovered from a coupling pair.
struct SpectralPoint {
  double f;
  double u;
};

/// Closed-form integrable couplings at spectral argument phi:
///
///   J_perp = 2 arccos( +- tanh(phi) / sqrt(sin^2 u + cos^2 u tanh^2 phi) )
///   J_par  = 2 arccos( +- cos(u) tanh(phi) / sqrt(...) )
///
/// evaluated in the equivalent atan2 form (the sine of each half-angle has
/// a closed form with the same normalizer, which cancels), so both
/// couplings keep full relative accuracy at large |phi|. On the plus
/// branch phi -> +inf gives the weak-coupling endpoint (2u, 0); phi = 0
/// gives (pi, pi). Requires u in (0, pi/2].
CouplingPair couplings_from_spectral(double u, double phi,
                                     Branch branch = Branch::plus);

/// Inverse map on the hyperbolic side j_par >= j_perp > 0:
///
///   u      = arccos( cos(j_par/2) / cos(j_perp/2) )
///   tanh f = sqrt( sin((j_par-j_perp)/2) sin((j_par+j_perp)/2) ) / sin(j_par/2)
///
/// f is evaluated in log form (1 - tanh^2 f equals (sin(j_perp/2)/sin(j_par/2))^2
/// exactly), which stays accurate as j_perp -> 0 where f diverges.
/// Round-trips couplings_from_spectral: the recovered f equals |phi|.
/// arccos arguments are clamped within 1e-12 of [-1, 1]; larger excursions
/// raise DomainError. The degenerate boundary j_par == j_perp maps to
/// (f, u) = (0, 0).
SpectralPoint spectral_from_couplings(const CouplingPair& pair);

/// Residual |cos(j_par/2) - cos(u) cos(j_perp/2)| of the half-angle
/// anisotropy constraint; identically zero along the closed-form family.
double check_constraint(const CouplingPair& pair, double u);

/// Small-coupling residual 4u^2 - (j_par^2 - j_perp^2); O(u^4) along the
/// integrable family.
double weak_coupling_residual(const CouplingPair& pair, double u);

/// Universal isotropic coupling J(t) = pi / t, t > 0.
double su2_coupling(double t);

/// Isotropic spectral parameter f(J) = cot(J/2), J in (0, pi]; the closure
/// point J = pi maps to f = 0.
double su2_spectral(double j);

enum class KondoScheme { bethe, wilson };

/// Strong-coupling scale: bethe gives cutoff * exp(-pi f); wilson gives
/// cutoff * exp(-pi / J), computed through f = 1/J so the two schemes agree
/// bitwise when handed f and J = 1/f.
double kondo_temperature(double f_or_j, double cutoff, KondoScheme scheme);

}  // namespace ybrg
