#pragma once

#include "ybrg/spectral.hpp"
#include "ybrg/tensor.hpp"

namespace ybrg {

/// Denominator guard: |sinh(f + iu)| must exceed this for a valid S-matrix.
inline constexpr double kSingularEps = 1e-12;

/// Arguments of the two-body S-matrix: hyperbolic spectral argument f_val
/// and anisotropy u in radians, |u| < pi. Construction enforces the
/// singularity guard, so a constructed value is always usable.
struct SMatrixArgs {
  SMatrixArgs(double f_val, double u);

  double f_val;
  double u;
};

/// Particle-impurity S-matrix
///
///   [ 1  .  .  . ]
///   [ .  b  c  . ]      b = sinh(f) / sinh(f + iu)
///   [ .  c  b  . ]      c = i sin(u) / sinh(f + iu)
///   [ .  .  .  1 ]
///
/// in the basis (uu, ud, du, dd); first factor = particle, second = impurity.
/// Unitary for real (f, u): |b|^2 + |c|^2 = 1 and b conj(c) is imaginary.
TwoSiteOperator impurity_smatrix(const SMatrixArgs& args);

/// Particle-particle S-matrix: the same block form evaluated at the
/// difference f_i - f_j; first factor = particle i, second = particle j.
TwoSiteOperator particle_smatrix(double f_i, double f_j, double u);

/// Frobenius residual of S(-x) S(x) - Identity for the pair embedded on
/// (slot_a, slot_b) of the chain.
double inverse_property_residual(double x, double u, const ChainSpec& chain,
                                 int slot_a, int slot_b);

/// Residual of the particle-impurity Yang-Baxter identity
///   S^{j0} S^{i0} S^{ij} = S^{ij} S^{i0} S^{j0}
/// on a two-particle chain (i -> slot 1, j -> slot 2), with f-values
/// supplied by the spectral profile at z_i, z_j.
double ybe_impurity_residual(double z_i, double z_j,
                             const SpectralProfile& spectral, double u);

/// Residual of the particle-particle Yang-Baxter identity
///   S^{ij} S^{ik} S^{jk} = S^{jk} S^{ik} S^{ij}
/// on a three-particle chain (i,j,k -> slots 1,2,3; impurity idle).
double ybe_particle_residual(double z_i, double z_j, double z_k,
                             const SpectralProfile& spectral, double u);

}  // namespace ybrg
