#pragma once

#include <vector>

#include "ybrg/smatrix.hpp"
#include "ybrg/spectral.hpp"
#include "ybrg/tensor.hpp"

namespace ybrg {

/// Configuration of the transport construction: N particles at
/// inhomogeneities z_1..z_N on a ring of size L, spectral profile phi and
/// constant anisotropy u. kappa is the shift constant tested by the
/// integrability witness (a L for the linear family).
struct TransportConfig {
  int n_particles;
  std::vector<double> zs;
  SpectralProfile spectral;
  double u;
  double L;
  double kappa;

  ChainSpec chain() const { return ChainSpec(n_particles); }
};

/// Operator transporting particle j once around the ring:
///
///   Z_j = S^{j,j+1}(z_j, z_{j+1}+L) ... S^{jN}(z_j, z_N+L)
///         * S^{j0}(z_j) * S^{j1}(z_j, z_1) ... S^{j,j-1}(z_j, z_{j-1})
///
/// with every factor embedded on the (N+1)-slot chain and the product
/// composed left to right (compose order: first factor applied last).
/// For N = 1 the product degenerates to the embedded impurity S-matrix.
ChainOperator transport_operator(int j, const TransportConfig& cfg);

/// Residual of the transport compatibility relation
///   Z_i(.., z_j - L, ..) Z_j(z) = Z_j(.., z_i - L, ..) Z_i(z).
/// Vanishes (to rounding) for linear profiles with constant u; order one
/// for profiles violating the shift property.
double commutation_residual(int i, int j, const TransportConfig& cfg);

struct WitnessReport {
  double max_commutation_residual;
  double shift_residual;
  double tol;
  bool integrable;
};

/// Sweeps all ordered pairs (i, j) and the shift property at the z points.
/// Verdict: integrable iff both residuals stay below tol. For N = 1 the
/// system is a single difference equation with no compatibility constraint
/// and no shifted arguments, so the verdict is integrable unconditionally.
WitnessReport integrability_witness(const TransportConfig& cfg,
                                    double tol = 1e-9);

}  // namespace ybrg
