#include "ybrg/smatrix.hpp"

#include <cmath>
#include <string>

namespace ybrg {

SMatrixArgs::SMatrixArgs(double f_val_, double u_) : f_val(f_val_), u(u_) {
  if (!std::isfinite(f_val) || !std::isfinite(u)) {
    throw DomainError("SMatrixArgs: arguments must be finite");
  }
  if (!(std::abs(u) < M_PI)) {
    throw InvalidAnisotropy("SMatrixArgs: |u| must be < pi, got " +
                            std::to_string(u));
  }
  // |sinh(f + iu)|^2 = sinh^2 f + sin^2 u
  const double sf = std::sinh(f_val);
  const double su = std::sin(u);
  if (std::sqrt(sf * sf + su * su) <= kSingularEps) {
    throw SingularSMatrix("S-matrix pole: |sinh(f + iu)| <= " +
                          std::to_string(kSingularEps) + " at f = " +
                          std::to_string(f_val) + ", u = " +
                          std::to_string(u));
  }
}

TwoSiteOperator impurity_smatrix(const SMatrixArgs& args) {
  const Complex den = std::sinh(Complex(args.f_val, args.u));
  const Complex b = std::sinh(args.f_val) / den;
  const Complex c = Complex(0.0, std::sin(args.u)) / den;
  TwoSiteOperator s = TwoSiteOperator::Identity();
  s(1, 1) = b;
  s(1, 2) = c;
  s(2, 1) = c;
  s(2, 2) = b;
  return s;
}

TwoSiteOperator particle_smatrix(double f_i, double f_j, double u) {
  return impurity_smatrix(SMatrixArgs(f_i - f_j, u));
}

double inverse_property_residual(double x, double u, const ChainSpec& chain,
                                 int slot_a, int slot_b) {
  const ChainOperator fwd =
      embed_two_site(impurity_smatrix(SMatrixArgs(x, u)), slot_a, slot_b, chain);
  const ChainOperator bwd =
      embed_two_site(impurity_smatrix(SMatrixArgs(-x, u)), slot_a, slot_b, chain);
  return residual(bwd * fwd, ChainOperator::Identity(chain.dim(), chain.dim()));
}

double ybe_impurity_residual(double z_i, double z_j,
                             const SpectralProfile& spectral, double u) {
  const ChainSpec chain(2);  // impurity 0, particle i -> 1, particle j -> 2
  const double f_i = spectral(z_i);
  const double f_j = spectral(z_j);
  const ChainOperator s_j0 =
      embed_two_site(impurity_smatrix(SMatrixArgs(f_j, u)), 2, 0, chain);
  const ChainOperator s_i0 =
      embed_two_site(impurity_smatrix(SMatrixArgs(f_i, u)), 1, 0, chain);
  const ChainOperator s_ij =
      embed_two_site(particle_smatrix(f_i, f_j, u), 1, 2, chain);
  return residual(compose({s_j0, s_i0, s_ij}), compose({s_ij, s_i0, s_j0}));
}

double ybe_particle_residual(double z_i, double z_j, double z_k,
                             const SpectralProfile& spectral, double u) {
  const ChainSpec chain(3);  // particles i,j,k -> slots 1,2,3; impurity idle
  const double f_i = spectral(z_i);
  const double f_j = spectral(z_j);
  const double f_k = spectral(z_k);
  const ChainOperator s_ij =
      embed_two_site(particle_smatrix(f_i, f_j, u), 1, 2, chain);
  const ChainOperator s_ik =
      embed_two_site(particle_smatrix(f_i, f_k, u), 1, 3, chain);
  const ChainOperator s_jk =
      embed_two_site(particle_smatrix(f_j, f_k, u), 2, 3, chain);
  return residual(compose({s_ij, s_ik, s_jk}), compose({s_jk, s_ik, s_ij}));
}

}  // namespace ybrg
