#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <span>

#include "ybrg/errors.hpp"

namespace ybrg {

using Complex = std::complex<double>;

/// Dense complex operator on the full chain Hilbert space (dim 2^(N+1)).
using ChainOperator = Eigen::MatrixXcd;

/// Operator on an ordered pair of spin-1/2 slots, basis (uu, ud, du, dd).
/// The first tensor factor corresponds to the first slot argument of
/// embed_two_site.
using TwoSiteOperator = Eigen::Matrix4cd;

/// A chain of one impurity plus N particles.
///
/// Slot layout: impurity is slot 0, particle j is slot j, giving N+1 slots
/// and Hilbert dimension 2^(N+1).
///
/// Basis convention (fixed here, relied on everywhere else):
///   |up> = (1,0), |dn> = (0,1); slot 0 owns the slowest-varying index bit,
///   so the bit of slot k in a chain index I is (I >> (slots()-1-k)) & 1,
///   with up = 0.
class ChainSpec {
 public:
  static constexpr int kMaxParticles = 6;  // dense storage, dim <= 128

  explicit ChainSpec(int n_particles);

  int n_particles() const { return n_particles_; }
  int slots() const { return n_particles_ + 1; }
  Eigen::Index dim() const { return Eigen::Index{1} << slots(); }

 private:
  int n_particles_;
};

/// Embeds a two-site operator so that it acts as `op` on the factor pair
/// (slot_a, slot_b), in that order, and as identity on every other slot.
ChainOperator embed_two_site(const TwoSiteOperator& op, int slot_a, int slot_b,
                             const ChainSpec& chain);

/// Frobenius norm of (a - b); zero iff the matrices are equal.
double residual(const ChainOperator& a, const ChainOperator& b);

/// Left-to-right matrix product of the list; when the result acts on a
/// vector, the first list element is applied last.
ChainOperator compose(std::span<const ChainOperator> ops);
ChainOperator compose(std::initializer_list<ChainOperator> ops);

}  // namespace ybrg
