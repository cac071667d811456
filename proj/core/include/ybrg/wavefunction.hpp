#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ybrg/smatrix.hpp"
#include "ybrg/spectral.hpp"
#include "ybrg/tensor.hpp"

namespace ybrg {

/// Amplitude vector of dim 2^(N+1), indexed by the chain basis convention
/// of ChainSpec (impurity bit slowest).
using AmplitudeVector = Eigen::VectorXcd;

/// Spatial ordering of the impurity (label 0) and the particles 1..N,
/// read left to right.
class Ordering {
 public:
  explicit Ordering(std::vector<int> sequence);

  /// The ordering (N, ..., 2, 1, 0) whose amplitude serves as the free one.
  static Ordering reference(int n_particles);

  int size() const { return static_cast<int>(seq_.size()); }
  int at(int position) const;
  const std::vector<int>& sequence() const { return seq_; }

  /// Copy with the entries at position, position+1 exchanged.
  Ordering swapped(int position) const;

  bool operator==(const Ordering&) const = default;

 private:
  std::vector<int> seq_;
};

/// Shared data of the amplitude relations: inhomogeneities z_1..z_N,
/// spectral profile and anisotropy.
struct AmplitudeContext {
  std::vector<double> zs;
  SpectralProfile spectral;
  double u;
};

/// Elementary amplitude relation for swapping the labels at (position,
/// position+1). Returns the swapped ordering together with the operator
/// mapping the old amplitude to the new one:
///   labels (j, 0):  embedded S^{j0}(z_j)
///   labels (0, j):  embedded S^{j0} at -f(z_j)  (the inverse relation)
///   labels (i, j):  embedded S^{ij}(z_i, z_j)
/// Swapping twice composes to the identity (inverse property).
std::pair<Ordering, ChainOperator> adjacent_relation(
    const Ordering& ord, int position, const AmplitudeContext& ctx);

/// Applies the chain of adjacent relations along `path` (a list of swap
/// positions) to the reference amplitude. The path must transform ref_ord
/// into target, otherwise PathMismatch is thrown.
AmplitudeVector propagate_amplitude(const AmplitudeVector& reference,
                                    const Ordering& ref_ord,
                                    const Ordering& target,
                                    std::span<const int> path,
                                    const AmplitudeContext& ctx);

/// Max operator residual over the elementary loops of the ordering graph:
/// double swaps (inverse property), disjoint-swap commutations, and braid
/// loops. These loops generate all loops, so a zero residual means the
/// amplitude assignment is path independent. N <= 4.
///
/// pair_argument_weight scales the second argument of every
/// particle-particle S-matrix (f_i - w f_j); w = 1 is the physical
/// difference form, anything else is a deliberate tamper that breaks the
/// Yang-Baxter structure and serves as a negative control.
double consistency_residual(const AmplitudeContext& ctx,
                            double pair_argument_weight = 1.0);

/// One-particle amplitude samples on the window [window_start,
/// window_start + L), plus the periodic extensions generated by the
/// difference equation; period p holds the values at z + p L for z on the
/// base grid. Values are immutable after construction.
class AmplitudeField {
 public:
  /// Base field: period 0 only.
  AmplitudeField(double window_start, double system_size,
                 std::vector<double> grid,
                 std::vector<AmplitudeVector> base_values);

  /// Field with explicit extension tables (periods must be contiguous and
  /// include 0). Exists so that tests can build fields that do not come
  /// from propagation.
  AmplitudeField(double window_start, double system_size,
                 std::vector<double> grid,
                 std::map<int, std::vector<AmplitudeVector>> periods);

  double window_start() const { return start_; }
  double system_size() const { return L_; }
  const std::vector<double>& grid() const { return grid_; }
  int min_period() const;
  int max_period() const;
  double z_at(std::size_t grid_index, int period) const;
  const AmplitudeVector& at(std::size_t grid_index, int period = 0) const;

 private:
  void validate() const;

  double start_;
  double L_;
  std::vector<double> grid_;
  std::map<int, std::vector<AmplitudeVector>> periods_;
};

/// Extends the field n_periods in each direction through
///   f(z - L) = S(phi(z)) f(z)
/// (downward) and through the inverse matrix S(-phi(z)) (upward). After
/// construction every adjacent period pair is re-checked against the
/// difference equation independently of how it was produced.
AmplitudeField extend_one_particle(const AmplitudeField& initial,
                                   int n_periods,
                                   const SpectralProfile& spectral, double u);

/// Max over the grid and all adjacent periods of
///   | S(phi(z)) f(z) - f(z - L) |_inf,
/// i.e. the defect of the periodic-boundary relation. Requires a field
/// extended by at least one period.
double pbc_residual(const AmplitudeField& field,
                    const SpectralProfile& spectral, double u);

}  // namespace ybrg
