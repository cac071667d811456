#include "ybrg/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ybrg {

namespace {

constexpr int kMaxConsistencyParticles = 4;
constexpr double kRecheckTol = 1e-10;

double spectral_of_label(const AmplitudeContext& ctx, int label) {
  // the impurity carries spectral argument 0
  return label == 0 ? 0.0 : ctx.spectral(ctx.zs[static_cast<std::size_t>(label - 1)]);
}

// Swap relation with a tunable weight on the second particle-particle
// argument; weight 1 is the physical difference form.
std::pair<Ordering, ChainOperator> adjacent_relation_weighted(
    const Ordering& ord, int position, const AmplitudeContext& ctx,
    double weight) {
  const int n = ord.size();
  if (position < 0 || position + 1 >= n) {
    throw InvalidIndex("adjacent_relation: position " +
                       std::to_string(position) + " out of range");
  }
  const int left = ord.at(position);
  const int right = ord.at(position + 1);
  const ChainSpec chain(n - 1);

  TwoSiteOperator op;
  int slot_first;
  int slot_second;
  if (right == 0) {
    // "... j 0 ..." -> "... 0 j ...": the particle crosses the impurity
    op = impurity_smatrix(SMatrixArgs(spectral_of_label(ctx, left), ctx.u));
    slot_first = left;
    slot_second = 0;
  } else if (left == 0) {
    // inverse crossing: S at the negated argument
    op = impurity_smatrix(SMatrixArgs(-spectral_of_label(ctx, right), ctx.u));
    slot_first = right;
    slot_second = 0;
  } else {
    op = particle_smatrix(spectral_of_label(ctx, left),
                          weight * spectral_of_label(ctx, right), ctx.u);
    slot_first = left;
    slot_second = right;
  }
  return {ord.swapped(position),
          embed_two_site(op, slot_first, slot_second, chain)};
}

void validate_context(const AmplitudeContext& ctx) {
  if (ctx.zs.empty()) {
    throw DomainError("AmplitudeContext: at least one particle required");
  }
}

}  // namespace

Ordering::Ordering(std::vector<int> sequence) : seq_(std::move(sequence)) {
  const int n = static_cast<int>(seq_.size());
  if (n < 2) {
    throw DomainError("Ordering: need the impurity plus at least one particle");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int label : seq_) {
    if (label < 0 || label >= n || seen[static_cast<std::size_t>(label)]) {
      throw DomainError("Ordering: sequence is not a permutation of 0.." +
                        std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(label)] = true;
  }
}

Ordering Ordering::reference(int n_particles) {
  std::vector<int> seq(static_cast<std::size_t>(n_particles) + 1);
  std::iota(seq.rbegin(), seq.rend(), 0);  // (N, ..., 1, 0)
  return Ordering(std::move(seq));
}

int Ordering::at(int position) const {
  if (position < 0 || position >= size()) {
    throw InvalidIndex("Ordering::at: position out of range");
  }
  return seq_[static_cast<std::size_t>(position)];
}

Ordering Ordering::swapped(int position) const {
  if (position < 0 || position + 1 >= size()) {
    throw InvalidIndex("Ordering::swapped: position out of range");
  }
  std::vector<int> seq = seq_;
  std::swap(seq[static_cast<std::size_t>(position)],
            seq[static_cast<std::size_t>(position) + 1]);
  return Ordering(std::move(seq));
}

std::pair<Ordering, ChainOperator> adjacent_relation(
    const Ordering& ord, int position, const AmplitudeContext& ctx) {
  validate_context(ctx);
  if (ord.size() != static_cast<int>(ctx.zs.size()) + 1) {
    throw DimMismatch("adjacent_relation: ordering size does not match context");
  }
  return adjacent_relation_weighted(ord, position, ctx, 1.0);
}

AmplitudeVector propagate_amplitude(const AmplitudeVector& reference,
                                    const Ordering& ref_ord,
                                    const Ordering& target,
                                    std::span<const int> path,
                                    const AmplitudeContext& ctx) {
  validate_context(ctx);
  const ChainSpec chain(ref_ord.size() - 1);
  if (reference.size() != chain.dim()) {
    throw DimMismatch("propagate_amplitude: amplitude dim " +
                      std::to_string(reference.size()) + " != chain dim " +
                      std::to_string(chain.dim()));
  }
  Ordering current = ref_ord;
  AmplitudeVector value = reference;
  for (int position : path) {
    auto [next, op] = adjacent_relation(current, position, ctx);
    value = op * value;
    current = next;
  }
  if (!(current == target)) {
    throw PathMismatch("propagate_amplitude: path ends at a different ordering");
  }
  return value;
}

double consistency_residual(const AmplitudeContext& ctx,
                            double pair_argument_weight) {
  validate_context(ctx);
  const int n_particles = static_cast<int>(ctx.zs.size());
  if (n_particles > kMaxConsistencyParticles) {
    throw DomainError("consistency_residual: supported up to N = " +
                      std::to_string(kMaxConsistencyParticles));
  }
  const int n = n_particles + 1;
  const Eigen::Index dim = ChainSpec(n_particles).dim();
  const ChainOperator eye = ChainOperator::Identity(dim, dim);

  auto rel = [&](const Ordering& ord, int p) {
    return adjacent_relation_weighted(ord, p, ctx, pair_argument_weight);
  };

  double worst = 0.0;
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  do {
    const Ordering ord(seq);
    // double swap = identity
    for (int p = 0; p + 1 < n; ++p) {
      auto [o1, a] = rel(ord, p);
      auto [o2, b] = rel(o1, p);
      worst = std::max(worst, residual(b * a, eye));
    }
    // disjoint swaps commute
    for (int p = 0; p + 1 < n; ++p) {
      for (int q = p + 2; q + 1 < n; ++q) {
        auto [o1, a] = rel(ord, p);
        auto [o2, b] = rel(o1, q);
        auto [o3, c] = rel(ord, q);
        auto [o4, d] = rel(o3, p);
        worst = std::max(worst, residual(b * a, d * c));
      }
    }
    // braid loops: the two reduced words for reversing three neighbours
    for (int p = 0; p + 2 < n; ++p) {
      auto [o1, a] = rel(ord, p);
      auto [o2, b] = rel(o1, p + 1);
      auto [o3, c] = rel(o2, p);
      auto [q1, x] = rel(ord, p + 1);
      auto [q2, y] = rel(q1, p);
      auto [q3, z] = rel(q2, p + 1);
      worst = std::max(worst, residual(c * b * a, z * y * x));
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return worst;
}

AmplitudeField::AmplitudeField(double window_start, double system_size,
                               std::vector<double> grid,
                               std::vector<AmplitudeVector> base_values)
    : start_(window_start), L_(system_size), grid_(std::move(grid)) {
  periods_[0] = std::move(base_values);
  validate();
}

AmplitudeField::AmplitudeField(
    double window_start, double system_size, std::vector<double> grid,
    std::map<int, std::vector<AmplitudeVector>> periods)
    : start_(window_start),
      L_(system_size),
      grid_(std::move(grid)),
      periods_(std::move(periods)) {
  validate();
}

void AmplitudeField::validate() const {
  if (!(L_ > 0.0) || !std::isfinite(L_) || !std::isfinite(start_)) {
    throw DomainError("AmplitudeField: invalid window");
  }
  if (grid_.empty()) throw DomainError("AmplitudeField: empty grid");
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    if (grid_[k] < start_ || grid_[k] >= start_ + L_) {
      throw DomainError("AmplitudeField: grid point outside the window");
    }
    if (k > 0 && !(grid_[k] > grid_[k - 1])) {
      throw DomainError("AmplitudeField: grid must be strictly increasing");
    }
  }
  if (periods_.empty() || !periods_.count(0)) {
    throw DomainError("AmplitudeField: period 0 required");
  }
  int expected = periods_.begin()->first;
  for (const auto& [period, values] : periods_) {
    if (period != expected++) {
      throw DomainError("AmplitudeField: periods must be contiguous");
    }
    if (values.size() != grid_.size()) {
      throw DomainError("AmplitudeField: values/grid size mismatch");
    }
    for (const auto& v : values) {
      if (v.size() != 4) {
        throw DomainError("AmplitudeField: one-particle amplitudes have dim 4");
      }
      if (!v.allFinite()) {
        throw DomainError("AmplitudeField: non-finite amplitude");
      }
    }
  }
}

int AmplitudeField::min_period() const { return periods_.begin()->first; }

int AmplitudeField::max_period() const { return periods_.rbegin()->first; }

double AmplitudeField::z_at(std::size_t grid_index, int period) const {
  return grid_.at(grid_index) + period * L_;
}

const AmplitudeVector& AmplitudeField::at(std::size_t grid_index,
                                          int period) const {
  const auto it = periods_.find(period);
  if (it == periods_.end()) {
    throw InvalidIndex("AmplitudeField::at: period " + std::to_string(period) +
                       " not present");
  }
  return it->second.at(grid_index);
}

AmplitudeField extend_one_particle(const AmplitudeField& initial,
                                   int n_periods,
                                   const SpectralProfile& spectral, double u) {
  if (n_periods < 1) {
    throw DomainError("extend_one_particle: n_periods must be >= 1");
  }
  const ChainSpec chain(1);
  const auto& grid = initial.grid();
  const double L = initial.system_size();

  auto step_matrix = [&](double z) {
    return embed_two_site(impurity_smatrix(SMatrixArgs(spectral(z), u)), 1, 0,
                          chain);
  };

  std::map<int, std::vector<AmplitudeVector>> periods;
  std::vector<AmplitudeVector> base(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) base[k] = initial.at(k, 0);
  periods[0] = base;

  // downward: f(z - L) = S(phi(z)) f(z), applied at z = grid + p L
  for (int p = 0; p > -n_periods; --p) {
    std::vector<AmplitudeVector> next(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      next[k] = step_matrix(grid[k] + p * L) * periods[p][k];
    }
    periods[p - 1] = std::move(next);
  }
  // upward: the inverse matrix is the S-matrix at the negated argument
  for (int p = 0; p < n_periods; ++p) {
    std::vector<AmplitudeVector> next(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double z_up = grid[k] + (p + 1) * L;
      const ChainOperator inv = embed_two_site(
          impurity_smatrix(SMatrixArgs(-spectral(z_up), u)), 1, 0, chain);
      next[k] = inv * periods[p][k];
    }
    periods[p + 1] = std::move(next);
  }

  AmplitudeField out(initial.window_start(), L, grid, std::move(periods));

  // independent re-check of the difference equation at every point
  for (int p = out.min_period() + 1; p <= out.max_period(); ++p) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const AmplitudeVector lhs = out.at(k, p - 1);
      const AmplitudeVector rhs = step_matrix(grid[k] + p * L) * out.at(k, p);
      if ((lhs - rhs).cwiseAbs().maxCoeff() > kRecheckTol) {
        throw DomainError(
            "extend_one_particle: difference-equation re-check failed");
      }
    }
  }
  return out;
}

double pbc_residual(const AmplitudeField& field,
                    const SpectralProfile& spectral, double u) {
  if (field.min_period() == 0 && field.max_period() == 0) {
    throw DomainError("pbc_residual: field must be extended at least one period");
  }
  const ChainSpec chain(1);
  const auto& grid = field.grid();
  const double L = field.system_size();

  double worst = 0.0;
  for (int p = field.min_period() + 1; p <= field.max_period(); ++p) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double z = grid[k] + p * L;
      const ChainOperator s = embed_two_site(
          impurity_smatrix(SMatrixArgs(spectral(z), u)), 1, 0, chain);
      const AmplitudeVector wrapped = s * field.at(k, p);
      worst = std::max(
          worst, (wrapped - field.at(k, p - 1)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace ybrg
