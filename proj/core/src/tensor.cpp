#include "ybrg/tensor.hpp"

#include <string>

namespace ybrg {

ChainSpec::ChainSpec(int n_particles) : n_particles_(n_particles) {
  if (n_particles < 1 || n_particles > kMaxParticles) {
    throw DomainError("ChainSpec: n_particles must be in [1, " +
                      std::to_string(kMaxParticles) + "], got " +
                      std::to_string(n_particles));
  }
}

ChainOperator embed_two_site(const TwoSiteOperator& op, int slot_a, int slot_b,
                             const ChainSpec& chain) {
  const int n = chain.slots();
  if (slot_a == slot_b) {
    throw InvalidSlots("embed_two_site: slots must differ, got " +
                       std::to_string(slot_a) + " twice");
  }
  if (slot_a < 0 || slot_b < 0 || slot_a >= n || slot_b >= n) {
    throw InvalidSlots("embed_two_site: slot pair (" + std::to_string(slot_a) +
                       ", " + std::to_string(slot_b) + ") out of range for " +
                       std::to_string(n) + " slots");
  }

  const Eigen::Index dim = chain.dim();
  const int shift_a = n - 1 - slot_a;
  const int shift_b = n - 1 - slot_b;
  const Eigen::Index slot_bits =
      (Eigen::Index{1} << shift_a) | (Eigen::Index{1} << shift_b);

  ChainOperator out = ChainOperator::Zero(dim, dim);
  for (Eigen::Index rest = 0; rest < dim; ++rest) {
    if (rest & slot_bits) continue;  // enumerate the spectator bits once
    for (int p = 0; p < 4; ++p) {
      const Eigen::Index row = rest | (Eigen::Index{p >> 1} << shift_a) |
                               (Eigen::Index{p & 1} << shift_b);
      for (int q = 0; q < 4; ++q) {
        const Eigen::Index col = rest | (Eigen::Index{q >> 1} << shift_a) |
                                 (Eigen::Index{q & 1} << shift_b);
        out(row, col) = op(p, q);
      }
    }
  }
  return out;
}

double residual(const ChainOperator& a, const ChainOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimMismatch("residual: " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " vs " +
                      std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
  return (a - b).norm();
}

ChainOperator compose(std::span<const ChainOperator> ops) {
  if (ops.empty()) throw EmptyComposition("compose: empty operator list");
  ChainOperator out = ops.front();
  for (std::size_t k = 1; k < ops.size(); ++k) {
    if (ops[k].rows() != out.rows() || ops[k].cols() != out.cols()) {
      throw DimMismatch("compose: operator " + std::to_string(k) +
                        " has mismatched dimensions");
    }
    out = out * ops[k];
  }
  return out;
}

ChainOperator compose(std::initializer_list<ChainOperator> ops) {
  return compose(std::span<const ChainOperator>(ops.begin(), ops.size()));
}

}  // namespace ybrg
