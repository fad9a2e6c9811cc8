#pragma once

#include <optional>
#include <span>
#include <vector>

#include "monosep/exact_arith.hpp"

namespace monosep {

using IntVector = std::vector<BigInt>;

/// Row-style Hermite echelon form of an integer lattice given by generator
/// rows, with the unimodular transform kept so that lattice membership can be
/// answered with explicit coefficients on the original generators.
/// Column 0 is eliminated first.
class HermiteEchelon {
 public:
  HermiteEchelon(std::span<const IntVector> generators, std::size_t width);

  /// Coefficients c with sum(c[i] * generators[i]) == target, if target lies
  /// in the lattice.
  std::optional<IntVector> solve(const IntVector& target) const;

  std::size_t rank() const { return pivots_.size(); }
  std::span<const IntVector> rows() const { return rows_; }

 private:
  std::size_t width_;
  std::size_t num_generators_;
  std::vector<IntVector> rows_;       // echelon rows, first rank() are nonzero
  std::vector<IntVector> transform_;  // rows_[r] == sum(transform_[r][i] * gen[i])
  std::vector<std::size_t> pivots_;   // pivot column of each nonzero row
};

}  // namespace monosep
