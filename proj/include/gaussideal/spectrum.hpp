#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "gaussideal/ideal.hpp"
#include "gaussideal/peter_weyl.hpp"
#include "gaussideal/reduction.hpp"

namespace gaussideal {

/// Laplacian eigenvalue on the quarter-integer grid (Casimir values are n^2 or j(j+1)).
struct Energy {
  long quarters = 0;
  double value() const { return 0.25 * static_cast<double>(quarters); }
  friend auto operator<=>(Energy, Energy) = default;
};

/// Sum over edges of the Casimir eigenvalue of the edge label.
Energy block_energy(const BlockLabel& block);

struct EnergyGroup {
  Energy energy;
  /// Block indices into the truncation, ascending.
  std::vector<std::size_t> blocks;
  std::size_t dim = 0;
};

/// Blocks grouped into Laplacian eigenspaces. These are eigenspaces of the truncated Laplacian only:
/// blocks outside the cutoff with the same energy are absent.
struct EnergyGrouping {
  std::vector<EnergyGroup> groups;          // ascending energy
  std::vector<std::size_t> group_of_block;  // block index -> group index

  std::vector<std::vector<std::size_t>> subrepresentations() const;
};

EnergyGrouping eigenspace_grouping(const Truncation& trunc);

/// Every block its own group; the Peter-Weyl decomposition itself.
EnergyGrouping discrete_grouping(const Truncation& trunc);

/// Every block sits in exactly one group, whose energy equals the block's energy.
bool refines(const Truncation& trunc, const EnergyGrouping& grouping);

/// Orthogonal projector onto the combined space of a group.
BlockOperator group_projector(const Truncation& trunc, const EnergyGroup& group);

/// The truncated Laplacian: block_energy times the identity on each block.
BlockOperator laplacian(const Truncation& trunc);

/// verify_theorem with sigma ranging over the merged groups.
IdealReport coarsened_verify(const LatticeSystem& system, const ReducedSystem& reduced, const EnergyGrouping& grouping,
                             const VerifyOptions& options);

}  // namespace gaussideal
