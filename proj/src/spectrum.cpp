#include "gaussideal/spectrum.hpp"

#include <map>
#include <stdexcept>

namespace gaussideal {

Energy block_energy(const BlockLabel& block) {
  Energy e;
  for (auto l : block.labels) e.quarters += casimir_quarters(block.group, l);
  return e;
}

std::vector<std::vector<std::size_t>> EnergyGrouping::subrepresentations() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : groups) out.push_back(g.blocks);
  return out;
}

EnergyGrouping eigenspace_grouping(const Truncation& trunc) {
  std::map<Energy, std::vector<std::size_t>> by_energy;
  for (std::size_t b = 0; b < trunc.blocks.size(); ++b) by_energy[block_energy(trunc.blocks[b])].push_back(b);
  EnergyGrouping out;
  out.group_of_block.assign(trunc.blocks.size(), 0);
  for (auto& [energy, blocks] : by_energy) {
    EnergyGroup g{energy, std::move(blocks), 0};
    for (auto b : g.blocks) {
      g.dim += trunc.blocks[b].dim();
      out.group_of_block[b] = out.groups.size();
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

EnergyGrouping discrete_grouping(const Truncation& trunc) {
  EnergyGrouping out;
  for (std::size_t b = 0; b < trunc.blocks.size(); ++b) {
    out.groups.push_back({block_energy(trunc.blocks[b]), {b}, trunc.blocks[b].dim()});
    out.group_of_block.push_back(b);
  }
  return out;
}

bool refines(const Truncation& trunc, const EnergyGrouping& grouping) {
  if (grouping.group_of_block.size() != trunc.blocks.size()) return false;
  std::vector<int> seen(trunc.blocks.size(), 0);
  for (std::size_t gi = 0; gi < grouping.groups.size(); ++gi) {
    for (auto b : grouping.groups[gi].blocks) {
      if (b >= trunc.blocks.size() || grouping.group_of_block[b] != gi) return false;
      if (block_energy(trunc.blocks[b]) != grouping.groups[gi].energy) return false;
      ++seen[b];
    }
  }
  for (int s : seen)
    if (s != 1) return false;
  return true;
}

BlockOperator group_projector(const Truncation& trunc, const EnergyGroup& group) {
  BlockOperator p(trunc.block_dims());
  for (auto b : group.blocks) {
    const auto d = static_cast<Eigen::Index>(trunc.blocks.at(b).dim());
    p.block(b, b) = Matrix::Identity(d, d);
  }
  return p;
}

BlockOperator laplacian(const Truncation& trunc) {
  BlockOperator h(trunc.block_dims());
  for (std::size_t b = 0; b < trunc.blocks.size(); ++b) {
    const auto d = static_cast<Eigen::Index>(trunc.blocks[b].dim());
    const double e = block_energy(trunc.blocks[b]).value();
    if (e != 0.0) h.block(b, b) = e * Matrix::Identity(d, d);
  }
  return h;
}

IdealReport coarsened_verify(const LatticeSystem& system, const ReducedSystem& reduced, const EnergyGrouping& grouping,
                             const VerifyOptions& options) {
  if (!refines(system.truncation, grouping))
    throw std::invalid_argument("coarsened_verify: grouping does not partition this truncation");
  return verify_with_subrepresentations(system, reduced, grouping.subrepresentations(), options);
}

}  // namespace gaussideal
