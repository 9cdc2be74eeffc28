#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gaussideal/graph.hpp"
#include "gaussideal/group.hpp"
#include "gaussideal/linalg.hpp"

namespace gaussideal {

/// One isotypical component H[delta] of L^2(G^{edges}): an irrep per edge.
///
/// The block is spanned by the functions a -> prod_e sqrt(d_e) D^{delta_e}(a_e)_{m_e n_e}, which are
/// orthonormal in L^2. Basis order is lexicographic in edge order, then (row, column): edge 0 is the
/// most significant digit and within an edge the index is m * d + n.
struct BlockLabel {
  GroupId group = GroupId::U1;
  std::vector<IrrepLabel> labels;

  std::size_t num_edges() const { return labels.size(); }
  std::size_t dim() const;
  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

/// Per edge, the (row, column) pair of a matrix coefficient.
struct BlockBasisIndex {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
};

std::size_t flat_index(const BlockLabel& block, const BlockBasisIndex& idx);
BlockBasisIndex basis_index(const BlockLabel& block, std::size_t flat);

/// All blocks with every edge label within a uniform band.
struct Truncation {
  GroupId group = GroupId::U1;
  IrrepLabel bound;
  std::size_t num_edges = 0;
  std::vector<BlockLabel> blocks;

  std::vector<std::size_t> block_dims() const;
  std::vector<std::size_t> offsets() const;
  std::size_t total_dim() const;
  std::size_t max_block_dim() const;
};

Truncation enumerate_blocks(const Graph& graph, GroupId group, IrrepLabel bound);

/// (L(left) x R(right)) on the coefficient basis of one edge factor, identity elsewhere:
/// psi -> psi(left^{-1} x right). On the edge factor this is conj(D(left)) (x) D(right).
Matrix regular_action_block(const BlockLabel& block, EdgeId edge, const GroupPoint& left, const GroupPoint& right);

/// Values of all basis functions of the block at a connection, in basis order.
Vector basis_function_values(const BlockLabel& block, std::span<const GroupPoint> connection);

/// psi(a) for psi = sum_k coeffs[k] * (basis function k).
Complex evaluate_block_function(const BlockLabel& block, const Vector& coeffs, std::span<const GroupPoint> connection);

}  // namespace gaussideal
