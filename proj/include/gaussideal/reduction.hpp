#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gaussideal/gauge.hpp"
#include "gaussideal/graph.hpp"
#include "gaussideal/group.hpp"
#include "gaussideal/linalg.hpp"
#include "gaussideal/peter_weyl.hpp"

namespace gaussideal {

/// A lattice gauge system at fixed truncation.
struct LatticeSystem {
  Graph graph;
  GroupId group = GroupId::U1;
  IrrepLabel bound;
  Truncation truncation;

  static LatticeSystem make(Graph graph, GroupId group, IrrepLabel bound);
};

enum class ProjectorMethod { LieAlgebra, Quadrature };

/// Orthogonal projector onto the gauge-invariant vectors of one block.
///
/// LieAlgebra: projector onto the joint kernel of all Gauss generators (the gauge group is connected).
/// Quadrature: the Haar average of rho_block; `band` overrides the automatic per-vertex band and
/// raises BandError when it is too small.
Matrix invariant_projector(const Graph& graph, const BlockLabel& block, ProjectorMethod method,
                           std::optional<IrrepLabel> band = std::nullopt);

struct InvariantSubspace {
  /// Orthonormal basis of H^K in the truncated space.
  SubspaceBasis basis;
  /// Per block, the orthonormal invariant vectors in block coordinates.
  std::vector<Matrix> per_block;
};

InvariantSubspace invariant_basis(const LatticeSystem& system, ProjectorMethod method = ProjectorMethod::LieAlgebra);

/// Orthonormal (Frobenius) basis of the commutant of the gauge action on the truncated space.
///
/// Every gauge-equivariant operator maps block to block, so the basis is organized by block pair
/// (row block, column block); each basis element is supported on exactly one pair. Coordinates in this
/// basis are an isometry onto A^K with the Hilbert-Schmidt inner product.
class EquivariantSpace {
 public:
  struct PairBasis {
    std::size_t row_block;
    std::size_t col_block;
    /// Index of the first element of this pair in the global basis.
    std::size_t first;
    std::vector<Matrix> elements;
  };

  EquivariantSpace() = default;
  EquivariantSpace(std::vector<std::size_t> block_dims, std::vector<PairBasis> pairs);

  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& block_dims() const { return block_dims_; }
  const std::vector<PairBasis>& pairs() const { return pairs_; }
  const PairBasis* pair(std::size_t row, std::size_t col) const;

  BlockOperator element(std::size_t k) const;
  BlockOperator to_operator(const Vector& coords) const;
  /// Orthogonal projection onto A^K in coordinates; `residual` receives the Frobenius norm of the
  /// part of `op` outside A^K.
  Vector coordinates(const BlockOperator& op, double* residual = nullptr) const;

 private:
  std::vector<std::size_t> block_dims_;
  std::vector<PairBasis> pairs_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> locate_;  // global k -> (pair, local)
  std::size_t dim_ = 0;
};

/// Null space of b -> ([b, Gamma])_Gamma over all Gauss generators, computed per block pair.
EquivariantSpace commutant_basis(const LatticeSystem& system);

/// The restriction map pi: A^K -> B(H^K), b -> V^H b V, as a (h^2 x dim A^K) matrix acting on
/// coordinates; output index is column-major over the h x h result.
Matrix restriction_map(const EquivariantSpace& space, const SubspaceBasis& invariant);

/// Orthonormal basis, in A^K coordinates, of ker(pi) = { b in A^K : b p_{H^K} = 0 }.
SubspaceBasis kernel_pi_basis(const EquivariantSpace& space, const SubspaceBasis& invariant);

}  // namespace gaussideal
