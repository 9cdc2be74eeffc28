#include "gaussideal/reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace gaussideal {
namespace {

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

// Column-major vec: vec(A X B) = (B^T (x) A) vec(X).
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

}  // namespace

LatticeSystem LatticeSystem::make(Graph graph, GroupId group, IrrepLabel bound) {
  validate(group, bound);
  Truncation t = enumerate_blocks(graph, group, bound);
  return {std::move(graph), group, bound, std::move(t)};
}

Matrix invariant_projector(const Graph& graph, const BlockLabel& block, ProjectorMethod method,
                           std::optional<IrrepLabel> band) {
  const auto n = static_cast<Eigen::Index>(block.dim());
  if (method == ProjectorMethod::Quadrature) {
    const auto quad = GaugeQuadrature::for_blocks(graph, {block}, Integrand::Representation, band);
    return average_rho(graph, block, quad);
  }
  const auto gens = gauss_generators_block(graph, block);
  if (gens.empty()) return identity(n);
  Matrix stacked(n * static_cast<Eigen::Index>(gens.size()), n);
  for (std::size_t r = 0; r < gens.size(); ++r) stacked.middleRows(static_cast<Eigen::Index>(r) * n, n) = gens[r];
  const Matrix kernel = null_space(stacked);
  return kernel * kernel.adjoint();
}

InvariantSubspace invariant_basis(const LatticeSystem& system, ProjectorMethod method) {
  const auto& blocks = system.truncation.blocks;
  const auto offsets = system.truncation.offsets();
  InvariantSubspace out{SubspaceBasis(offsets.back()), {}};
  std::vector<std::pair<std::size_t, Matrix>> placed;
  Eigen::Index h = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Matrix p = invariant_projector(system.graph, blocks[b], method);
    Matrix image = projector_range(p);
    h += image.cols();
    out.per_block.push_back(image);
  }
  Matrix vectors = Matrix::Zero(static_cast<Eigen::Index>(offsets.back()), h);
  Eigen::Index col = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Matrix& img = out.per_block[b];
    vectors.block(static_cast<Eigen::Index>(offsets[b]), col, img.rows(), img.cols()) = img;
    col += img.cols();
  }
  out.basis = SubspaceBasis(offsets.back(), std::move(vectors));
  return out;
}

EquivariantSpace::EquivariantSpace(std::vector<std::size_t> block_dims, std::vector<PairBasis> pairs)
    : block_dims_(std::move(block_dims)), pairs_(std::move(pairs)) {
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    auto& pb = pairs_[p];
    pb.first = dim_;
    index_[{pb.row_block, pb.col_block}] = p;
    for (std::size_t k = 0; k < pb.elements.size(); ++k) locate_.emplace_back(p, k);
    dim_ += pb.elements.size();
  }
}

const EquivariantSpace::PairBasis* EquivariantSpace::pair(std::size_t row, std::size_t col) const {
  auto it = index_.find({row, col});
  return it == index_.end() ? nullptr : &pairs_[it->second];
}

BlockOperator EquivariantSpace::element(std::size_t k) const {
  const auto [p, local] = locate_.at(k);
  BlockOperator op(block_dims_);
  op.block(pairs_[p].row_block, pairs_[p].col_block) = pairs_[p].elements[local];
  return op;
}

BlockOperator EquivariantSpace::to_operator(const Vector& coords) const {
  if (static_cast<std::size_t>(coords.size()) != dim_) throw std::invalid_argument("to_operator: wrong coordinate length");
  BlockOperator op(block_dims_);
  for (const auto& pb : pairs_) {
    bool any = false;
    for (std::size_t k = 0; k < pb.elements.size(); ++k) any = any || coords(static_cast<Eigen::Index>(pb.first + k)) != 0.0;
    if (!any) continue;
    Matrix& m = op.block(pb.row_block, pb.col_block);
    for (std::size_t k = 0; k < pb.elements.size(); ++k) m += coords(static_cast<Eigen::Index>(pb.first + k)) * pb.elements[k];
  }
  return op;
}

Vector EquivariantSpace::coordinates(const BlockOperator& op, double* residual) const {
  if (op.block_dims() != block_dims_) throw std::invalid_argument("coordinates: operator layout does not match");
  Vector c = Vector::Zero(static_cast<Eigen::Index>(dim_));
  double outside = 0.0;
  for (const auto& [key, m] : op.blocks()) {
    const PairBasis* pb = pair(key.first, key.second);
    if (!pb) {
      outside += m.squaredNorm();
      continue;
    }
    Matrix rest = m;
    for (std::size_t k = 0; k < pb->elements.size(); ++k) {
      const Complex ck = pb->elements[k].cwiseProduct(m.conjugate()).sum();
      const Complex coeff = std::conj(ck);  // <a_k, m> = tr(a_k^H m)
      c(static_cast<Eigen::Index>(pb->first + k)) = coeff;
      rest -= coeff * pb->elements[k];
    }
    outside += rest.squaredNorm();
  }
  if (residual) *residual = std::sqrt(outside);
  return c;
}

EquivariantSpace commutant_basis(const LatticeSystem& system) {
  const auto& blocks = system.truncation.blocks;
  std::vector<std::vector<Matrix>> gens;
  gens.reserve(blocks.size());
  for (const auto& b : blocks) gens.push_back(gauss_generators_block(system.graph, b));
  const std::size_t r = gens.empty() ? 0 : gens.front().size();

  std::vector<EquivariantSpace::PairBasis> pairs;
  for (std::size_t tau = 0; tau < blocks.size(); ++tau) {
    const auto dt = static_cast<Eigen::Index>(blocks[tau].dim());
    for (std::size_t sigma = 0; sigma < blocks.size(); ++sigma) {
      const auto ds = static_cast<Eigen::Index>(blocks[sigma].dim());
      const Eigen::Index unknowns = dt * ds;
      Matrix constraints(static_cast<Eigen::Index>(r) * unknowns, unknowns);
      for (std::size_t k = 0; k < r; ++k) {
        // Gamma_tau B - B Gamma_sigma = 0
        constraints.middleRows(static_cast<Eigen::Index>(k) * unknowns, unknowns) =
            kron(identity(ds), gens[tau][k]) - kron(gens[sigma][k].transpose(), identity(dt));
      }
      const Matrix kernel = null_space(constraints);
      if (kernel.cols() == 0) continue;
      EquivariantSpace::PairBasis pb{tau, sigma, 0, {}};
      for (Eigen::Index c = 0; c < kernel.cols(); ++c) pb.elements.push_back(unvec(kernel.col(c), dt, ds));
      pairs.push_back(std::move(pb));
    }
  }
  return EquivariantSpace(system.truncation.block_dims(), std::move(pairs));
}

Matrix restriction_map(const EquivariantSpace& space, const SubspaceBasis& invariant) {
  std::size_t total = 0;
  for (auto d : space.block_dims()) total += d;
  if (invariant.ambient_dim() != total)
    throw std::invalid_argument("restriction_map: invariant subspace and algebra come from different truncations");
  std::vector<Eigen::Index> offset(space.block_dims().size() + 1, 0);
  for (std::size_t b = 0; b < space.block_dims().size(); ++b)
    offset[b + 1] = offset[b] + static_cast<Eigen::Index>(space.block_dims()[b]);

  const Matrix& v = invariant.vectors();
  const Eigen::Index h = v.cols();
  Matrix pi = Matrix::Zero(h * h, static_cast<Eigen::Index>(space.dim()));
  for (const auto& pb : space.pairs()) {
    const auto vr = v.middleRows(offset[pb.row_block], static_cast<Eigen::Index>(space.block_dims()[pb.row_block]));
    const auto vc = v.middleRows(offset[pb.col_block], static_cast<Eigen::Index>(space.block_dims()[pb.col_block]));
    for (std::size_t k = 0; k < pb.elements.size(); ++k) {
      const Matrix compressed = vr.adjoint() * pb.elements[k] * vc;
      pi.col(static_cast<Eigen::Index>(pb.first + k)) = Eigen::Map<const Vector>(compressed.data(), h * h);
    }
  }
  return pi;
}

SubspaceBasis kernel_pi_basis(const EquivariantSpace& space, const SubspaceBasis& invariant) {
  const Matrix pi = restriction_map(space, invariant);
  return SubspaceBasis(space.dim(), null_space(pi));
}

}  // namespace gaussideal
