#include "gaussideal/peter_weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gaussideal {

std::size_t BlockLabel::dim() const {
  std::size_t d = 1;
  for (auto l : labels) {
    const std::size_t de = irrep_dim(group, l);
    d *= de * de;
  }
  return d;
}

std::size_t flat_index(const BlockLabel& block, const BlockBasisIndex& idx) {
  if (idx.entries.size() != block.num_edges()) throw std::invalid_argument("flat_index: wrong number of edges");
  std::size_t flat = 0;
  for (std::size_t e = 0; e < block.num_edges(); ++e) {
    const std::size_t d = irrep_dim(block.group, block.labels[e]);
    const auto [m, n] = idx.entries[e];
    if (m >= d || n >= d) throw std::out_of_range("flat_index: coefficient index out of range");
    flat = flat * d * d + m * d + n;
  }
  return flat;
}

BlockBasisIndex basis_index(const BlockLabel& block, std::size_t flat) {
  if (flat >= block.dim()) throw std::out_of_range("basis_index: index out of range");
  BlockBasisIndex idx;
  idx.entries.resize(block.num_edges());
  for (std::size_t e = block.num_edges(); e-- > 0;) {
    const std::size_t d = irrep_dim(block.group, block.labels[e]);
    const std::size_t local = flat % (d * d);
    flat /= d * d;
    idx.entries[e] = {local / d, local % d};
  }
  return idx;
}

std::vector<std::size_t> Truncation::block_dims() const {
  std::vector<std::size_t> dims;
  dims.reserve(blocks.size());
  for (const auto& b : blocks) dims.push_back(b.dim());
  return dims;
}

std::vector<std::size_t> Truncation::offsets() const {
  std::vector<std::size_t> off(blocks.size() + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) off[b + 1] = off[b] + blocks[b].dim();
  return off;
}

std::size_t Truncation::total_dim() const { return offsets().back(); }

std::size_t Truncation::max_block_dim() const {
  std::size_t m = 0;
  for (const auto& b : blocks) m = std::max(m, b.dim());
  return m;
}

Truncation enumerate_blocks(const Graph& graph, GroupId group, IrrepLabel bound) {
  const auto labels = labels_within(group, bound);
  Truncation t{group, bound, graph.num_edges(), {}};
  const std::size_t ne = graph.num_edges();
  std::vector<std::size_t> digit(ne, 0);
  while (true) {
    BlockLabel block{group, {}};
    for (auto d : digit) block.labels.push_back(labels[d]);
    t.blocks.push_back(std::move(block));
    std::size_t e = ne;
    while (e > 0 && ++digit[e - 1] == labels.size()) digit[--e] = 0;
    if (e == 0) break;
  }
  return t;
}

Matrix regular_action_block(const BlockLabel& block, EdgeId edge, const GroupPoint& left, const GroupPoint& right) {
  if (edge >= block.num_edges()) throw std::invalid_argument("regular_action_block: unknown edge");
  std::size_t before = 1, after = 1;
  for (std::size_t e = 0; e < block.num_edges(); ++e) {
    if (e == edge) continue;
    const std::size_t d = irrep_dim(block.group, block.labels[e]);
    (e < edge ? before : after) *= d * d;
  }
  const IrrepLabel l = block.labels[edge];
  const Matrix factor = kron(irrep_matrix(block.group, l, left).conjugate(), irrep_matrix(block.group, l, right));
  const auto b = static_cast<Eigen::Index>(before);
  const auto a = static_cast<Eigen::Index>(after);
  return kron(kron(Matrix::Identity(b, b), factor), Matrix::Identity(a, a));
}

Vector basis_function_values(const BlockLabel& block, std::span<const GroupPoint> connection) {
  if (connection.size() != block.num_edges())
    throw std::invalid_argument("basis_function_values: connection has the wrong number of edges");
  Matrix values = Matrix::Ones(1, 1);
  for (std::size_t e = 0; e < block.num_edges(); ++e) {
    const Matrix d = irrep_matrix(block.group, block.labels[e], connection[e]);
    Matrix row_major(d.size(), 1);
    for (Eigen::Index m = 0; m < d.rows(); ++m)
      for (Eigen::Index n = 0; n < d.cols(); ++n) row_major(m * d.cols() + n, 0) = d(m, n);
    values = kron(values, std::sqrt(static_cast<double>(d.rows())) * row_major);
  }
  return values.col(0);
}

Complex evaluate_block_function(const BlockLabel& block, const Vector& coeffs, std::span<const GroupPoint> connection) {
  if (static_cast<std::size_t>(coeffs.size()) != block.dim())
    throw std::invalid_argument("evaluate_block_function: coefficient vector has the wrong size");
  return coeffs.cwiseProduct(basis_function_values(block, connection)).sum();
}

}  // namespace gaussideal
