#include "gaussideal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gaussideal {

std::size_t numerical_rank(const Eigen::VectorXd& singular_values, double rel) {
  if (singular_values.size() == 0) return 0;
  const double top = singular_values.maxCoeff();
  if (!(top > 0.0)) return 0;
  const double cut = rel * top;
  return static_cast<std::size_t>((singular_values.array() > cut).count());
}

Matrix orthonormal_range(const Matrix& m, double rel) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto r = static_cast<Eigen::Index>(numerical_rank(svd.singularValues(), rel));
  return svd.matrixU().leftCols(r);
}

Matrix projector_range(const Matrix& p) {
  if (p.rows() != p.cols()) throw std::invalid_argument("projector_range: matrix is not square");
  if (p.rows() == 0) return Matrix(0, 0);
  const Matrix herm = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm);
  const auto& vals = eig.eigenvalues();  // ascending
  Eigen::Index first = 0;
  while (first < vals.size() && vals[first] <= 0.5) ++first;
  return eig.eigenvectors().rightCols(vals.size() - first);
}

Matrix null_space(const Matrix& m, double rel) {
  const Eigen::Index n = m.cols();
  if (n == 0) return Matrix(0, 0);
  if (m.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto r = static_cast<Eigen::Index>(numerical_rank(svd.singularValues(), rel));
  return svd.matrixV().rightCols(n - r);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix expm_antihermitian(const Matrix& a) {
  const Matrix h = Complex(0.0, 1.0) * a;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (h + h.adjoint()));
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  Vector phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) phases(k) = std::polar(1.0, -lambda(k));
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), vectors_(static_cast<Eigen::Index>(ambient_dim), 0) {}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, Matrix orthonormal_columns)
    : ambient_dim_(ambient_dim), vectors_(std::move(orthonormal_columns)) {
  if (static_cast<std::size_t>(vectors_.rows()) != ambient_dim_)
    throw std::invalid_argument("SubspaceBasis: column length does not match ambient dimension");
}

SubspaceBasis SubspaceBasis::span_of(const Matrix& spanning, double rel) {
  return SubspaceBasis(static_cast<std::size_t>(spanning.rows()), orthonormal_range(spanning, rel));
}

Matrix SubspaceBasis::projector() const { return vectors_ * vectors_.adjoint(); }

double SubspaceBasis::max_residual(const Matrix& m) const {
  if (static_cast<std::size_t>(m.rows()) != ambient_dim_)
    throw std::invalid_argument("max_residual: ambient dimension mismatch");
  const Matrix r = m - vectors_ * (vectors_.adjoint() * m);
  double worst = 0.0;
  for (Eigen::Index c = 0; c < r.cols(); ++c) worst = std::max(worst, r.col(c).norm());
  return worst;
}

double subspace_distance(const SubspaceBasis& u, const SubspaceBasis& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("subspace_distance: ambient dimensions differ");
  const Matrix& a = u.vectors();
  const Matrix& b = v.vectors();
  const double ab = spectral_norm(a - b * (b.adjoint() * a));
  const double ba = spectral_norm(b - a * (a.adjoint() * b));
  return std::clamp(std::max(ab, ba), 0.0, 1.0);
}

BlockOperator::BlockOperator(std::vector<std::size_t> block_dims) : dims_(std::move(block_dims)) {}

std::size_t BlockOperator::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix& BlockOperator::block(std::size_t row, std::size_t col) {
  if (row >= dims_.size() || col >= dims_.size())
    throw std::out_of_range("BlockOperator: block index out of range");
  auto it = blocks_.find({row, col});
  if (it == blocks_.end()) {
    it = blocks_
             .emplace(Key{row, col}, Matrix::Zero(static_cast<Eigen::Index>(dims_[row]),
                                                  static_cast<Eigen::Index>(dims_[col])))
             .first;
  }
  return it->second;
}

const Matrix* BlockOperator::find(std::size_t row, std::size_t col) const {
  auto it = blocks_.find({row, col});
  return it == blocks_.end() ? nullptr : &it->second;
}

BlockOperator BlockOperator::adjoint() const {
  BlockOperator out(dims_);
  for (const auto& [key, m] : blocks_) out.blocks_.emplace(Key{key.second, key.first}, m.adjoint());
  return out;
}

BlockOperator BlockOperator::operator*(const BlockOperator& rhs) const {
  if (dims_ != rhs.dims_) throw std::invalid_argument("BlockOperator: layout mismatch in product");
  BlockOperator out(dims_);
  for (const auto& [lk, lm] : blocks_) {
    auto it = rhs.blocks_.lower_bound({lk.second, 0});
    for (; it != rhs.blocks_.end() && it->first.first == lk.second; ++it)
      out.block(lk.first, it->first.second).noalias() += lm * it->second;
  }
  return out;
}

BlockOperator& BlockOperator::operator+=(const BlockOperator& rhs) {
  if (dims_ != rhs.dims_) throw std::invalid_argument("BlockOperator: layout mismatch in sum");
  for (const auto& [key, m] : rhs.blocks_) block(key.first, key.second) += m;
  return *this;
}

BlockOperator& BlockOperator::operator*=(Complex s) {
  for (auto& [key, m] : blocks_) m *= s;
  return *this;
}

double BlockOperator::norm() const {
  double sq = 0.0;
  for (const auto& [key, m] : blocks_) sq += m.squaredNorm();
  return std::sqrt(sq);
}

Matrix BlockOperator::to_dense() const {
  std::vector<Eigen::Index> offset(dims_.size() + 1, 0);
  for (std::size_t b = 0; b < dims_.size(); ++b)
    offset[b + 1] = offset[b] + static_cast<Eigen::Index>(dims_[b]);
  Matrix out = Matrix::Zero(offset.back(), offset.back());
  for (const auto& [key, m] : blocks_)
    out.block(offset[key.first], offset[key.second], m.rows(), m.cols()) = m;
  return out;
}

BlockOperator BlockOperator::from_dense(const Matrix& m, std::vector<std::size_t> block_dims) {
  BlockOperator out(std::move(block_dims));
  if (static_cast<std::size_t>(m.rows()) != out.total_dim() || m.rows() != m.cols())
    throw std::invalid_argument("BlockOperator::from_dense: size does not match layout");
  Eigen::Index r0 = 0;
  for (std::size_t r = 0; r < out.dims_.size(); ++r) {
    const auto dr = static_cast<Eigen::Index>(out.dims_[r]);
    Eigen::Index c0 = 0;
    for (std::size_t c = 0; c < out.dims_.size(); ++c) {
      const auto dc = static_cast<Eigen::Index>(out.dims_[c]);
      auto sub = m.block(r0, c0, dr, dc);
      if (sub.norm() > 0.0) out.block(r, c) = sub;
      c0 += dc;
    }
    r0 += dr;
  }
  return out;
}

}  // namespace gaussideal
