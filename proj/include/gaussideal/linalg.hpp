#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gaussideal {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Relative singular-value cut used for every rank decision in the library.
inline constexpr double kRankThreshold = 1e-10;

/// Number of singular values above `rel * max`. An all-zero spectrum has rank 0.
std::size_t numerical_rank(const Eigen::VectorXd& singular_values, double rel = kRankThreshold);

/// Orthonormal basis of the column span of `m`.
Matrix orthonormal_range(const Matrix& m, double rel = kRankThreshold);

/// Orthonormal basis of the image of a (numerically) orthogonal projector: eigenvectors of its
/// hermitian part with eigenvalue above 1/2.
Matrix projector_range(const Matrix& p);

/// Orthonormal basis of the null space of `m` (columns live in C^{m.cols()}).
Matrix null_space(const Matrix& m, double rel = kRankThreshold);

Matrix kron(const Matrix& a, const Matrix& b);

/// exp(a) for anti-hermitian `a`, through the eigendecomposition of the hermitian i*a.
Matrix expm_antihermitian(const Matrix& a);

double spectral_norm(const Matrix& m);

/// Orthonormal columns spanning a subspace of C^n.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0);
  /// Takes columns that are already orthonormal.
  SubspaceBasis(std::size_t ambient_dim, Matrix orthonormal_columns);

  static SubspaceBasis span_of(const Matrix& spanning, double rel = kRankThreshold);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return static_cast<std::size_t>(vectors_.cols()); }
  const Matrix& vectors() const { return vectors_; }
  Matrix projector() const;

  /// Largest norm of a column of `m` after removing its component in this subspace.
  double max_residual(const Matrix& m) const;

 private:
  std::size_t ambient_dim_;
  Matrix vectors_;
};

/// Spectral norm of P_U - P_V; the sine of the largest principal angle.
double subspace_distance(const SubspaceBasis& u, const SubspaceBasis& v);

/// Operator on a direct sum of blocks, stored as the nonzero dense blocks.
class BlockOperator {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  BlockOperator() = default;
  explicit BlockOperator(std::vector<std::size_t> block_dims);

  std::size_t num_blocks() const { return dims_.size(); }
  const std::vector<std::size_t>& block_dims() const { return dims_; }
  std::size_t total_dim() const;

  /// Mutable access; inserts a zero block when absent.
  Matrix& block(std::size_t row, std::size_t col);
  const Matrix* find(std::size_t row, std::size_t col) const;
  const std::map<Key, Matrix>& blocks() const { return blocks_; }

  BlockOperator adjoint() const;
  BlockOperator operator*(const BlockOperator& rhs) const;
  BlockOperator& operator+=(const BlockOperator& rhs);
  BlockOperator& operator*=(Complex s);
  double norm() const;
  Matrix to_dense() const;
  static BlockOperator from_dense(const Matrix& m, std::vector<std::size_t> block_dims);

 private:
  std::vector<std::size_t> dims_;
  std::map<Key, Matrix> blocks_;
};

}  // namespace gaussideal
