#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaussideal/gauge.hpp"
#include "gaussideal/linalg.hpp"
#include "gaussideal/reduction.hpp"

namespace gaussideal {

/// Tolerance for algebraic residuals (equivariance, membership in A^K, annihilation of H^K).
inline constexpr double kAlgebraTol = 1e-10;
/// Default tolerance for comparing the generated ideal with ker(pi).
inline constexpr double kDistanceTol = 1e-8;

/// A generator of A^K (or the ideal) that fails to lie in A^K.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One element of the generating set: the Haar average of rho(k) sigma(X)^n rho(k)^{-1}, where sigma is the
/// subrepresentation on the direct sum of `blocks` (indices into the truncation).
struct GeneratorSpec {
  std::vector<std::size_t> blocks;
  VertexGenerator generator;
  int power = 1;
};

/// Precomputed rho(k) over a product Haar scheme for a set of blocks; averages rho(k) A rho(k)^{-1}
/// for block-diagonal A.
class ConjugationAverager {
 public:
  ConjugationAverager(const LatticeSystem& system, std::vector<std::size_t> blocks,
                      std::optional<IrrepLabel> band = std::nullopt);

  const std::vector<std::size_t>& blocks() const { return blocks_; }
  const std::vector<IrrepLabel>& bands() const { return bands_; }

  /// `per_block[i]` acts on block blocks()[i]; returns the per-block averages.
  std::vector<Matrix> average(const std::vector<Matrix>& per_block) const;

 private:
  std::vector<std::size_t> blocks_;
  std::vector<IrrepLabel> bands_;
  std::vector<double> weights_;
  std::vector<std::vector<Matrix>> rho_;  // [node][block]
};

/// The generator of the ideal named by `spec`, extended by zero to the truncated space.
/// Throws BandError when `band` is given and too small for the conjugation integrand.
BlockOperator generator_op(const LatticeSystem& system, const GeneratorSpec& spec,
                           std::optional<IrrepLabel> band = std::nullopt);

/// Incremental two-sided ideal closure inside A^K.
///
/// Subspaces are kept per block pair: the block identities lie in A^K, so every two-sided ideal splits as
/// the direct sum of its (row block, column block) components. Closing iterates
/// W <- span(W u A^K W u W A^K) until no component grows. Inputs are coordinates in the A^K basis and
/// should be of unit scale; rank cuts are relative to max(1, largest singular value).
class IdealBuilder {
 public:
  explicit IdealBuilder(const EquivariantSpace& space);

  void add(const std::vector<Vector>& generator_coords);

  std::size_t dim() const;
  SubspaceBasis basis() const;
  /// Number of closure rounds run by the last add().
  std::size_t last_rounds() const { return last_rounds_; }

 private:
  using PairSet = std::map<std::size_t, Matrix>;  // pair index -> new orthonormal directions
  PairSet absorb(const std::map<std::size_t, std::vector<Vector>>& candidates);

  const EquivariantSpace& space_;
  std::map<std::size_t, Matrix> w_;  // pair index -> orthonormal coefficient columns
  std::map<std::size_t, std::vector<std::size_t>> by_col_;  // block -> pairs with that column block
  std::map<std::size_t, std::vector<std::size_t>> by_row_;  // block -> pairs with that row block
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
  std::size_t last_rounds_ = 0;
};

/// Smallest subspace of A^K containing the generators and stable under multiplication by A^K on both sides.
/// Generators must lie in A^K (relative residual <= kAlgebraTol), otherwise ConsistencyError.
SubspaceBasis ideal_closure(const std::vector<BlockOperator>& generators, const EquivariantSpace& algebra);

/// The reduced kinematical data of a system, shared by verification runs.
struct ReducedSystem {
  InvariantSubspace invariant;
  EquivariantSpace algebra;
  SubspaceBasis kernel;
  std::size_t rank_pi = 0;
};

ReducedSystem reduce(const LatticeSystem& system, ProjectorMethod method = ProjectorMethod::LieAlgebra);

struct VerifyOptions {
  int n_max = 1;
  double tol = kDistanceTol;
  ProjectorMethod method = ProjectorMethod::LieAlgebra;
  /// Uniform quadrature band for the generator averages; automatic per vertex when absent.
  std::optional<IrrepLabel> band;
};

struct NmaxRecord {
  int n = 0;
  std::size_t dim_ideal = 0;
  double containment_residual = 0.0;
  double distance = 0.0;
};

struct IdealReport {
  std::string truncation;
  std::size_t dim_AK = 0;
  std::size_t dim_HK = 0;
  std::size_t dim_ker_pi = 0;
  std::size_t rank_pi = 0;
  std::size_t num_subrepresentations = 0;
  std::size_t num_generators = 0;
  /// Largest quadrature band used at each vertex.
  std::vector<IrrepLabel> bands;
  std::vector<NmaxRecord> per_nmax;
  bool containment = false;
  bool equality = false;
  bool pass = false;
  double seconds = 0.0;
  /// The generated ideal at n_max and ker(pi), in A^K coordinates.
  SubspaceBasis ideal;
  SubspaceBasis kernel;
};

/// Runs the generator construction, closure and comparison with sigma ranging over `subreps`
/// (each a list of block indices; together a partition of the truncation).
IdealReport verify_with_subrepresentations(const LatticeSystem& system, const ReducedSystem& reduced,
                                           const std::vector<std::vector<std::size_t>>& subreps,
                                           const VerifyOptions& options);

/// sigma ranges over the Peter-Weyl blocks.
IdealReport verify_theorem(const LatticeSystem& system, const ReducedSystem& reduced, const VerifyOptions& options);
IdealReport verify_theorem(const LatticeSystem& system, const VerifyOptions& options);

std::string describe(const LatticeSystem& system);

}  // namespace gaussideal
