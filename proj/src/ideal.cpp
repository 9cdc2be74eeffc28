#include "gaussideal/ideal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace gaussideal {

ConjugationAverager::ConjugationAverager(const LatticeSystem& system, std::vector<std::size_t> blocks,
                                         std::optional<IrrepLabel> band)
    : blocks_(std::move(blocks)) {
  std::vector<BlockLabel> labels;
  for (auto b : blocks_) {
    if (b >= system.truncation.blocks.size()) throw std::invalid_argument("block index outside the truncation");
    labels.push_back(system.truncation.blocks[b]);
  }
  const auto quad = GaugeQuadrature::for_blocks(system.graph, labels, Integrand::Conjugation, band);
  bands_ = quad.bands();
  quad.for_each([&](const GaugeElement& g, double w) {
    weights_.push_back(w);
    std::vector<Matrix> rho;
    rho.reserve(labels.size());
    for (const auto& l : labels) rho.push_back(rho_block(system.graph, l, g));
    rho_.push_back(std::move(rho));
  });
}

std::vector<Matrix> ConjugationAverager::average(const std::vector<Matrix>& per_block) const {
  if (per_block.size() != blocks_.size()) throw std::invalid_argument("ConjugationAverager: one operator per block");
  std::vector<Matrix> out;
  for (const auto& a : per_block) out.push_back(Matrix::Zero(a.rows(), a.cols()));
  for (std::size_t k = 0; k < weights_.size(); ++k)
    for (std::size_t i = 0; i < per_block.size(); ++i)
      out[i].noalias() += weights_[k] * (rho_[k][i] * per_block[i] * rho_[k][i].adjoint());
  return out;
}

namespace {

std::vector<Matrix> generator_powers(const LatticeSystem& system, const std::vector<std::size_t>& blocks,
                                     const VertexGenerator& gen, int power) {
  std::vector<Matrix> out;
  for (auto b : blocks) {
    const Matrix x = gauss_generator_block(system.graph, system.truncation.blocks[b], gen);
    Matrix p = x;
    for (int k = 1; k < power; ++k) p = p * x;
    out.push_back(std::move(p));
  }
  return out;
}

BlockOperator embed(const LatticeSystem& system, const std::vector<std::size_t>& blocks,
                    const std::vector<Matrix>& per_block) {
  BlockOperator op(system.truncation.block_dims());
  for (std::size_t i = 0; i < blocks.size(); ++i) op.block(blocks[i], blocks[i]) = per_block[i];
  return op;
}

double frobenius(const std::vector<Matrix>& ms) {
  double sq = 0.0;
  for (const auto& m : ms) sq += m.squaredNorm();
  return std::sqrt(sq);
}

}  // namespace

BlockOperator generator_op(const LatticeSystem& system, const GeneratorSpec& spec, std::optional<IrrepLabel> band) {
  if (spec.power < 1) throw std::invalid_argument("generator power must be >= 1");
  if (spec.blocks.empty()) throw std::invalid_argument("generator needs at least one block");
  if (spec.generator.vertex >= system.graph.num_vertices() || spec.generator.x.index >= lie_dim(system.group))
    throw std::invalid_argument("generator outside the gauge Lie algebra");
  ConjugationAverager avg(system, spec.blocks, band);
  return embed(system, spec.blocks, avg.average(generator_powers(system, spec.blocks, spec.generator, spec.power)));
}

IdealBuilder::IdealBuilder(const EquivariantSpace& space) : space_(space) {
  const auto& pairs = space_.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    by_col_[pairs[p].col_block].push_back(p);
    by_row_[pairs[p].row_block].push_back(p);
    pair_index_[{pairs[p].row_block, pairs[p].col_block}] = p;
  }
}

IdealBuilder::PairSet IdealBuilder::absorb(const std::map<std::size_t, std::vector<Vector>>& candidates) {
  PairSet fresh;
  for (const auto& [p, cols] : candidates) {
    const auto k = static_cast<Eigen::Index>(space_.pairs()[p].elements.size());
    Matrix c(k, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) c.col(static_cast<Eigen::Index>(i)) = cols[i];
    auto it = w_.find(p);
    Matrix combined = c;
    Matrix residual = c;
    if (it != w_.end()) {
      combined.resize(k, it->second.cols() + c.cols());
      combined << it->second, c;
      residual = c - it->second * (it->second.adjoint() * c);
    }
    if (residual.norm() == 0.0) continue;
    const double scale = std::max(1.0, spectral_norm(combined));
    Eigen::JacobiSVD<Matrix> svd(residual, Eigen::ComputeThinU);
    const Eigen::VectorXd& s = svd.singularValues();
    const auto r = static_cast<Eigen::Index>((s.array() > kRankThreshold * scale).count());
    if (r == 0) continue;
    Matrix added = svd.matrixU().leftCols(r);
    if (it != w_.end()) {
      // one re-orthogonalization pass against the existing directions
      added -= it->second * (it->second.adjoint() * added);
      added = Eigen::HouseholderQR<Matrix>(added).householderQ() * Matrix::Identity(k, r);
      Matrix grown(k, it->second.cols() + r);
      grown << it->second, added;
      it->second = std::move(grown);
    } else {
      w_.emplace(p, added);
    }
    fresh.emplace(p, std::move(added));
  }
  return fresh;
}

void IdealBuilder::add(const std::vector<Vector>& generator_coords) {
  std::map<std::size_t, std::vector<Vector>> candidates;
  for (const auto& g : generator_coords) {
    if (static_cast<std::size_t>(g.size()) != space_.dim()) throw std::invalid_argument("IdealBuilder: wrong coordinate length");
    for (std::size_t p = 0; p < space_.pairs().size(); ++p) {
      const auto& pb = space_.pairs()[p];
      const auto seg = g.segment(static_cast<Eigen::Index>(pb.first), static_cast<Eigen::Index>(pb.elements.size()));
      if (seg.norm() > 0.0) candidates[p].push_back(seg);
    }
  }
  PairSet fresh = absorb(candidates);
  last_rounds_ = 0;
  while (!fresh.empty()) {
    ++last_rounds_;
    candidates.clear();
    auto project = [&](std::size_t row, std::size_t col, const Matrix& prod) {
      auto it = pair_index_.find({row, col});
      if (it == pair_index_.end()) return;  // the product of equivariant maps is equivariant, hence zero here
      const auto& target = space_.pairs()[it->second];
      Vector c(static_cast<Eigen::Index>(target.elements.size()));
      for (std::size_t k = 0; k < target.elements.size(); ++k)
        c(static_cast<Eigen::Index>(k)) = target.elements[k].conjugate().cwiseProduct(prod).sum();
      candidates[it->second].push_back(std::move(c));
    };
    for (const auto& [p, dirs] : fresh) {
      const auto& pb = space_.pairs()[p];
      for (Eigen::Index c = 0; c < dirs.cols(); ++c) {
        Matrix w = Matrix::Zero(pb.elements.front().rows(), pb.elements.front().cols());
        for (std::size_t k = 0; k < pb.elements.size(); ++k) w += dirs(static_cast<Eigen::Index>(k), c) * pb.elements[k];
        // a w with a on (mu, row_block)
        if (auto it = by_col_.find(pb.row_block); it != by_col_.end())
          for (auto q : it->second)
            for (const auto& a : space_.pairs()[q].elements) project(space_.pairs()[q].row_block, pb.col_block, a * w);
        // w a with a on (col_block, nu)
        if (auto it = by_row_.find(pb.col_block); it != by_row_.end())
          for (auto q : it->second)
            for (const auto& a : space_.pairs()[q].elements) project(pb.row_block, space_.pairs()[q].col_block, w * a);
      }
    }
    fresh = absorb(candidates);
  }
}

std::size_t IdealBuilder::dim() const {
  std::size_t d = 0;
  for (const auto& [p, m] : w_) d += static_cast<std::size_t>(m.cols());
  return d;
}

SubspaceBasis IdealBuilder::basis() const {
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(space_.dim()), static_cast<Eigen::Index>(dim()));
  Eigen::Index col = 0;
  for (const auto& [p, m] : w_) {
    out.block(static_cast<Eigen::Index>(space_.pairs()[p].first), col, m.rows(), m.cols()) = m;
    col += m.cols();
  }
  return SubspaceBasis(space_.dim(), std::move(out));
}

SubspaceBasis ideal_closure(const std::vector<BlockOperator>& generators, const EquivariantSpace& algebra) {
  std::vector<Vector> coords;
  double largest = 0.0;
  for (const auto& g : generators) {
    double residual = 0.0;
    coords.push_back(algebra.coordinates(g, &residual));
    const double n = g.norm();
    if (residual > kAlgebraTol * std::max(1.0, n))
      throw ConsistencyError("ideal generator lies outside the equivariant algebra (residual " +
                             std::to_string(residual) + ")");
    largest = std::max(largest, n);
  }
  IdealBuilder builder(algebra);
  if (largest > 0.0) {
    for (auto& c : coords) c /= largest;
    builder.add(coords);
  }
  return builder.basis();
}

ReducedSystem reduce(const LatticeSystem& system, ProjectorMethod method) {
  ReducedSystem r;
  r.invariant = invariant_basis(system, method);
  r.algebra = commutant_basis(system);
  const Matrix pi = restriction_map(r.algebra, r.invariant.basis);
  if (pi.size() > 0) {
    Eigen::JacobiSVD<Matrix> svd(pi);
    r.rank_pi = numerical_rank(svd.singularValues());
  }
  r.kernel = kernel_pi_basis(r.algebra, r.invariant.basis);
  return r;
}

std::string describe(const LatticeSystem& system) {
  std::ostringstream os;
  os << to_string(system.group) << " on " << system.graph.num_vertices() << " vertices / " << system.graph.num_edges()
     << " edges, per-edge bound " << label_text(system.group, system.bound) << ", " << system.truncation.blocks.size()
     << " blocks, dim " << system.truncation.total_dim();
  return os.str();
}

IdealReport verify_with_subrepresentations(const LatticeSystem& system, const ReducedSystem& reduced,
                                           const std::vector<std::vector<std::size_t>>& subreps,
                                           const VerifyOptions& options) {
  if (options.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto start = std::chrono::steady_clock::now();

  IdealReport report;
  report.truncation = describe(system);
  report.dim_AK = reduced.algebra.dim();
  report.dim_HK = reduced.invariant.basis.dim();
  report.dim_ker_pi = reduced.kernel.dim();
  report.rank_pi = reduced.rank_pi;
  report.num_subrepresentations = subreps.size();
  report.bands.assign(system.graph.num_vertices(), IrrepLabel{0});
  report.kernel = reduced.kernel;

  std::vector<ConjugationAverager> averagers;
  for (const auto& s : subreps) {
    averagers.emplace_back(system, s, options.band);
    const auto& b = averagers.back().bands();
    for (std::size_t v = 0; v < b.size(); ++v) report.bands[v].value = std::max(report.bands[v].value, b[v].value);
  }

  // current powers sigma(X)^n per (subrepresentation, vertex generator)
  std::vector<VertexGenerator> gens;
  for (VertexId v = 0; v < system.graph.num_vertices(); ++v)
    for (std::size_t a = 0; a < lie_dim(system.group); ++a) gens.push_back({v, {a}});
  std::vector<std::vector<std::vector<Matrix>>> base(subreps.size()), power(subreps.size());
  for (std::size_t s = 0; s < subreps.size(); ++s)
    for (const auto& g : gens) {
      base[s].push_back(generator_powers(system, subreps[s], g, 1));
      power[s].push_back(base[s].back());
    }

  IdealBuilder builder(reduced.algebra);
  report.containment = true;
  for (int n = 1; n <= options.n_max; ++n) {
    std::vector<Vector> coords;
    for (std::size_t s = 0; s < subreps.size(); ++s) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        auto& pw = power[s][gi];
        if (n > 1)
          for (std::size_t i = 0; i < pw.size(); ++i) pw[i] = pw[i] * base[s][gi][i];
        const double raw = frobenius(pw);
        if (raw == 0.0) continue;
        const auto avg = averagers[s].average(pw);
        const double norm = frobenius(avg);
        if (norm <= kRankThreshold * raw) continue;
        double residual = 0.0;
        Vector c = reduced.algebra.coordinates(embed(system, subreps[s], avg), &residual);
        if (residual > kAlgebraTol * norm)
          throw ConsistencyError("averaged generator is not equivariant (relative residual " +
                                 std::to_string(residual / norm) + "); quadrature band too small?");
        coords.push_back(c / c.norm());
        ++report.num_generators;
      }
    }
    builder.add(coords);
    const SubspaceBasis ideal = builder.basis();
    NmaxRecord rec{n, ideal.dim(), ideal.dim() > 0 ? reduced.kernel.max_residual(ideal.vectors()) : 0.0,
                   subspace_distance(ideal, reduced.kernel)};
    report.containment = report.containment && rec.containment_residual <= options.tol;
    report.per_nmax.push_back(rec);
    if (n == options.n_max) report.ideal = ideal;
  }
  report.equality = report.per_nmax.back().distance <= options.tol;
  report.pass = report.containment && report.equality;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

IdealReport verify_theorem(const LatticeSystem& system, const ReducedSystem& reduced, const VerifyOptions& options) {
  std::vector<std::vector<std::size_t>> singletons;
  for (std::size_t b = 0; b < system.truncation.blocks.size(); ++b) singletons.push_back({b});
  return verify_with_subrepresentations(system, reduced, singletons, options);
}

IdealReport verify_theorem(const LatticeSystem& system, const VerifyOptions& options) {
  return verify_theorem(system, reduce(system, options.method), options);
}

}  // namespace gaussideal
