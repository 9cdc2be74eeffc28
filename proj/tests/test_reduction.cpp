#include <cmath>

#include "doctest.h"
#include "gaussideal/reduction.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace gaussideal;

namespace {

constexpr double kAlg = 1e-10;

LatticeSystem u1(const Graph& g, int bound) { return LatticeSystem::make(g, GroupId::U1, {bound}); }

std::vector<Matrix> dense_gauss(const LatticeSystem& s) {
  std::vector<Matrix> out;
  const auto offsets = s.truncation.offsets();
  const auto n = static_cast<Eigen::Index>(s.truncation.total_dim());
  for (std::size_t v = 0; v < s.graph.num_vertices(); ++v)
    for (std::size_t a = 0; a < lie_dim(s.group); ++a) {
      Matrix m = Matrix::Zero(n, n);
      for (std::size_t b = 0; b < s.truncation.blocks.size(); ++b) {
        const auto o = static_cast<Eigen::Index>(offsets[b]);
        const auto d = static_cast<Eigen::Index>(s.truncation.blocks[b].dim());
        m.block(o, o, d, d) = gauss_generator_block(s.graph, s.truncation.blocks[b], {v, {a}});
      }
      out.push_back(m);
    }
  return out;
}

}  // namespace

TEST_CASE("invariant projector examples") {
  const auto edge = graphs::single_edge();
  for (auto m : {ProjectorMethod::LieAlgebra, ProjectorMethod::Quadrature}) {
    CHECK(invariant_projector(edge, BlockLabel{GroupId::U1, {IrrepLabel{1}}}, m).norm() < kAlg);
    CHECK(std::abs(invariant_projector(edge, BlockLabel{GroupId::U1, {IrrepLabel{0}}}, m)(0, 0) - 1.0) < kAlg);
    const Matrix p = invariant_projector(graphs::single_loop(), BlockLabel{GroupId::SU2, {IrrepLabel{1}}}, m);
    // normalized character: chi = sum_m D_mm = (1/sqrt 2) (phi_00 + phi_11)
    Vector chi = Vector::Zero(4);
    chi(0) = chi(3) = 1.0 / std::sqrt(2.0);
    CHECK((p - chi * chi.adjoint()).norm() < kAlg);
  }
  CHECK_THROWS_AS(invariant_projector(graphs::single_loop(), BlockLabel{GroupId::SU2, {IrrepLabel{2}}},
                                      ProjectorMethod::Quadrature, IrrepLabel{1}),
                  BandError);
}

TEST_CASE("invariant dimension examples") {
  CHECK(invariant_basis(u1(graphs::triangle(), 1)).basis.dim() == 3);
  CHECK(invariant_basis(u1(graphs::single_edge(), 1)).basis.dim() == 1);
  CHECK(invariant_basis(LatticeSystem::make(graphs::single_loop(), GroupId::SU2, {1})).basis.dim() == 2);
}

TEST_CASE("U(1) invariant dimension equals the flux-balanced count") {
  const Graph graphs_[] = {graphs::single_edge(), graphs::parallel_edges(), graphs::triangle(), graphs::single_loop()};
  for (const auto& g : graphs_)
    for (int b = 0; b <= 2; ++b)
      for (auto m : {ProjectorMethod::LieAlgebra, ProjectorMethod::Quadrature})
        CHECK(invariant_basis(u1(g, b), m).basis.dim() == static_cast<std::size_t>(oracle::flux_balanced_count(g, b)));
  CHECK(oracle::flux_balanced_count(graphs::triangle(), 1) == 3);
}

TEST_CASE("projector methods agree on every block") {
  for (const auto& [name, s] : testsys::all()) {
    CAPTURE(name);
    for (const auto& block : s.truncation.blocks) {
      const Matrix lie = invariant_projector(s.graph, block, ProjectorMethod::LieAlgebra);
      const Matrix quad = invariant_projector(s.graph, block, ProjectorMethod::Quadrature);
      CHECK((lie - quad).norm() < 1e-8);
    }
  }
}

TEST_CASE("invariant vectors are fixed by the gauge group") {
  for (const auto& [name, s] : testsys::all()) {
    CAPTURE(name);
    const auto inv = invariant_basis(s);
    GaugeElement g;
    for (std::size_t v = 0; v < s.graph.num_vertices(); ++v) g.at_vertex.push_back(oracle::random_point(s.group));
    for (std::size_t b = 0; b < s.truncation.blocks.size(); ++b) {
      const Matrix& vb = inv.per_block[b];
      if (vb.cols() == 0) continue;
      CHECK((rho_block(s.graph, s.truncation.blocks[b], g) * vb - vb).norm() < kAlg);
    }
  }
}

TEST_CASE("commutant dimension examples against the dense oracle") {
  CHECK(commutant_basis(u1(graphs::single_edge(), 1)).dim() == 3);
  CHECK(commutant_basis(u1(graphs::parallel_edges(), 1)).dim() == 19);
  CHECK(commutant_basis(LatticeSystem::make(graphs::single_loop(), GroupId::SU2, {1})).dim() == 5);

  CHECK(oracle::commutant_dim(oracle::u1_dense_gauss(graphs::single_edge(), 1), 3) == 3);
  CHECK(oracle::commutant_dim(oracle::u1_dense_gauss(graphs::parallel_edges(), 1), 9) == 19);
  CHECK(oracle::commutant_dim(oracle::su2_loop_dense_gauss(1), 5) == 5);
  CHECK(oracle::commutant_dim(oracle::su2_loop_dense_gauss(2), 14) == 14);

  for (const auto& [name, s] : testsys::all()) {
    CAPTURE(name);
    const auto n = static_cast<Eigen::Index>(s.truncation.total_dim());
    if (n > 30) continue;
    CHECK(commutant_basis(s).dim() == static_cast<std::size_t>(oracle::commutant_dim(dense_gauss(s), n)));
  }
}

TEST_CASE("the library's dense generators match the independent SU(2) construction") {
  const auto s = LatticeSystem::make(graphs::single_loop(), GroupId::SU2, {2});
  const auto lib = dense_gauss(s);
  const auto ref = oracle::su2_loop_dense_gauss(2);
  REQUIRE(lib.size() == ref.size());
  for (std::size_t k = 0; k < lib.size(); ++k) CHECK((lib[k] - ref[k]).norm() < kAlg);
}

TEST_CASE("the commutant basis is orthonormal, equivariant and a *-algebra") {
  for (const auto& [name, s] : testsys::all()) {
    CAPTURE(name);
    const auto space = commutant_basis(s);
    const auto gens = dense_gauss(s);
    const std::size_t k = std::min<std::size_t>(space.dim(), 6);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t ii = (i * 7919) % space.dim();
      const auto a = space.element(ii);
      const Matrix ad = a.to_dense();
      CHECK(std::abs(ad.squaredNorm() - 1.0) < kAlg);
      for (const auto& g : gens) CHECK((ad * g - g * ad).norm() < kAlg);
      double res = 1.0;
      space.coordinates(a.adjoint(), &res);
      CHECK(res < kAlg);
      const auto b = space.element((ii * 31 + 5) % space.dim());
      space.coordinates(a * b, &res);
      CHECK(res < kAlg);
      const Vector c = space.coordinates(a);
      CHECK(std::abs(c(static_cast<Eigen::Index>(ii)) - 1.0) < kAlg);
      CHECK(std::abs(c.norm() - 1.0) < kAlg);
    }
  }
}

TEST_CASE("ker(pi) examples and dimension identity") {
  auto kernel_dim = [](const LatticeSystem& s) {
    const auto space = commutant_basis(s);
    return kernel_pi_basis(space, invariant_basis(s).basis).dim();
  };
  CHECK(kernel_dim(u1(graphs::single_edge(), 1)) == 2);
  CHECK(kernel_dim(u1(graphs::parallel_edges(), 1)) == 10);
  CHECK(kernel_dim(LatticeSystem::make(graphs::single_loop(), GroupId::SU2, {1})) == 1);

  for (const auto& [name, s] : testsys::all()) {
    CAPTURE(name);
    const auto space = commutant_basis(s);
    const auto inv = invariant_basis(s);
    const auto ker = kernel_pi_basis(space, inv.basis);
    const auto h = inv.basis.dim();
    CHECK(space.dim() == ker.dim() + h * h);
    CHECK(ker.ambient_dim() == space.dim());
  }
}

TEST_CASE("ker(pi) is a two-sided *-ideal that kills invariants on both sides") {
  for (const auto& [name, s] : testsys::all()) {
    CAPTURE(name);
    const auto space = commutant_basis(s);
    const auto inv = invariant_basis(s);
    const auto ker = kernel_pi_basis(space, inv.basis);
    if (ker.dim() == 0) continue;
    const Matrix p = inv.basis.projector();
    for (std::size_t t = 0; t < 4; ++t) {
      const Vector kc = ker.vectors().col(static_cast<Eigen::Index>((t * 13) % ker.dim()));
      const auto b = space.to_operator(kc);
      const Matrix bd = b.to_dense();
      CHECK((bd * p).norm() < kAlg);
      CHECK((p * bd).norm() < kAlg);
      const auto a = space.element((t * 17 + 3) % space.dim());
      CHECK(ker.max_residual(space.coordinates(a * b)) < kAlg);
      CHECK(ker.max_residual(space.coordinates(b * a)) < kAlg);
      CHECK(ker.max_residual(space.coordinates(b.adjoint())) < kAlg);
    }
  }
}

TEST_CASE("restriction map rank is h^2 and ambient mismatch is rejected") {
  const auto s = LatticeSystem::make(graphs::single_loop(), GroupId::SU2, {2});
  const auto space = commutant_basis(s);
  const auto inv = invariant_basis(s);
  const Matrix pi = restriction_map(space, inv.basis);
  CHECK(oracle::rank(pi) == static_cast<int>(inv.basis.dim() * inv.basis.dim()));
  CHECK_THROWS_AS(restriction_map(space, SubspaceBasis(3)), std::invalid_argument);
}
