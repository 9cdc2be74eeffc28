#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "gaussideal/linalg.hpp"
#include "oracles.hpp"

using namespace gaussideal;

TEST_CASE("numerical rank uses a relative cut and zero has rank zero") {
  Eigen::VectorXd s(3);
  s << 2.0, 1e-9, 1e-12;
  CHECK(numerical_rank(s) == 2);
  CHECK(numerical_rank(Eigen::VectorXd::Zero(3)) == 0);
  CHECK(orthonormal_range(Matrix::Zero(3, 2)).cols() == 0);
}

TEST_CASE("null space and range are complementary") {
  const Matrix a = oracle::random_matrix(3, 5);
  const Matrix n = null_space(a);
  CHECK(n.cols() == 2);
  CHECK((a * n).norm() < 1e-12);
  CHECK((n.adjoint() * n - Matrix::Identity(2, 2)).norm() < 1e-12);
  CHECK(null_space(Matrix(0, 4)).cols() == 4);
}

TEST_CASE("projector range picks the eigenvalue-one space") {
  const Matrix q = orthonormal_range(oracle::random_matrix(6, 2));
  Matrix p = q * q.adjoint();
  p += 1e-14 * oracle::random_matrix(6, 6);
  const Matrix r = projector_range(p);
  CHECK(r.cols() == 2);
  CHECK((r * r.adjoint() - q * q.adjoint()).norm() < 1e-10);
  CHECK(projector_range(1e-17 * oracle::random_matrix(4, 4)).cols() == 0);
}

TEST_CASE("kron matches the oracle") {
  const Matrix a = oracle::random_matrix(2, 3), b = oracle::random_matrix(3, 2);
  CHECK((kron(a, b) - oracle::kron(a, b)).norm() < 1e-14);
}

TEST_CASE("expm_antihermitian agrees with Eigen's matrix exponential") {
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix m = oracle::random_matrix(4, 4);
    const Matrix a = 0.5 * (m - m.adjoint());
    const Matrix ref = a.exp();
    CHECK((expm_antihermitian(a) - ref).norm() < 1e-10);
  }
}

TEST_CASE("subspace distance examples") {
  Matrix x(2, 1), y(2, 1), diag(2, 1);
  x << 1, 0;
  y << 0, 1;
  diag << 1, 1;
  const auto ux = SubspaceBasis::span_of(x);
  CHECK(subspace_distance(ux, ux) == doctest::Approx(0.0));
  CHECK(subspace_distance(ux, SubspaceBasis::span_of(y)) == doctest::Approx(1.0));
  CHECK(subspace_distance(ux, SubspaceBasis::span_of(diag)) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
  CHECK(subspace_distance(SubspaceBasis(3), SubspaceBasis(3)) == 0.0);
  CHECK(subspace_distance(ux, SubspaceBasis(2)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(subspace_distance(ux, SubspaceBasis(3)), std::invalid_argument);
}

TEST_CASE("subspace distance is the norm of the projector difference") {
  const auto u = SubspaceBasis::span_of(oracle::random_matrix(6, 3));
  const auto v = SubspaceBasis::span_of(oracle::random_matrix(6, 3));
  CHECK(subspace_distance(u, v) == doctest::Approx(spectral_norm(u.projector() - v.projector())).epsilon(1e-10));
}

TEST_CASE("block operator round trip and products") {
  const std::vector<std::size_t> dims{1, 2, 3};
  const Matrix a = oracle::random_matrix(6, 6), b = oracle::random_matrix(6, 6);
  const auto ba = BlockOperator::from_dense(a, dims), bb = BlockOperator::from_dense(b, dims);
  CHECK((ba.to_dense() - a).norm() < 1e-14);
  CHECK(((ba * bb).to_dense() - a * b).norm() < 1e-12);
  CHECK((ba.adjoint().to_dense() - a.adjoint()).norm() < 1e-14);
  auto sum = ba;
  sum += bb;
  sum *= Complex(0, 2);
  CHECK((sum.to_dense() - Complex(0, 2) * (a + b)).norm() < 1e-12);
  CHECK(ba.norm() == doctest::Approx(a.norm()));
}
