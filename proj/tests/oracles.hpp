// Independent reference computations used by the tests. Nothing here calls into the library except
// for types and the group point constructors.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gaussideal/graph.hpp"
#include "gaussideal/group.hpp"
#include "gaussideal/linalg.hpp"

namespace oracle {

using gaussideal::Complex;
using gaussideal::GroupId;
using gaussideal::GroupPoint;
using gaussideal::Matrix;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline GroupPoint random_point(GroupId g) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  if (g == GroupId::U1) return GroupPoint::u1(angle(rng()));
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Quaterniond q(n(rng()), n(rng()), n(rng()), n(rng()));
  q.normalize();
  return GroupPoint::su2(q);
}

inline Matrix random_matrix(Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(n(rng()), n(rng()));
  return m;
}

/// Spin matrices J_x, J_y, J_z (axis 0, 1, 2) for spin twoj/2 in the basis m = j, ..., -j, from the
/// ladder operators J_+|m> = sqrt(j(j+1) - m(m+1)) |m+1>.
inline Matrix spin_matrix(int twoj, int axis) {
  const int d = twoj + 1;
  const double j = 0.5 * twoj;
  Matrix jp = Matrix::Zero(d, d);
  for (int k = 1; k < d; ++k) {
    const double m = j - k;  // column k has weight m; J_+ sends it to row k - 1
    jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Matrix jm = jp.adjoint();
  if (axis == 0) return 0.5 * (jp + jm);
  if (axis == 1) return Complex(0, -0.5) * (jp - jm);
  Matrix jz = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) jz(k, k) = j - k;
  return jz;
}

inline double factorial(int n) { return std::tgamma(n + 1.0); }

/// Wigner small-d d^j_{m'm}(beta), explicit sum formula; m', m in half-integer steps given as doubles.
inline double wigner_small_d(double j, double mp, double m, double beta) {
  const int jpm = static_cast<int>(std::lround(j + m)), jmm = static_cast<int>(std::lround(j - m));
  const int jpmp = static_cast<int>(std::lround(j + mp)), jmmp = static_cast<int>(std::lround(j - mp));
  const int dm = static_cast<int>(std::lround(mp - m));
  const double pre = std::sqrt(factorial(jpmp) * factorial(jmmp) * factorial(jpm) * factorial(jmm));
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  double sum = 0.0;
  for (int k = std::max(0, -dm); k <= std::min(jpm, jmmp); ++k) {
    const double den = factorial(jpm - k) * factorial(k) * factorial(jmmp - k) * factorial(dm + k);
    const double sign = ((dm + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::pow(c, 2 * j + m - mp - 2 * k) * std::pow(s, mp - m + 2 * k) / den;
  }
  return pre * sum;
}

/// D^j(alpha, beta, gamma) = exp(-i alpha J_z) exp(-i beta J_y) exp(-i gamma J_z), descending weights.
inline Matrix wigner_D(int twoj, double alpha, double beta, double gamma) {
  const double j = 0.5 * twoj;
  Matrix out(twoj + 1, twoj + 1);
  for (int r = 0; r <= twoj; ++r)
    for (int c = 0; c <= twoj; ++c) {
      const double mp = j - r, m = j - c;
      out(r, c) = std::exp(Complex(0, -mp * alpha)) * wigner_small_d(j, mp, m, beta) * std::exp(Complex(0, -m * gamma));
    }
  return out;
}

/// sum_{k=0}^{terms} a^k / k!
inline Matrix taylor_exp(const Matrix& a, int terms) {
  Matrix out = Matrix::Identity(a.rows(), a.cols());
  Matrix term = out;
  for (int k = 1; k <= terms; ++k) {
    term = term * a / static_cast<double>(k);
    out += term;
  }
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Rank with a relative singular value cut.
inline int rank(const Matrix& m, double rel = 1e-10) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++r;
  return r;
}

/// Dimension of { b : [b, G] = 0 for all G } by the dense D^2 x D^2 null space (row-major vec).
inline int commutant_dim(const std::vector<Matrix>& gens, Eigen::Index d) {
  if (gens.empty()) return static_cast<int>(d * d);
  const Matrix id = Matrix::Identity(d, d);
  Matrix stacked(static_cast<Eigen::Index>(gens.size()) * d * d, d * d);
  for (std::size_t k = 0; k < gens.size(); ++k)
    stacked.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
        kron(id, gens[k].transpose()) - kron(gens[k], id);
  return static_cast<int>(d * d) - rank(stacked);
}

/// Orthonormal (Frobenius) basis of the commutant of `gens` in M_d, from the dense null space.
inline std::vector<Matrix> commutant_basis_dense(const std::vector<Matrix>& gens, Eigen::Index d) {
  const Matrix id = Matrix::Identity(d, d);
  Matrix stacked(static_cast<Eigen::Index>(gens.size()) * d * d, d * d);
  for (std::size_t k = 0; k < gens.size(); ++k)
    stacked.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
        kron(id, gens[k].transpose()) - kron(gens[k], id);
  Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv(i) > 1e-10 * sv(0);
  std::vector<Matrix> out;
  for (Eigen::Index c = r; c < d * d; ++c) {
    Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) m(i, j) = svd.matrixV()(i * d + j, c);
    out.push_back(m);
  }
  return out;
}

/// Row-major vectorization.
inline Eigen::VectorXcd vec(const Matrix& m) {
  Eigen::VectorXcd v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

/// Orthogonal projection onto the span of an orthonormal family of matrices.
inline Matrix project(const std::vector<Matrix>& basis, const Matrix& m) {
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (const auto& b : basis) out += (b.adjoint() * m).trace() * b;
  return out;
}

/// Orthonormal columns spanning the input columns (relative cut).
inline Matrix orth(const Matrix& cols, double rel = 1e-10) {
  if (cols.cols() == 0) return cols;
  Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  const double cut = rel * std::max(1.0, s(0));
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) > cut;
  return svd.matrixU().leftCols(r);
}

/// Two-sided ideal of the algebra spanned by `algebra` generated by `gens`, by dense iteration
/// W <- span(W, A W, W A) on row-major vectorizations; each round multiplies only the directions added
/// by the previous one. Returns orthonormal columns in C^{d*d}.
inline Matrix dense_ideal(const std::vector<Matrix>& gens, const std::vector<Matrix>& algebra, Eigen::Index d) {
  Matrix c(d * d, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k) c.col(static_cast<Eigen::Index>(k)) = vec(gens[k]);
  Matrix w = orth(c);
  Matrix fresh = w;
  while (fresh.cols() > 0) {
    Matrix cand(d * d, fresh.cols() * 2 * static_cast<Eigen::Index>(algebra.size()));
    Eigen::Index col = 0;
    for (Eigen::Index j = 0; j < fresh.cols(); ++j) {
      Matrix wj(d, d);
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index k = 0; k < d; ++k) wj(i, k) = fresh(i * d + k, j);
      for (const auto& a : algebra) {
        cand.col(col++) = vec(a * wj);
        cand.col(col++) = vec(wj * a);
      }
    }
    const Matrix residual = cand - w * (w.adjoint() * cand);
    fresh = orth(residual, 1e-10 * std::max(1.0, cand.norm()) / std::max(1.0, residual.norm()));
    if (fresh.cols() > 0) fresh = orth(fresh - w * (w.adjoint() * fresh));
    Matrix next(d * d, w.cols() + fresh.cols());
    next << w, fresh;
    w = next;
  }
  return w;
}

/// Number of charge assignments with |n_e| <= bound and zero net flux at every vertex.
inline int flux_balanced_count(const gaussideal::Graph& graph, int bound) {
  const std::size_t ne = graph.num_edges();
  std::vector<int> n(ne, -bound);
  int count = 0;
  while (true) {
    std::vector<int> flux(graph.num_vertices(), 0);
    for (std::size_t e = 0; e < ne; ++e) {
      flux[graph.edge(e).target] += n[e];
      flux[graph.edge(e).source] -= n[e];
    }
    bool ok = true;
    for (int f : flux) ok = ok && f == 0;
    count += ok;
    std::size_t e = ne;
    while (e > 0 && ++n[e - 1] > bound) n[--e] = -bound;
    if (e == 0) break;
  }
  return count;
}

/// Dense U(1) Gauss generators on the full truncated space: diag(i * flux_v(block)), blocks in
/// odometer order with the first edge most significant.
inline std::vector<Matrix> u1_dense_gauss(const gaussideal::Graph& graph, int bound) {
  const std::size_t ne = graph.num_edges();
  std::vector<std::vector<int>> charges;
  std::vector<int> n(ne, -bound);
  while (true) {
    charges.push_back(n);
    std::size_t e = ne;
    while (e > 0 && ++n[e - 1] > bound) n[--e] = -bound;
    if (e == 0) break;
  }
  std::vector<Matrix> out;
  const auto d = static_cast<Eigen::Index>(charges.size());
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    Matrix g = Matrix::Zero(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
      int flux = 0;
      for (std::size_t e = 0; e < ne; ++e) {
        if (graph.edge(e).target == v) flux += charges[b][e];
        if (graph.edge(e).source == v) flux -= charges[b][e];
      }
      g(b, b) = Complex(0, flux);
    }
    out.push_back(g);
  }
  return out;
}

/// Dense SU(2) Gauss generators for one vertex with one loop, spins 0..twoJ/2: on each block
/// conj(-i J_a) (x) I + I (x) (-i J_a).
inline std::vector<Matrix> su2_loop_dense_gauss(int two_bound) {
  Eigen::Index d = 0;
  for (int t = 0; t <= two_bound; ++t) d += (t + 1) * (t + 1);
  std::vector<Matrix> out;
  for (int a = 0; a < 3; ++a) {
    Matrix g = Matrix::Zero(d, d);
    Eigen::Index off = 0;
    for (int t = 0; t <= two_bound; ++t) {
      const Matrix x = Complex(0, -1) * spin_matrix(t, a);
      const Matrix id = Matrix::Identity(t + 1, t + 1);
      const Eigen::Index bd = (t + 1) * (t + 1);
      g.block(off, off, bd, bd) = kron(x.conjugate(), id) + kron(id, x);
      off += bd;
    }
    out.push_back(g);
  }
  return out;
}

/// Central difference of f at 0 with step h.
inline Matrix central_difference(const std::function<Matrix(double)>& f, double h = 1e-4) {
  return (f(h) - f(-h)) / (2.0 * h);
}

}  // namespace oracle
