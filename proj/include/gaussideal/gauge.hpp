#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussideal/graph.hpp"
#include "gaussideal/group.hpp"
#include "gaussideal/peter_weyl.hpp"

namespace gaussideal {

/// A gauge transformation (g_x), one group element per vertex.
struct GaugeElement {
  std::vector<GroupPoint> at_vertex;

  static GaugeElement identity(const Graph& graph, GroupId group);
  GaugeElement operator*(const GaugeElement& rhs) const;
  GaugeElement inverse() const;
};

/// A lattice connection (a_e), one group element per edge.
struct Connection {
  std::vector<GroupPoint> on_edge;
};

/// Lie algebra element of the gauge group supported at one vertex.
struct VertexGenerator {
  VertexId vertex = 0;
  LieBasisIndex x;
};

/// (g . a)_e = g_{s(e)} a_e g_{t(e)}^{-1}
Connection gauge_act(const Graph& graph, const GaugeElement& g, const Connection& a);

/// exp(t X) placed at one vertex, identity elsewhere.
GaugeElement exp_gauge(const Graph& graph, GroupId group, const VertexGenerator& gen, double t);

/// rho(g) psi = psi(g^{-1} . a) on one block. Factors through iota: on edge e it is the regular action
/// with left argument g_{s(e)} and right argument g_{t(e)}.
Matrix rho_block(const Graph& graph, const BlockLabel& block, const GaugeElement& g);

/// d/dt rho_block(exp(t X_v)) at t = 0, assembled per incident edge end: a source end contributes
/// conj(dD(X)) on the row index, a target end dD(X) on the column index.
Matrix gauss_generator_block(const Graph& graph, const BlockLabel& block, const VertexGenerator& gen);

/// All Gauss generators of a block, vertex-major then Lie basis index.
std::vector<Matrix> gauss_generators_block(const Graph& graph, const BlockLabel& block);

/// Sum of the label sizes (|n| for U(1), 2j for SU(2)) over edge ends incident to v; a loop counts twice.
/// This bounds the irreps of G_v appearing in rho_block restricted to vertex v.
int vertex_weight(const Graph& graph, const BlockLabel& block, VertexId v);

/// U(1) only: net flux sum_{t(e)=v} n_e - sum_{s(e)=v} n_e.
int u1_vertex_flux(const Graph& graph, const BlockLabel& block, VertexId v);

/// Raised when a quadrature band is below what an integrand needs.
class BandError : public std::runtime_error {
 public:
  BandError(const std::string& what, IrrepLabel required) : std::runtime_error(what), required_(required) {}
  IrrepLabel required() const { return required_; }

 private:
  IrrepLabel required_;
};

/// What the product quadrature integrates over a block (or a direct sum of blocks).
enum class Integrand {
  /// rho(k): irreps of G_v up to the vertex weight.
  Representation,
  /// rho(k) A rho(k)^{-1}: irreps up to twice the vertex weight.
  Conjugation,
};

/// Minimal per-vertex bands making the product scheme exact for the integrand over the given blocks.
std::vector<IrrepLabel> required_bands(const Graph& graph, const std::vector<BlockLabel>& blocks, Integrand what);

/// Product Haar scheme on G^{vertices}, one scheme per vertex.
class GaugeQuadrature {
 public:
  GaugeQuadrature(const Graph& graph, GroupId group, const std::vector<IrrepLabel>& bands);

  /// Uses `bands` when given (a single uniform band) after checking it against the requirement,
  /// otherwise the minimal bands. Throws BandError when the given band is too small.
  static GaugeQuadrature for_blocks(const Graph& graph, const std::vector<BlockLabel>& blocks, Integrand what,
                                    std::optional<IrrepLabel> uniform_band = std::nullopt);

  std::size_t size() const;
  const std::vector<IrrepLabel>& bands() const { return bands_; }

  /// Calls f(gauge element, weight) for every product node, in a fixed order.
  template <class F>
  void for_each(F&& f) const {
    const std::size_t nv = schemes_.size();
    std::vector<std::size_t> digit(nv, 0);
    GaugeElement g;
    while (true) {
      g.at_vertex.clear();
      double w = 1.0;
      for (std::size_t v = 0; v < nv; ++v) {
        g.at_vertex.push_back(schemes_[v].nodes[digit[v]].point);
        w *= schemes_[v].nodes[digit[v]].weight;
      }
      f(static_cast<const GaugeElement&>(g), w);
      std::size_t v = nv;
      while (v > 0 && ++digit[v - 1] == schemes_[v - 1].nodes.size()) digit[--v] = 0;
      if (v == 0) break;
    }
  }

 private:
  std::vector<IrrepLabel> bands_;
  std::vector<HaarScheme> schemes_;
};

/// Integral of rho_block over the gauge group.
Matrix average_rho(const Graph& graph, const BlockLabel& block, const GaugeQuadrature& quad);

/// Integral of rho(k) a rho(k)^{-1} for an operator on one block.
Matrix average_conjugation(const Graph& graph, const BlockLabel& block, const Matrix& a, const GaugeQuadrature& quad);

}  // namespace gaussideal
