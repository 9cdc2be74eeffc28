#include "gaussideal/gauge.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gaussideal {
namespace {

void check_block(const Graph& graph, const BlockLabel& block) {
  if (block.num_edges() != graph.num_edges()) throw std::invalid_argument("block and graph have different edge sets");
}

void check_gauge(const Graph& graph, const GaugeElement& g) {
  if (g.at_vertex.size() != graph.num_vertices())
    throw std::invalid_argument("gauge element and graph have different vertex sets");
}

Matrix identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return Matrix::Identity(k, k);
}

}  // namespace

GaugeElement GaugeElement::identity(const Graph& graph, GroupId group) {
  return {std::vector<GroupPoint>(graph.num_vertices(), GroupPoint::identity(group))};
}

GaugeElement GaugeElement::operator*(const GaugeElement& rhs) const {
  if (at_vertex.size() != rhs.at_vertex.size()) throw std::invalid_argument("gauge elements on different graphs");
  GaugeElement out;
  for (std::size_t v = 0; v < at_vertex.size(); ++v) out.at_vertex.push_back(at_vertex[v] * rhs.at_vertex[v]);
  return out;
}

GaugeElement GaugeElement::inverse() const {
  GaugeElement out;
  for (const auto& p : at_vertex) out.at_vertex.push_back(p.inverse());
  return out;
}

Connection gauge_act(const Graph& graph, const GaugeElement& g, const Connection& a) {
  check_gauge(graph, g);
  if (a.on_edge.size() != graph.num_edges()) throw std::invalid_argument("connection and graph have different edge sets");
  Connection out;
  out.on_edge.reserve(a.on_edge.size());
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    out.on_edge.push_back(g.at_vertex[edge.source] * a.on_edge[e] * g.at_vertex[edge.target].inverse());
  }
  return out;
}

GaugeElement exp_gauge(const Graph& graph, GroupId group, const VertexGenerator& gen, double t) {
  if (gen.vertex >= graph.num_vertices()) throw std::invalid_argument("generator vertex outside the graph");
  GaugeElement g = GaugeElement::identity(graph, group);
  g.at_vertex[gen.vertex] = exp_basis(group, gen.x, t);
  return g;
}

Matrix rho_block(const Graph& graph, const BlockLabel& block, const GaugeElement& g) {
  check_block(graph, block);
  check_gauge(graph, g);
  Matrix out = Matrix::Ones(1, 1);
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    const IrrepLabel l = block.labels[e];
    out = kron(out, kron(irrep_matrix(block.group, l, g.at_vertex[edge.source]).conjugate(),
                         irrep_matrix(block.group, l, g.at_vertex[edge.target])));
  }
  return out;
}

Matrix gauss_generator_block(const Graph& graph, const BlockLabel& block, const VertexGenerator& gen) {
  check_block(graph, block);
  if (gen.vertex >= graph.num_vertices()) throw std::invalid_argument("generator vertex outside the graph");
  const auto n = static_cast<Eigen::Index>(block.dim());
  Matrix out = Matrix::Zero(n, n);
  std::size_t before = 1;
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    const IrrepLabel l = block.labels[e];
    const std::size_t d = irrep_dim(block.group, l);
    const std::size_t after = block.dim() / (before * d * d);
    if (edge.source == gen.vertex || edge.target == gen.vertex) {
      const Matrix x = irrep_generator(block.group, l, gen.x);
      Matrix local = Matrix::Zero(x.rows() * x.rows(), x.rows() * x.rows());
      if (edge.source == gen.vertex) local += kron(x.conjugate(), identity(d));
      if (edge.target == gen.vertex) local += kron(identity(d), x);
      out += kron(kron(identity(before), local), identity(after));
    }
    before *= d * d;
  }
  return out;
}

std::vector<Matrix> gauss_generators_block(const Graph& graph, const BlockLabel& block) {
  std::vector<Matrix> out;
  for (VertexId v = 0; v < graph.num_vertices(); ++v)
    for (std::size_t a = 0; a < lie_dim(block.group); ++a) out.push_back(gauss_generator_block(graph, block, {v, {a}}));
  return out;
}

int vertex_weight(const Graph& graph, const BlockLabel& block, VertexId v) {
  check_block(graph, block);
  int w = 0;
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    const int size = std::abs(block.labels[e].value);
    if (edge.source == v) w += size;
    if (edge.target == v) w += size;
  }
  return w;
}

int u1_vertex_flux(const Graph& graph, const BlockLabel& block, VertexId v) {
  check_block(graph, block);
  if (block.group != GroupId::U1) throw std::invalid_argument("u1_vertex_flux: block is not a U(1) block");
  int q = 0;
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    if (edge.target == v) q += block.labels[e].value;
    if (edge.source == v) q -= block.labels[e].value;
  }
  return q;
}

std::vector<IrrepLabel> required_bands(const Graph& graph, const std::vector<BlockLabel>& blocks, Integrand what) {
  std::vector<IrrepLabel> bands(graph.num_vertices(), IrrepLabel{0});
  for (const auto& block : blocks) {
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      const int w = vertex_weight(graph, block, v);
      // A band-L scheme is exact on single matrix coefficients up to 2L.
      const int need = what == Integrand::Conjugation ? w : (w + 1) / 2;
      bands[v].value = std::max(bands[v].value, need);
    }
  }
  return bands;
}

GaugeQuadrature::GaugeQuadrature(const Graph& graph, GroupId group, const std::vector<IrrepLabel>& bands)
    : bands_(bands) {
  if (bands.size() != graph.num_vertices()) throw std::invalid_argument("GaugeQuadrature: one band per vertex required");
  for (auto b : bands) schemes_.push_back(haar_scheme(group, b));
}

GaugeQuadrature GaugeQuadrature::for_blocks(const Graph& graph, const std::vector<BlockLabel>& blocks, Integrand what,
                                            std::optional<IrrepLabel> uniform_band) {
  if (blocks.empty()) throw std::invalid_argument("GaugeQuadrature: no blocks");
  const GroupId group = blocks.front().group;
  auto bands = required_bands(graph, blocks, what);
  if (uniform_band) {
    IrrepLabel need{0};
    for (auto b : bands) need.value = std::max(need.value, b.value);
    if (uniform_band->value < need.value)
      throw BandError("quadrature band " + label_text(group, *uniform_band) + " too small; required band " +
                          label_text(group, need),
                      need);
    bands.assign(graph.num_vertices(), *uniform_band);
  }
  return GaugeQuadrature(graph, group, bands);
}

std::size_t GaugeQuadrature::size() const {
  std::size_t n = 1;
  for (const auto& s : schemes_) n *= s.nodes.size();
  return n;
}

Matrix average_rho(const Graph& graph, const BlockLabel& block, const GaugeQuadrature& quad) {
  const auto n = static_cast<Eigen::Index>(block.dim());
  Matrix sum = Matrix::Zero(n, n);
  quad.for_each([&](const GaugeElement& g, double w) { sum += w * rho_block(graph, block, g); });
  return sum;
}

Matrix average_conjugation(const Graph& graph, const BlockLabel& block, const Matrix& a, const GaugeQuadrature& quad) {
  if (static_cast<std::size_t>(a.rows()) != block.dim() || a.rows() != a.cols())
    throw std::invalid_argument("average_conjugation: operator does not act on the block");
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  quad.for_each([&](const GaugeElement& g, double w) {
    const Matrix r = rho_block(graph, block, g);
    sum += w * (r * a * r.adjoint());
  });
  return sum;
}

}  // namespace gaussideal
