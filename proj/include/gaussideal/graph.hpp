#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gaussideal {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  std::string name;
  VertexId source;
  VertexId target;

  bool is_loop() const { return source == target; }
};

/// Finite oriented graph; loops and parallel edges are allowed.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId source, VertexId target);
  EdgeId add_edge(const std::string& name, const std::string& source, const std::string& target);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;

  /// Ignoring orientation.
  bool connected() const;

  /// Whether g -> (g_{s(e)}, g_{t(e)})_e is injective: every vertex meets some edge.
  bool iota_injective() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

namespace graphs {
/// x -> y
Graph single_edge();
/// Two edges x -> y.
Graph parallel_edges();
/// x -> y, y -> z, x -> z.
Graph triangle();
/// One vertex with one loop.
Graph single_loop();
}  // namespace graphs

}  // namespace gaussideal
