#include "gaussideal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gaussideal {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges) {
  for (auto& v : vertices) add_vertex(std::move(v));
  for (auto& e : edges) add_edge(std::move(e.name), e.source, e.target);
}

VertexId Graph::add_vertex(std::string name) {
  if (find_vertex(name)) throw std::invalid_argument("duplicate vertex '" + name + "'");
  vertices_.push_back(std::move(name));
  return vertices_.size() - 1;
}

EdgeId Graph::add_edge(std::string name, VertexId source, VertexId target) {
  if (source >= vertices_.size() || target >= vertices_.size())
    throw std::invalid_argument("edge '" + name + "' references a vertex outside the graph");
  if (std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.name == name; }))
    throw std::invalid_argument("duplicate edge '" + name + "'");
  edges_.push_back({std::move(name), source, target});
  return edges_.size() - 1;
}

EdgeId Graph::add_edge(const std::string& name, const std::string& source, const std::string& target) {
  auto s = find_vertex(source);
  auto t = find_vertex(target);
  if (!s) throw std::invalid_argument("edge '" + name + "': unknown source vertex '" + source + "'");
  if (!t) throw std::invalid_argument("edge '" + name + "': unknown target vertex '" + target + "'");
  return add_edge(name, *s, *t);
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

bool Graph::connected() const {
  if (vertices_.empty()) return true;
  std::vector<VertexId> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto root = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges_) parent[root(e.source)] = root(e.target);
  const VertexId r = root(0);
  for (VertexId v = 1; v < vertices_.size(); ++v)
    if (root(v) != r) return false;
  return true;
}

bool Graph::iota_injective() const {
  std::vector<bool> touched(vertices_.size(), false);
  for (const auto& e : edges_) touched[e.source] = touched[e.target] = true;
  return std::all_of(touched.begin(), touched.end(), [](bool b) { return b; });
}

namespace graphs {

Graph single_edge() {
  Graph g;
  g.add_vertex("x");
  g.add_vertex("y");
  g.add_edge("e", "x", "y");
  return g;
}

Graph parallel_edges() {
  Graph g;
  g.add_vertex("x");
  g.add_vertex("y");
  g.add_edge("e1", "x", "y");
  g.add_edge("e2", "x", "y");
  return g;
}

Graph triangle() {
  Graph g;
  g.add_vertex("x");
  g.add_vertex("y");
  g.add_vertex("z");
  g.add_edge("e1", "x", "y");
  g.add_edge("e2", "y", "z");
  g.add_edge("e3", "x", "z");
  return g;
}

Graph single_loop() {
  Graph g;
  g.add_vertex("v");
  g.add_edge("l", "v", "v");
  return g;
}

}  // namespace graphs
}  // namespace gaussideal
