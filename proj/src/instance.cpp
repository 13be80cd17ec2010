#include "kempe/instance.hpp"

#include <algorithm>

namespace kempe {

std::string Names::vertex(VertexId v) const {
  if (v.value < vertices.size()) return vertices[v.value];
  return "#" + std::to_string(v.value);
}

std::string Names::edge(EdgeId e) const {
  if (e.value < edges.size()) return edges[e.value];
  return "#" + std::to_string(e.value);
}

std::optional<VertexId> Names::find_vertex(const std::string& name) const {
  const auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end()) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - vertices.begin())};
}

std::optional<EdgeId> Names::find_edge(const std::string& name) const {
  const auto it = std::find(edges.begin(), edges.end(), name);
  if (it == edges.end()) return std::nullopt;
  return EdgeId{static_cast<std::uint32_t>(it - edges.begin())};
}

}  // namespace kempe
