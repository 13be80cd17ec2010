#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// Display names, indexed by id value. Ids without a name (vertices created
/// by contraction) render as "#<id>".
struct Names {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;

  std::string vertex(VertexId v) const;
  std::string edge(EdgeId e) const;
  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;

  friend bool operator==(const Names&, const Names&) = default;
};

/// A colored graph with optional transversal, as read from or written to a
/// document. Ids are dense: vertex and edge ids run 0..n-1 in document order.
struct Instance {
  Multigraph graph;
  MatchingPartition partition;
  std::optional<Transversal> transversal;
  Names names;

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace kempe
