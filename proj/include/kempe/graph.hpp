#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kempe {

struct VertexId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

std::string to_string(VertexId v);
std::string to_string(EdgeId e);

/// Sorted, duplicate-free edge ids. Every function taking an EdgeSet
/// expects this form; use `normalized` on anything assembled by hand.
using EdgeSet = std::vector<EdgeId>;
using VertexSet = std::vector<VertexId>;

EdgeSet normalized(EdgeSet edges);
bool contains(const EdgeSet& set, EdgeId e);
bool contains(const VertexSet& set, VertexId v);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b);
bool intersects(const EdgeSet& a, const EdgeSet& b);

struct EdgeRecord {
  EdgeId id;
  VertexId u;
  VertexId v;

  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool incident_with(const EdgeRecord& o) const {
    return touches(o.u) || touches(o.v);
  }
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Loopless undirected multigraph. Edge ids are assigned by the caller and
/// never renumbered; derived graphs (contraction, deletion) keep the ids of
/// every surviving edge. Immutable once built.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws LoopEdge, DuplicateEdgeId, DuplicateVertexId or UnknownEndpoint.
  /// Edge ends are stored with u < v.
  Multigraph(std::span<const VertexId> vertices, std::span<const EdgeRecord> edges);

  const VertexSet& vertices() const { return vertices_; }
  std::span<const EdgeRecord> edges() const { return edges_; }
  EdgeSet edge_ids() const;

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;

  /// Throws UnknownEdgeId.
  const EdgeRecord& edge(EdgeId e) const;
  /// Edges at `v` in ascending id order. Throws UnknownVertex.
  const EdgeSet& incident_edges(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident_edges(v).size(); }
  std::size_t max_degree() const;

  bool is_simple() const { return !parallel_pair(); }
  /// Lexicographically least pair of parallel edges, if any.
  std::optional<std::pair<EdgeId, EdgeId>> parallel_pair() const;
  /// Least-id edge joining a and b.
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  /// An id strictly larger than every vertex id in the graph.
  VertexId fresh_vertex() const;
  EdgeId fresh_edge() const;

  Multigraph without_edges(const EdgeSet& removed) const;
  Multigraph without_vertex(VertexId v) const;
  Multigraph without_isolated_vertices() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_slot(VertexId v) const;

  VertexSet vertices_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::int32_t> vertex_slot_;
  std::vector<std::int32_t> edge_slot_;
  std::vector<EdgeSet> incidence_;
};

Multigraph build_graph(std::span<const VertexId> vertices, std::span<const EdgeRecord> edges);

/// Vertices covered by at least one edge of `edges`, ascending.
VertexSet covered_vertices(const Multigraph& h, const EdgeSet& edges);

/// L(H): nodes are the edge ids of H, adjacent iff the edges are distinct
/// and share an endpoint. Parallel edges give a single adjacency.
class LineGraph {
 public:
  explicit LineGraph(const Multigraph& h);

  const EdgeSet& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  /// Throws UnknownEdgeId.
  std::size_t index_of(EdgeId e) const;
  std::span<const std::size_t> neighbor_indices(std::size_t i) const { return adjacency_[i]; }
  EdgeSet neighbors(EdgeId e) const;
  bool adjacent(EdgeId a, EdgeId b) const;
  /// Number of unordered adjacent pairs.
  std::size_t adjacency_count() const;

 private:
  EdgeSet nodes_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

LineGraph line_graph(const Multigraph& h);

/// Maximal connected parts of F, ordered by their least edge id.
/// Throws UnknownEdgeId.
std::vector<EdgeSet> edge_components(const Multigraph& h, const EdgeSet& f);
bool is_connected_edge_set(const Multigraph& h, const EdgeSet& f);
/// Some edge of `a` shares an endpoint with some edge of `b`.
bool edge_sets_incident(const Multigraph& h, const EdgeSet& a, const EdgeSet& b);

struct Contraction {
  Multigraph graph;
  VertexId merged;
};

/// Merges every vertex covered by the connected edge set F into one fresh
/// vertex. The result has edge set E(H) \ F with ids and untouched ends kept.
/// Throws DisconnectedContractionSet (F empty or not connected),
/// WouldCreateLoop (an edge outside F joins two covered vertices),
/// UnknownEdgeId.
Contraction contract(const Multigraph& h, const EdgeSet& f);

}  // namespace kempe
