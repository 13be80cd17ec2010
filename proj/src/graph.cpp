#include "kempe/graph.hpp"

#include <algorithm>
#include <iterator>

#include "kempe/errors.hpp"
#include "union_find.hpp"

namespace kempe {

std::string to_string(VertexId v) { return "v" + std::to_string(v.value); }
std::string to_string(EdgeId e) { return "e" + std::to_string(e.value); }

EdgeSet normalized(EdgeSet edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

bool contains(const EdgeSet& set, EdgeId e) {
  return std::binary_search(set.begin(), set.end(), e);
}

bool contains(const VertexSet& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool intersects(const EdgeSet& a, const EdgeSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Multigraph

Multigraph::Multigraph(std::span<const VertexId> vertices, std::span<const EdgeRecord> edges) {
  vertices_.assign(vertices.begin(), vertices.end());
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw DuplicateVertexId("duplicate vertex id");
  }
  const std::size_t vcap = vertices_.empty() ? 0 : vertices_.back().value + 1;
  vertex_slot_.assign(vcap, -1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    vertex_slot_[vertices_[i].value] = static_cast<std::int32_t>(i);
  }

  edges_.reserve(edges.size());
  for (EdgeRecord e : edges) {
    if (e.u == e.v) {
      throw LoopEdge("edge " + to_string(e.id) + " is a loop at " + to_string(e.u));
    }
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw UnknownEndpoint("edge " + to_string(e.id) + " has an endpoint outside the vertex set");
    }
    if (e.v < e.u) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].id == edges_[i].id) {
      throw DuplicateEdgeId("duplicate edge id " + to_string(edges_[i].id));
    }
  }

  const std::size_t ecap = edges_.empty() ? 0 : edges_.back().id.value + 1;
  edge_slot_.assign(ecap, -1);
  incidence_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const EdgeRecord& e = edges_[i];
    edge_slot_[e.id.value] = static_cast<std::int32_t>(i);
    incidence_[vertex_slot(e.u)].push_back(e.id);
    incidence_[vertex_slot(e.v)].push_back(e.id);
  }
}

Multigraph build_graph(std::span<const VertexId> vertices, std::span<const EdgeRecord> edges) {
  return Multigraph(vertices, edges);
}

EdgeSet Multigraph::edge_ids() const {
  EdgeSet out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.id);
  return out;
}

bool Multigraph::has_vertex(VertexId v) const {
  return v.value < vertex_slot_.size() && vertex_slot_[v.value] >= 0;
}

bool Multigraph::has_edge(EdgeId e) const {
  return e.value < edge_slot_.size() && edge_slot_[e.value] >= 0;
}

std::size_t Multigraph::vertex_slot(VertexId v) const {
  if (!has_vertex(v)) throw UnknownVertex("unknown vertex " + to_string(v));
  return static_cast<std::size_t>(vertex_slot_[v.value]);
}

const EdgeRecord& Multigraph::edge(EdgeId e) const {
  if (!has_edge(e)) throw UnknownEdgeId("unknown edge " + to_string(e));
  return edges_[static_cast<std::size_t>(edge_slot_[e.value])];
}

const EdgeSet& Multigraph::incident_edges(VertexId v) const {
  return incidence_[vertex_slot(v)];
}

std::size_t Multigraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

std::optional<std::pair<EdgeId, EdgeId>> Multigraph::parallel_pair() const {
  std::optional<std::pair<EdgeId, EdgeId>> best;
  for (std::size_t s = 0; s < vertices_.size(); ++s) {
    const EdgeSet& inc = incidence_[s];
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const EdgeRecord& a = edge(inc[i]);
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const EdgeRecord& b = edge(inc[j]);
        if (a.u == b.u && a.v == b.v) {
          std::pair<EdgeId, EdgeId> p{a.id, b.id};
          if (!best || p < *best) best = p;
        }
      }
    }
  }
  return best;
}

std::optional<EdgeId> Multigraph::find_edge(VertexId a, VertexId b) const {
  for (EdgeId id : incident_edges(a)) {
    if (edge(id).other(a) == b) return id;
  }
  return std::nullopt;
}

VertexId Multigraph::fresh_vertex() const {
  return VertexId{static_cast<std::uint32_t>(vertex_slot_.size())};
}

EdgeId Multigraph::fresh_edge() const {
  return EdgeId{static_cast<std::uint32_t>(edge_slot_.size())};
}

Multigraph Multigraph::without_edges(const EdgeSet& removed) const {
  std::vector<EdgeRecord> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (!contains(removed, e.id)) kept.push_back(e);
  }
  return Multigraph(vertices_, kept);
}

Multigraph Multigraph::without_vertex(VertexId v) const {
  vertex_slot(v);
  VertexSet vs;
  vs.reserve(vertices_.size());
  for (VertexId x : vertices_) {
    if (x != v) vs.push_back(x);
  }
  std::vector<EdgeRecord> kept;
  for (const auto& e : edges_) {
    if (!e.touches(v)) kept.push_back(e);
  }
  return Multigraph(vs, kept);
}

Multigraph Multigraph::without_isolated_vertices() const {
  VertexSet vs;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!incidence_[i].empty()) vs.push_back(vertices_[i]);
  }
  if (vs.size() == vertices_.size()) return *this;
  return Multigraph(vs, edges_);
}

VertexSet covered_vertices(const Multigraph& h, const EdgeSet& edges) {
  VertexSet out;
  out.reserve(2 * edges.size());
  for (EdgeId id : edges) {
    const EdgeRecord& e = h.edge(id);
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// LineGraph

LineGraph::LineGraph(const Multigraph& h) : nodes_(h.edge_ids()), adjacency_(nodes_.size()) {
  for (VertexId x : h.vertices()) {
    const EdgeSet& inc = h.incident_edges(x);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const std::size_t a = index_of(inc[i]);
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const std::size_t b = index_of(inc[j]);
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
      }
    }
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
}

LineGraph line_graph(const Multigraph& h) { return LineGraph(h); }

std::size_t LineGraph::index_of(EdgeId e) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), e);
  if (it == nodes_.end() || *it != e) {
    throw UnknownEdgeId("edge " + to_string(e) + " is not a node of the line graph");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

EdgeSet LineGraph::neighbors(EdgeId e) const {
  EdgeSet out;
  for (std::size_t j : adjacency_[index_of(e)]) out.push_back(nodes_[j]);
  return out;
}

bool LineGraph::adjacent(EdgeId a, EdgeId b) const {
  const auto& adj = adjacency_[index_of(a)];
  return std::binary_search(adj.begin(), adj.end(), index_of(b));
}

std::size_t LineGraph::adjacency_count() const {
  std::size_t twice = 0;
  for (const auto& adj : adjacency_) twice += adj.size();
  return twice / 2;
}

// ---------------------------------------------------------------------------
// Edge-set connectivity

namespace {

// Union-find over the vertex set of h, merging the ends of every edge in f.
detail::UnionFind join_ends(const Multigraph& h, const EdgeSet& f,
                            std::vector<std::size_t>& slot_of) {
  const VertexSet& vs = h.vertices();
  slot_of.assign(vs.empty() ? 0 : vs.back().value + 1, 0);
  for (std::size_t i = 0; i < vs.size(); ++i) slot_of[vs[i].value] = i;
  detail::UnionFind uf(vs.size());
  for (EdgeId id : f) {
    const EdgeRecord& e = h.edge(id);
    uf.unite(slot_of[e.u.value], slot_of[e.v.value]);
  }
  return uf;
}

}  // namespace

std::vector<EdgeSet> edge_components(const Multigraph& h, const EdgeSet& f) {
  std::vector<std::size_t> slot_of;
  detail::UnionFind uf = join_ends(h, f, slot_of);
  std::vector<std::size_t> root_part(h.num_vertices(), SIZE_MAX);
  std::vector<EdgeSet> parts;
  for (EdgeId id : f) {
    const std::size_t root = uf.find(slot_of[h.edge(id).u.value]);
    if (root_part[root] == SIZE_MAX) {
      root_part[root] = parts.size();
      parts.emplace_back();
    }
    parts[root_part[root]].push_back(id);
  }
  return parts;
}

bool is_connected_edge_set(const Multigraph& h, const EdgeSet& f) {
  return edge_components(h, f).size() == 1;
}

bool edge_sets_incident(const Multigraph& h, const EdgeSet& a, const EdgeSet& b) {
  const VertexSet ca = covered_vertices(h, a);
  const VertexSet cb = covered_vertices(h, b);
  auto i = ca.begin();
  auto j = cb.begin();
  while (i != ca.end() && j != cb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Contraction

Contraction contract(const Multigraph& h, const EdgeSet& f) {
  if (f.empty()) throw DisconnectedContractionSet("contraction set is empty");
  if (!is_connected_edge_set(h, f)) {
    throw DisconnectedContractionSet("contraction set is not a connected edge set");
  }
  const VertexSet covered = covered_vertices(h, f);
  const VertexId w = h.fresh_vertex();

  VertexSet vs;
  vs.reserve(h.num_vertices() - covered.size() + 1);
  for (VertexId x : h.vertices()) {
    if (!contains(covered, x)) vs.push_back(x);
  }
  vs.push_back(w);

  std::vector<EdgeRecord> es;
  es.reserve(h.num_edges() - f.size());
  for (const EdgeRecord& e : h.edges()) {
    if (contains(f, e.id)) continue;
    const bool cu = contains(covered, e.u);
    const bool cv = contains(covered, e.v);
    if (cu && cv) {
      throw WouldCreateLoop("edge " + to_string(e.id) +
                            " joins two vertices merged by the contraction");
    }
    es.push_back(EdgeRecord{e.id, cu ? w : e.u, cv ? w : e.v});
  }
  return Contraction{Multigraph(vs, es), w};
}

}  // namespace kempe
