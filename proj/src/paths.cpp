#include "kempe/paths.hpp"

#include <algorithm>

#include "flow_network.hpp"
#include "kempe/errors.hpp"

namespace kempe {

namespace {

using detail::FlowNetwork;

constexpr std::size_t kSource = 0;
constexpr std::size_t kSink = 1;
std::size_t in_node(std::size_t i) { return 2 + 2 * i; }
std::size_t out_node(std::size_t i) { return 3 + 2 * i; }

std::vector<bool> membership(const LineGraph& g, const EdgeSet& nodes) {
  std::vector<bool> mark(g.size(), false);
  for (EdgeId e : nodes) mark[g.index_of(e)] = true;
  return mark;
}

// Split network: in(i) -> out(i) carries the node capacity. T-nodes only
// drain into the sink, which truncates every flow path at its first T-node.
FlowNetwork split_network(const LineGraph& g, const std::vector<bool>& in_u,
                          const std::vector<bool>& in_t,
                          const std::vector<FlowNetwork::cap_t>& node_cap) {
  FlowNetwork net(2 + 2 * g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (in_u[i]) net.add_arc(kSource, in_node(i), FlowNetwork::kInfinite);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    net.add_arc(in_node(i), out_node(i), node_cap[i]);
    if (in_t[i]) {
      net.add_arc(out_node(i), kSink, FlowNetwork::kInfinite);
      continue;
    }
    for (std::size_t j : g.neighbor_indices(i)) {
      net.add_arc(out_node(i), in_node(j), FlowNetwork::kInfinite);
    }
  }
  return net;
}

std::vector<Path> decompose_node_flow(const FlowNetwork& net, const LineGraph& g,
                                      const std::vector<bool>& in_t) {
  std::vector<Path> paths;
  for (std::size_t a : net.out_arcs(kSource)) {
    if (a % 2 != 0 || net.flow(a) <= 0) continue;
    std::size_t i = (net.head(a) - 2) / 2;
    Path path{g.nodes()[i]};
    while (!in_t[i]) {
      std::size_t next = SIZE_MAX;
      for (std::size_t b : net.out_arcs(out_node(i))) {
        if (b % 2 == 0 && net.flow(b) > 0 && net.head(b) != kSink) {
          next = (net.head(b) - 2) / 2;
          break;
        }
      }
      if (next == SIZE_MAX) throw InternalAssertion("flow path stalls before reaching T");
      i = next;
      path.push_back(g.nodes()[i]);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

MengerResult disjoint_paths_or_separator(const LineGraph& g, const EdgeSet& from,
                                         const EdgeSet& to, std::size_t k) {
  if (from.empty() || to.empty()) throw InvalidInput("U and T must be nonempty");
  if (k == 0) throw InvalidInput("k must be positive");
  const auto in_u = membership(g, from);
  const auto in_t = membership(g, to);

  std::vector<FlowNetwork::cap_t> unit(g.size(), 1);
  FlowNetwork net = split_network(g, in_u, in_t, unit);
  const auto value = net.max_flow(kSource, kSink, static_cast<FlowNetwork::cap_t>(k));
  if (value >= static_cast<FlowNetwork::cap_t>(k)) {
    return PathSystem{Disjointness::Vertex, decompose_node_flow(net, g, in_t)};
  }

  // Every separator of size s costs s * big plus its terminal count, and the
  // terminal count never reaches big, so a minimum cut here is a minimum
  // separator with the fewest U ∪ T nodes.
  const auto big = static_cast<FlowNetwork::cap_t>(g.size() + 1);
  std::vector<FlowNetwork::cap_t> weighted(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) weighted[i] = big + ((in_u[i] || in_t[i]) ? 1 : 0);
  FlowNetwork cut_net = split_network(g, in_u, in_t, weighted);
  const auto cut_value = cut_net.max_flow(kSource, kSink);
  const auto reach = cut_net.residual_reachable(kSource);

  Separator sep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (reach[in_node(i)] && !reach[out_node(i)]) sep.nodes.push_back(g.nodes()[i]);
  }
  if (static_cast<FlowNetwork::cap_t>(sep.nodes.size()) != value ||
      cut_value / big != value) {
    throw InternalAssertion("separator size differs from the number of disjoint paths");
  }
  return sep;
}

VertexSet walk_vertices(const Multigraph& h, VertexId start, const Path& path) {
  VertexSet out{start};
  for (EdgeId e : path) {
    const EdgeRecord& rec = h.edge(e);
    if (!rec.touches(out.back())) throw InvalidInput("edge sequence is not a walk");
    out.push_back(rec.other(out.back()));
  }
  return out;
}

PathSystem edge_disjoint_paths(const Multigraph& h, VertexId a, VertexId b, std::size_t k) {
  if (a == b) throw InvalidInput("path ends must differ");
  if (!h.has_vertex(a) || !h.has_vertex(b)) throw UnknownVertex("path end is not in the graph");

  const VertexSet& vs = h.vertices();
  auto slot = [&](VertexId x) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
  };
  FlowNetwork net(vs.size());
  std::vector<std::size_t> arc_of(h.fresh_edge().value, SIZE_MAX);
  for (const EdgeRecord& e : h.edges()) arc_of[e.id.value] = net.add_arc(slot(e.u), slot(e.v), 1, 1);

  const auto value = net.max_flow(slot(a), slot(b), static_cast<FlowNetwork::cap_t>(k));
  if (value < static_cast<FlowNetwork::cap_t>(k)) {
    throw InsufficientConnectivity("only " + std::to_string(value) + " edge-disjoint paths between " +
                                   to_string(a) + " and " + to_string(b) + ", need " +
                                   std::to_string(k));
  }

  std::vector<bool> used(arc_of.size(), false);
  auto leaves = [&](EdgeId id, VertexId x) {
    const EdgeRecord& e = h.edge(id);
    const auto f = net.flow(arc_of[id.value]);
    return (e.u == x && f > 0) || (e.v == x && f < 0);
  };

  PathSystem system{Disjointness::Edge, {}};
  for (std::size_t n = 0; n < k; ++n) {
    Path path;
    VertexSet visited{a};
    VertexId cur = a;
    while (cur != b) {
      EdgeId step{};
      bool found = false;
      for (EdgeId id : h.incident_edges(cur)) {
        if (!used[id.value] && leaves(id, cur)) {
          step = id;
          found = true;
          break;
        }
      }
      if (!found) throw InternalAssertion("edge flow decomposition stalls");
      used[step.value] = true;
      cur = h.edge(step).other(cur);
      // Drop the closed detour if the walk revisits a vertex.
      auto seen = std::find(visited.begin(), visited.end(), cur);
      if (seen != visited.end()) {
        const auto keep = static_cast<std::size_t>(seen - visited.begin());
        visited.resize(keep + 1);
        path.resize(keep);
      } else {
        visited.push_back(cur);
        path.push_back(step);
      }
    }
    system.paths.push_back(std::move(path));
  }
  return system;
}

SideSplit split_sides(const Multigraph& h, const EdgeSet& s) {
  for (EdgeId e : s) h.edge(e);
  const auto parts = edge_components(h, set_difference(h.edge_ids(), s));
  if (parts.size() != 2) {
    throw NotTwoSides("removing the separator leaves " + std::to_string(parts.size()) +
                      " edge components");
  }
  SideSplit split{parts[0], parts[1], covered_vertices(h, parts[0]), covered_vertices(h, parts[1])};
  for (VertexId x : h.vertices()) {
    if (h.degree(x) > 0 && !contains(split.covered_c, x) && !contains(split.covered_d, x)) {
      throw NotTwoSides("vertex " + to_string(x) + " is covered by separator edges only");
    }
  }
  return split;
}

}  // namespace kempe
