// Graphs with a pair of parallel edges e, f. Every other class is then a
// singleton incident with everything, which is peeled off recursively, or a
// pair {x a_i, y b_i} across the ends x, y of e; at most three such pairs
// exist and they chain cyclically.

#include <algorithm>
#include <numeric>

#include "kempe/errors.hpp"
#include "solver_internal.hpp"

namespace kempe::detail {

namespace {

struct CrossPair {
  EdgeId at_x;
  EdgeId at_y;
  VertexId a;  // far end of at_x
  VertexId b;  // far end of at_y
};

bool pairwise_incident(const Multigraph& h, const EdgeSet& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!h.edge(edges[i]).incident_with(h.edge(edges[j]))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<EdgeSet> Reducer::parallel(const Multigraph& h, const MatchingPartition& partition,
                                       const EdgeSet& t, std::size_t depth) {
  const auto pair = h.parallel_pair();
  require(pair.has_value(), "graph has parallel edges");
  const auto [e, f] = *pair;
  const auto lookup = class_lookup(partition);
  const std::size_t ce = lookup[e.value];
  const std::size_t cf = lookup[f.value];
  require(ce != cf && partition.classes[ce].size() == 1 && partition.classes[cf].size() == 1,
          "parallel edges form two singleton classes");
  const VertexId x = h.edge(e).u;
  const VertexId y = h.edge(e).v;

  for (std::size_t i = 0; i < partition.k(); ++i) {
    if (i == ce || i == cf || partition.classes[i].size() != 1) continue;
    const EdgeId g = partition.classes[i].front();
    for (const EdgeRecord& other : h.edges()) {
      require(other.id == g || other.incident_with(h.edge(g)),
              "a singleton class is incident with every other edge");
    }
    record(StepKind::ParallelEdge, h, partition, depth).peeled = g;
    MatchingPartition rest;
    for (std::size_t j = 0; j < partition.k(); ++j) {
      if (j != i) rest.classes.push_back(partition.classes[j]);
    }
    auto bags = run(h.without_edges({g}), rest, set_difference(t, {g}), depth + 1);
    bags.push_back({g});
    return bags;
  }

  record(StepKind::ParallelEdge, h, partition, depth);
  std::vector<CrossPair> pairs;
  for (std::size_t i = 0; i < partition.k(); ++i) {
    if (i == ce || i == cf) continue;
    const EdgeSet& cls = partition.classes[i];
    require(cls.size() == 2, "remaining classes have two edges");
    const EdgeRecord& p = h.edge(cls[0]);
    const EdgeRecord& q = h.edge(cls[1]);
    const bool p_at_x = p.touches(x) && !p.touches(y);
    const bool q_at_x = q.touches(x) && !q.touches(y);
    const bool p_at_y = p.touches(y) && !p.touches(x);
    const bool q_at_y = q.touches(y) && !q.touches(x);
    require((p_at_x && q_at_y) || (q_at_x && p_at_y), "a two-edge class crosses from x to y");
    const EdgeRecord& ex = p_at_x ? p : q;
    const EdgeRecord& ey = p_at_x ? q : p;
    pairs.push_back({ex.id, ey.id, ex.other(x), ey.other(y)});
  }
  require(pairs.size() <= 3, "at most three two-edge classes");

  if (pairwise_incident(h, t)) {
    std::vector<EdgeSet> bags;
    for (EdgeId r : t) bags.push_back({r});
    return bags;
  }
  const std::size_t ell = pairs.size();
  require(ell >= 2, "non-incident transversal needs two crossing classes");

  // Try both orientations of {x, y} and every order of the pairs until the
  // canonical configuration appears: b_1 = a_2 (and b_2 = a_3, b_3 = a_1
  // for three pairs) with T = {e, f, x a_1, y b_2, ..., y b_ell}.
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<CrossPair> oriented = pairs;
    if (flip) {
      for (auto& p : oriented) {
        std::swap(p.at_x, p.at_y);
        std::swap(p.a, p.b);
      }
    }
    std::vector<std::size_t> order(ell);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      auto at = [&](std::size_t i) -> const CrossPair& { return oriented[order[i]]; };
      bool chain = at(0).b == at(1).a;
      if (ell == 3) chain = chain && at(1).b == at(2).a && at(2).b == at(0).a;
      if (!chain || !contains(t, at(0).at_x)) continue;
      bool roots = true;
      for (std::size_t i = 1; i < ell; ++i) roots = roots && contains(t, at(i).at_y);
      if (!roots) continue;

      std::vector<EdgeSet> bags{{e}, {f}, normalized({at(0).at_x, at(1).at_x, at(0).at_y})};
      for (std::size_t i = 1; i < ell; ++i) bags.push_back({at(i).at_y});
      return bags;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  require(false, "parallel-edge configuration matches the classification");
  return {};
}

}  // namespace kempe::detail
