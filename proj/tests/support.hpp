#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/solver.hpp"

namespace kt {

using namespace kempe;

inline EdgeId E(std::uint32_t i) { return EdgeId{i}; }
inline VertexId V(std::uint32_t i) { return VertexId{i}; }

// K_4 as produced by k4_seed: vertices 0..3, edge ids in lexicographic order.
inline const EdgeId e01{0}, e02{1}, e03{2}, e12{3}, e13{4}, e23{5};

// Vertices 0..n-1; the i-th pair becomes edge i.
inline Multigraph graph_of(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& ends) {
  std::vector<VertexId> vs;
  for (std::uint32_t i = 0; i < n; ++i) vs.push_back(V(i));
  std::vector<EdgeRecord> es;
  for (std::uint32_t i = 0; i < ends.size(); ++i) es.push_back({E(i), V(ends[i].first), V(ends[i].second)});
  return Multigraph(vs, es);
}

inline Multigraph k4_graph() {
  return graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline MatchingPartition k4_partition() { return {{{e01, e23}, {e02, e13}, {e03, e12}}}; }

inline Multigraph complete_host(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) ends.emplace_back(i, j);
  }
  return graph_of(n, ends);
}

// Random loopless multigraph; parallel edges allowed when `simple` is false.
inline Multigraph random_graph(std::mt19937_64& rng, std::uint32_t n, std::uint32_t m, bool simple) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  for (std::uint32_t tries = 0; ends.size() < m && tries < 50 * m; ++tries) {
    std::uint32_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (simple && std::find(ends.begin(), ends.end(), std::pair{a, b}) != ends.end()) continue;
    ends.emplace_back(a, b);
  }
  return graph_of(n, ends);
}

// Bags compared as a set of sets.
inline std::vector<EdgeSet> sorted_bags(std::vector<EdgeSet> bags) {
  for (auto& b : bags) b = normalized(std::move(b));
  std::sort(bags.begin(), bags.end());
  return bags;
}

}  // namespace kt
