// Complete host graphs: any n prescribed edges of K_n, and the degree
// analysis that reduces the Kempe case without a degree-k vertex to K_k.

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "kempe/errors.hpp"
#include "solver_internal.hpp"
#include "union_find.hpp"

namespace kempe {

namespace detail {

namespace {

using Pair = std::pair<VertexId, VertexId>;
using PairSet = std::set<Pair>;

Pair edge_of(VertexId a, VertexId b) { return a < b ? Pair{a, b} : Pair{b, a}; }

PairSet star_of(VertexId v, const VertexSet& vertices) {
  PairSet out;
  for (VertexId u : vertices) {
    if (u != v) out.insert(edge_of(v, u));
  }
  return out;
}

VertexSet without(const VertexSet& vertices, VertexId v) {
  VertexSet out;
  for (VertexId u : vertices) {
    if (u != v) out.push_back(u);
  }
  return out;
}

std::vector<PairSet> complete_rec(const VertexSet& vertices, const PairSet& t);

std::vector<PairSet> leaf_case(const VertexSet& vertices, const PairSet& t, VertexId v,
                               VertexId x) {
  PairSet rest = t;
  rest.erase(edge_of(v, x));
  auto bags = complete_rec(without(vertices, v), rest);
  bags.push_back(star_of(v, vertices));
  return bags;
}

std::vector<PairSet> complete_rec(const VertexSet& vertices, const PairSet& t) {
  const std::size_t n = vertices.size();
  require(t.size() == n, "prescribed edge count equals vertex count");
  if (n == 3) {
    std::vector<PairSet> bags;
    for (const Pair& p : t) bags.push_back({p});
    return bags;
  }

  auto t_neighbors = [&](VertexId v) {
    VertexSet out;
    for (const auto& [a, b] : t) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  // Average degree in H[T] is 2.
  VertexId v{};
  VertexSet nbrs;
  bool found = false;
  for (VertexId u : vertices) {
    nbrs = t_neighbors(u);
    if (nbrs.size() <= 2) {
      v = u;
      found = true;
      break;
    }
  }
  require(found, "some vertex has at most two prescribed neighbors");

  if (nbrs.size() == 1) return leaf_case(vertices, t, v, nbrs[0]);

  if (nbrs.size() == 2) {
    const VertexId x = nbrs[0];
    const VertexId y = nbrs[1];
    PairSet rest = t;
    rest.erase(edge_of(v, x));
    rest.erase(edge_of(v, y));
    const bool spanning_star = std::all_of(rest.begin(), rest.end(), [&](const Pair& p) {
      return p.first == x || p.second == x;
    });
    if (spanning_star) {
      // The star at x spans H - v; its leaves other than y have degree 1.
      for (VertexId u : vertices) {
        const VertexSet un = t_neighbors(u);
        if (un.size() == 1) return leaf_case(vertices, t, u, un[0]);
      }
      require(false, "a spanning prescribed star has a leaf of degree one");
    }
    std::optional<VertexId> z;
    for (VertexId u : vertices) {
      if (u != v && u != x && !t.count(edge_of(x, u))) {
        z = u;
        break;
      }
    }
    require(z.has_value(), "x misses some vertex in the prescribed edges");
    const Pair xz = edge_of(x, *z);
    rest.insert(xz);
    auto bags = complete_rec(without(vertices, v), rest);
    auto holder = std::find_if(bags.begin(), bags.end(), [&](const PairSet& b) { return b.count(xz) > 0; });
    require(holder != bags.end(), "the substituted edge lies in a bag");
    holder->insert(edge_of(v, x));
    PairSet rest_of_star = star_of(v, vertices);
    rest_of_star.erase(edge_of(v, x));
    bags.push_back(std::move(rest_of_star));
    return bags;
  }

  // v has no prescribed neighbor.
  const Pair xy = *t.begin();
  PairSet rest = t;
  rest.erase(xy);
  auto bags = complete_rec(without(vertices, v), rest);
  auto holder = std::find_if(bags.begin(), bags.end(), [&](const PairSet& b) { return b.count(xy) > 0; });
  if (holder == bags.end()) {
    PairSet extra = star_of(v, vertices);
    extra.insert(xy);
    bags.push_back(std::move(extra));
    return bags;
  }

  PairSet& f = *holder;
  std::optional<Pair> wz;
  for (const Pair& p : f) {
    if (p != xy && rest.count(p)) {
      require(!wz.has_value(), "a bag holds one prescribed edge");
      wz = p;
    }
  }
  require(wz.has_value(), "the bag holding xy has its own prescribed edge");
  VertexId x = xy.first;
  VertexId y = xy.second;
  const VertexId w = (wz->first != x && wz->first != y) ? wz->first : wz->second;
  require(w != x && w != y, "the other prescribed edge leaves {x, y}");

  // Components of H[F] - xy, over the vertices covered by F.
  VertexSet covered;
  for (const auto& [a, b] : f) {
    covered.push_back(a);
    covered.push_back(b);
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  auto slot = [&](VertexId u) {
    return static_cast<std::size_t>(std::lower_bound(covered.begin(), covered.end(), u) - covered.begin());
  };
  UnionFind uf(covered.size());
  for (const auto& [a, b] : f) {
    if (Pair{a, b} != xy) uf.unite(slot(a), slot(b));
  }
  if (uf.find(slot(w)) != uf.find(slot(x))) std::swap(x, y);
  require(uf.find(slot(w)) == uf.find(slot(x)), "w shares a component with x or y");

  PairSet f_prime = f;
  f_prime.erase(xy);
  f_prime.insert(edge_of(v, w));
  f_prime.insert(edge_of(v, y));
  PairSet f_second = star_of(v, vertices);
  f_second.erase(edge_of(v, w));
  f_second.erase(edge_of(v, y));
  f_second.insert(xy);
  f = std::move(f_prime);
  bags.push_back(std::move(f_second));
  return bags;
}

}  // namespace

std::vector<EdgeSet> complete_bags(const Multigraph& host_in, const EdgeSet& t_in) {
  const Multigraph host = host_in.without_isolated_vertices();
  const EdgeSet t = normalized(t_in);
  const std::size_t n = host.num_vertices();
  if (n < 3) throw InvalidInput("complete host needs at least three vertices");
  if (!host.is_simple() || host.num_edges() != n * (n - 1) / 2) {
    throw InvalidInput("host is not a simple complete graph");
  }
  if (t.size() != n) throw InvalidInput("need exactly as many prescribed edges as vertices");

  PairSet pairs;
  for (EdgeId e : t) {
    if (!host.has_edge(e)) throw InvalidInput("prescribed edge " + to_string(e) + " is not in the host");
    pairs.insert(edge_of(host.edge(e).u, host.edge(e).v));
  }
  std::vector<EdgeSet> out;
  for (const PairSet& bag : complete_rec(host.vertices(), pairs)) {
    EdgeSet ids;
    for (const auto& [a, b] : bag) ids.push_back(*host.find_edge(a, b));
    out.push_back(normalized(std::move(ids)));
  }
  return out;
}

}  // namespace detail

BagSystem solve_complete(const Multigraph& host, const EdgeSet& t) {
  BagSystem bags{detail::complete_bags(host, t)};
  const Verdict verdict = verify_bags(host, normalized(t), bags);
  if (!verdict.accepted()) throw InternalAssertion("complete-graph bags verify:\n" + verdict.describe());
  return bags;
}

FallbackReport assert_complete_fallback(const Multigraph& input, const MatchingPartition& partition) {
  using detail::require;
  const Multigraph h = input.without_isolated_vertices();
  const auto k = static_cast<std::int64_t>(partition.k());
  if (!h.is_simple()) throw InvalidInput("fallback needs a simple graph");
  if (static_cast<std::int64_t>(h.max_degree()) >= k) {
    throw InvalidInput("fallback needs every degree below k");
  }

  FallbackReport report;
  report.k = partition.k();
  report.vertex_count = h.num_vertices();
  report.max_degree = h.max_degree();
  report.min_degree = report.max_degree;
  for (VertexId v : h.vertices()) report.min_degree = std::min(report.min_degree, h.degree(v));
  const auto delta_max = static_cast<std::int64_t>(report.max_degree);
  const auto delta_min = static_cast<std::int64_t>(report.min_degree);
  const auto n = static_cast<std::int64_t>(report.vertex_count);

  for (VertexId v : h.vertices()) {
    const auto d = static_cast<std::int64_t>(h.degree(v));
    report.end_surplus.push_back(d * (k - d) - delta_max * (k - delta_max));
  }
  report.cubic_slack = (delta_max + 1) * delta_max * (k - delta_max) - k * (k - 1);

  for (const EdgeRecord& e : h.edges()) {
    require(static_cast<std::int64_t>(h.degree(e.u) + h.degree(e.v)) >= k + 1,
            "d(x) + d(y) >= k + 1 on every edge");
  }
  require(delta_min >= k + 1 - delta_max, "min degree >= k + 1 - max degree");
  require(2 * delta_max >= k + 1, "max degree >= (k + 1) / 2");
  require(std::all_of(report.end_surplus.begin(), report.end_surplus.end(),
                      [](std::int64_t s) { return s >= 0; }),
          "every vertex is an end of at least Δ(k - Δ) pair subgraphs");
  require(n * delta_max * (k - delta_max) <= k * (k - 1), "|V| Δ (k - Δ) <= k (k - 1)");
  require(report.cubic_slack <= 0, "(Δ + 1) Δ (k - Δ) <= k (k - 1)");
  require(delta_max == k - 1, "max degree is k - 1");
  require(n == delta_max + 1, "|V| = max degree + 1");
  require(delta_min == delta_max, "graph is regular");
  require(h.num_edges() * 2 == static_cast<std::size_t>(n * (n - 1)), "graph is complete");
  return report;
}

}  // namespace kempe
