#include "kempe/solver.hpp"

#include <algorithm>
#include <iterator>
#include <variant>

#include "kempe/errors.hpp"
#include "solver_internal.hpp"

namespace kempe {

const char* step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::Base: return "base";
    case StepKind::MengerSuccess: return "menger";
    case StepKind::SeparatorContraction: return "separator";
    case StepKind::ParallelEdge: return "parallel";
    case StepKind::CompleteFallback: return "complete";
  }
  return "unknown";
}

namespace detail {

void require(bool fact, const char* what) {
  if (!fact) throw InternalAssertion(what);
}

ReductionStep& Reducer::record(StepKind kind, const Multigraph& h,
                               const MatchingPartition& partition, std::size_t depth) {
  ReductionStep& step = trace_.steps.emplace_back();
  step.kind = kind;
  step.depth = depth;
  step.edge_count = h.num_edges();
  step.k = partition.k();
  return step;
}

std::vector<EdgeSet> Reducer::run(const Multigraph& input, const MatchingPartition& partition,
                                  const EdgeSet& t, std::size_t depth) {
  const Multigraph h = input.without_isolated_vertices();
  const std::size_t k = partition.k();
  if (k <= 2) return base(h, partition, t, depth);
  if (h.parallel_pair()) return parallel(h, partition, t, depth);

  std::optional<VertexId> pivot;
  for (VertexId x : h.vertices()) {
    require(h.degree(x) <= k, "every degree is at most k");
    if (!pivot && h.degree(x) == k) pivot = x;
  }
  if (pivot) return star(h, partition, t, *pivot, depth);
  return fallback(h, partition, t, depth);
}

// k <= 2. For k = 2 the two matchings form one path or cycle; cut its edge
// sequence into two runs with one transversal edge each.
std::vector<EdgeSet> Reducer::base(const Multigraph& h, const MatchingPartition& partition,
                                   const EdgeSet& t, std::size_t depth) {
  record(StepKind::Base, h, partition, depth);
  const std::size_t k = partition.k();
  require(t.size() == k, "transversal has one edge per class");
  if (k == 0) return {};
  if (k == 1) return {EdgeSet{t.front()}};

  std::optional<VertexId> start;
  for (VertexId x : h.vertices()) {
    if (h.degree(x) == 1) {
      start = x;
      break;
    }
  }
  const bool cycle = !start.has_value();
  if (cycle) start = h.vertices().front();

  std::vector<EdgeId> seq;
  std::vector<bool> used(h.fresh_edge().value, false);
  VertexId cur = *start;
  for (;;) {
    auto next = std::find_if(h.incident_edges(cur).begin(), h.incident_edges(cur).end(),
                             [&](EdgeId e) { return !used[e.value]; });
    if (next == h.incident_edges(cur).end()) break;
    used[next->value] = true;
    seq.push_back(*next);
    cur = h.edge(*next).other(cur);
  }
  require(seq.size() == h.num_edges(), "two classes form a single path or cycle");

  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (contains(t, seq[i])) at.push_back(i);
  }
  require(at.size() == 2, "both transversal edges lie on the path");
  const auto split = static_cast<std::ptrdiff_t>(at[1]);
  EdgeSet first;
  EdgeSet second(seq.begin() + split, seq.end());
  if (cycle) {
    const auto from = static_cast<std::ptrdiff_t>(at[0]);
    first.assign(seq.begin() + from, seq.begin() + split);
    second.insert(second.end(), seq.begin(), seq.begin() + from);
  } else {
    first.assign(seq.begin(), seq.begin() + split);
  }
  return {normalized(std::move(first)), normalized(std::move(second))};
}

std::vector<EdgeSet> Reducer::star(const Multigraph& h, const MatchingPartition& partition,
                                   const EdgeSet& t, VertexId pivot, std::size_t depth) {
  const std::size_t k = partition.k();
  const EdgeSet u = h.incident_edges(pivot);
  const LineGraph lg(h);
  MengerResult menger = disjoint_paths_or_separator(lg, u, t, k);

  if (auto* system = std::get_if<PathSystem>(&menger)) {
    ReductionStep& step = record(StepKind::MengerSuccess, h, partition, depth);
    step.pivot = pivot;
    step.star = u;
    step.paths = system->paths;
    std::vector<EdgeSet> bags;
    for (const Path& p : system->paths) bags.push_back(normalized(p));
    return bags;
  }

  const EdgeSet s = std::get<Separator>(menger).nodes;
  require(s.size() + 1 == k, "a minimum separator has exactly k-1 edges");

  const auto lookup = class_lookup(partition);
  std::vector<std::size_t> hits(k, 0);
  for (EdgeId e : s) ++hits[lookup[e.value]];
  require(std::count(hits.begin(), hits.end(), 1) + 1 == static_cast<std::ptrdiff_t>(k),
          "separator edges come from k-1 distinct classes");
  const auto free_class =
      static_cast<std::size_t>(std::find(hits.begin(), hits.end(), 0) - hits.begin());
  require(free_class < k, "exactly one class avoids the separator");

  SideSplit split;
  try {
    split = split_sides(h, s);
  } catch (const NotTwoSides& err) {
    throw InternalAssertion(std::string("separator leaves two sides: ") + err.what());
  }
  const bool c_first = intersects(split.side_c, u);
  require(c_first != intersects(split.side_d, u), "star edges outside S lie on one side");
  if (!c_first) {
    std::swap(split.side_c, split.side_d);
    std::swap(split.covered_c, split.covered_d);
  }
  require(!intersects(split.side_c, t), "the pivot side holds no transversal edge");
  require(intersects(split.side_d, t), "the far side holds a transversal edge");
  const EdgeSet& free_edges = partition.classes[free_class];
  require(intersects(free_edges, split.side_c) && intersects(free_edges, split.side_d),
          "the class avoiding S has an edge on each side");
  require(contains(split.covered_c, pivot), "the pivot lies on its own side");
  for (EdgeId e : s) {
    const EdgeRecord& rec = h.edge(e);
    const bool uc = contains(split.covered_c, rec.u);
    const bool vc = contains(split.covered_c, rec.v);
    const bool ud = contains(split.covered_d, rec.u);
    const bool vd = contains(split.covered_d, rec.v);
    require((uc && vd) || (vc && ud), "every separator edge joins the two sides");
  }

  // H': far side contracted; its k-1 edge-disjoint pivot paths route the
  // separator edges back to the pivot.
  const Contraction toward = contract(h, split.side_d);
  for (const EdgeSet& cls : restrict_partition(partition, split.side_d).classes) {
    require(!cls.empty(), "classes stay nonempty after contracting the far side");
  }
  PathSystem routes;
  try {
    routes = edge_disjoint_paths(toward.graph, pivot, toward.merged, k - 1);
  } catch (const InsufficientConnectivity& err) {
    throw InternalAssertion(std::string("k-1 edge-disjoint pivot paths exist: ") + err.what());
  }
  std::vector<Path> route_of(s.size());
  std::vector<bool> routed(s.size(), false);
  for (const Path& p : routes.paths) {
    const EdgeSet via = set_intersection(normalized(p), s);
    require(via.size() == 1, "each pivot path crosses exactly one separator edge");
    const auto idx = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), via[0]) - s.begin());
    require(!routed[idx], "pivot paths use distinct separator edges");
    const VertexSet walk = walk_vertices(toward.graph, pivot, p);
    require(walk.back() == toward.merged, "pivot paths end at the contracted side");
    routed[idx] = true;
    route_of[idx] = p;
  }

  // H'': pivot side contracted; recurse there.
  const Contraction away = contract(h, split.side_c);
  MatchingPartition reduced = restrict_partition(partition, split.side_c);
  for (const EdgeSet& cls : reduced.classes) {
    require(!cls.empty(), "classes stay nonempty after contracting the pivot side");
  }
  require(away.graph.num_edges() < h.num_edges(), "recursion shrinks the edge set");

  {
    ReductionStep& step = record(StepKind::SeparatorContraction, h, partition, depth);
    step.pivot = pivot;
    step.star = u;
    step.separator = s;
    step.free_class = free_class;
    step.side_c = split.side_c;
    step.side_d = split.side_d;
    step.contracted = toward.merged;
    step.paths = route_of;
  }

  std::vector<EdgeSet> bags = run(away.graph, reduced, t, depth + 1);
  for (EdgeSet& bag : bags) {
    EdgeSet lifted = bag;
    for (EdgeId e : set_intersection(bag, s)) {
      const auto idx = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), e) - s.begin());
      lifted.insert(lifted.end(), route_of[idx].begin(), route_of[idx].end());
    }
    bag = normalized(std::move(lifted));
  }
  return bags;
}

std::vector<EdgeSet> Reducer::fallback(const Multigraph& h, const MatchingPartition& partition,
                                       const EdgeSet& t, std::size_t depth) {
  FallbackReport report;
  try {
    report = assert_complete_fallback(h, partition);
  } catch (const InvalidInput& err) {
    throw InternalAssertion(err.what());
  }
  record(StepKind::CompleteFallback, h, partition, depth).fallback = report;
  return complete_bags(h, t);
}

}  // namespace detail

namespace {

void require_input(const Verdict& verdict, const char* what) {
  if (!verdict.accepted()) throw InvalidInput(std::string(what) + ":\n" + verdict.describe());
}

void check_preconditions(const Multigraph& h, const MatchingPartition& partition, const EdgeSet& t) {
  require_input(verify_matching_partition(h, partition), "not a partition into matchings");
  require_input(verify_kempe(h, partition), "not a Kempe coloring");
  require_input(verify_transversal(partition, t), "not a transversal");
}

}  // namespace

Solution solve(const Multigraph& h, const MatchingPartition& partition, const Transversal& t) {
  const EdgeSet roots = normalized(t.edges);
  check_preconditions(h, partition, roots);
  Solution solution;
  detail::Reducer reducer(solution.trace);
  solution.bags.bags = reducer.run(h, partition, roots, 0);
  const Verdict verdict = verify_solution(h, partition, Transversal{roots}, solution.bags);
  if (!verdict.accepted()) throw InternalAssertion("solution verifies:\n" + verdict.describe());
  return solution;
}

BagSystem solve_parallel(const Multigraph& h, const MatchingPartition& partition,
                         const Transversal& t) {
  const EdgeSet roots = normalized(t.edges);
  check_preconditions(h, partition, roots);
  if (h.is_simple()) throw InvalidInput("graph has no parallel edges");
  ReductionTrace trace;
  detail::Reducer reducer(trace);
  BagSystem bags{reducer.parallel(h.without_isolated_vertices(), partition, roots, 0)};
  const Verdict verdict = verify_solution(h, partition, Transversal{roots}, bags);
  if (!verdict.accepted()) throw InternalAssertion("solution verifies:\n" + verdict.describe());
  return bags;
}

namespace {

void check_bags(const Multigraph& h, const EdgeSet& t, const BagSystem& system, Verdict& verdict) {
  const auto& bags = system.bags;
  std::vector<std::size_t> owner(h.fresh_edge().value, SIZE_MAX);
  std::vector<EdgeSet> clean(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) {
    for (EdgeId e : bags[i]) {
      if (!h.has_edge(e)) {
        verdict.violations.push_back({"bag holds an unknown edge", {i}, {e}});
        continue;
      }
      if (owner[e.value] != SIZE_MAX && owner[e.value] != i) {
        verdict.violations.push_back({"bags are not disjoint", {owner[e.value], i}, {e}});
      }
      owner[e.value] = i;
      clean[i].push_back(e);
    }
    clean[i] = normalized(std::move(clean[i]));
    if (clean[i].empty()) {
      verdict.violations.push_back({"bag is empty", {i}, {}});
      continue;
    }
    if (!is_connected_edge_set(h, clean[i])) {
      verdict.violations.push_back({"bag is not connected", {i}, {}});
    }
    const EdgeSet roots = set_intersection(clean[i], t);
    if (roots.size() != 1) {
      verdict.violations.push_back({"bag does not hold exactly one transversal edge", {i}, roots});
    }
  }
  for (EdgeId e : t) {
    if (e.value >= owner.size() || owner[e.value] == SIZE_MAX) {
      verdict.violations.push_back({"transversal edge is in no bag", {}, {e}});
    }
  }
  std::vector<VertexSet> covered(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) covered[i] = covered_vertices(h, clean[i]);
  for (std::size_t i = 0; i < bags.size(); ++i) {
    for (std::size_t j = i + 1; j < bags.size(); ++j) {
      VertexSet common;
      std::set_intersection(covered[i].begin(), covered[i].end(), covered[j].begin(),
                            covered[j].end(), std::back_inserter(common));
      if (common.empty()) verdict.violations.push_back({"bags are not incident", {i, j}, {}});
    }
  }
}

void check_count(std::size_t want, std::size_t got, Verdict& verdict) {
  if (want != got) {
    verdict.violations.push_back(
        {"expected " + std::to_string(want) + " bags, got " + std::to_string(got), {}, {}});
  }
}

}  // namespace

Verdict verify_bags(const Multigraph& h, const EdgeSet& t, const BagSystem& bags) {
  Verdict verdict;
  const EdgeSet roots = normalized(t);
  check_count(roots.size(), bags.bags.size(), verdict);
  check_bags(h, roots, bags, verdict);
  return verdict;
}

Verdict verify_solution(const Multigraph& h, const MatchingPartition& partition,
                        const Transversal& t, const BagSystem& bags) {
  Verdict verdict;
  check_count(partition.k(), bags.bags.size(), verdict);
  check_bags(h, normalized(t.edges), bags, verdict);
  return verdict;
}

}  // namespace kempe
