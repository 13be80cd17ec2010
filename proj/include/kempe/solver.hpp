#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/paths.hpp"

namespace kempe {

/// Connected, pairwise disjoint, pairwise incident edge sets, each holding
/// exactly one transversal edge. Equivalently, the branching sets of a
/// complete minor of L(H) rooted at T.
struct BagSystem {
  std::vector<EdgeSet> bags;
  friend bool operator==(const BagSystem&, const BagSystem&) = default;
};

/// Diagnostics from the complete-graph fallback.
struct FallbackReport {
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t k = 0;
  std::size_t vertex_count = 0;
  /// d * (k - d) - Δ * (k - Δ) for every vertex degree d (ascending vertex id).
  std::vector<std::int64_t> end_surplus;
  /// (Δ + 1) * Δ * (k - Δ) - k * (k - 1); never positive on valid input.
  std::int64_t cubic_slack = 0;
  friend bool operator==(const FallbackReport&, const FallbackReport&) = default;
};

enum class StepKind { Base, MengerSuccess, SeparatorContraction, ParallelEdge, CompleteFallback };

const char* step_kind_name(StepKind kind);

/// One level of the recursion. Fields that do not apply to the step's kind
/// stay empty.
struct ReductionStep {
  StepKind kind = StepKind::Base;
  std::size_t depth = 0;
  std::size_t edge_count = 0;
  std::size_t k = 0;

  std::optional<VertexId> pivot;          // vertex of degree k
  EdgeSet star;                           // its incident edges (U)
  std::vector<Path> paths;                // Menger paths, or the lift paths P_e
  EdgeSet separator;                      // S
  std::optional<std::size_t> free_class;  // the only class disjoint from S
  EdgeSet side_c;                         // side holding the pivot
  EdgeSet side_d;                         // side holding the rest of T
  std::optional<VertexId> contracted;     // image of side_d in H'
  std::optional<EdgeId> peeled;           // singleton class removed by the parallel-edge case
  std::optional<FallbackReport> fallback;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;  // pre-order over the recursion
  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

struct Solution {
  BagSystem bags;
  ReductionTrace trace;
};

/// Builds k bags for a Kempe-colored H and transversal T. Throws InvalidInput
/// when a precondition verifier rejects, InternalAssertion when a structural
/// fact fails mid-recursion or the final bags do not verify.
Solution solve(const Multigraph& h, const MatchingPartition& partition, const Transversal& t);

/// Case of a pair of parallel edges. Same contract as `solve`; additionally
/// throws InvalidInput when H is simple.
BagSystem solve_parallel(const Multigraph& h, const MatchingPartition& partition,
                         const Transversal& t);

/// Bags traversed by an arbitrary set T of n edges of the simple complete
/// graph on n >= 3 vertices. Throws InvalidInput otherwise.
BagSystem solve_complete(const Multigraph& host, const EdgeSet& t);

/// Confirms the degree analysis that leaves only the complete graph when no
/// vertex has degree k: Δ = k - 1, |V| = Δ + 1, regular and complete.
/// Isolated vertices are ignored. Throws InvalidInput if some vertex has
/// degree >= k or H has parallel edges, InternalAssertion when a conclusion
/// fails.
FallbackReport assert_complete_fallback(const Multigraph& h, const MatchingPartition& partition);

/// Checks bag count k, disjointness, connectivity, pairwise incidence and
/// exactly one transversal edge per bag with every transversal edge used.
Verdict verify_solution(const Multigraph& h, const MatchingPartition& partition,
                        const Transversal& t, const BagSystem& bags);

/// `verify_solution` without a partition: |bags| must equal |t|.
Verdict verify_bags(const Multigraph& h, const EdgeSet& t, const BagSystem& bags);

}  // namespace kempe
