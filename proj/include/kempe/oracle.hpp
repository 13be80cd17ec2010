#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "kempe/graph.hpp"
#include "kempe/solver.hpp"

namespace kempe {

struct OracleBudget {
  std::size_t max_edges = 12;
  std::uint64_t max_assignments = 50'000'000;
};

enum class OracleStatus { Found, Infeasible, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::Infeasible;
  /// Bag i holds the i-th edge of T (ascending id). Set iff Found.
  std::optional<BagSystem> bags;
  std::uint64_t explored = 0;
};

/// Exhaustive search for |T| connected, pairwise disjoint, pairwise incident
/// bags, one T-edge each. Edges other than T are tried in ascending id order
/// against every bag, then left unused. A partial assignment is pruned when
/// some bag's edges cannot all be joined to its T-edge through still
/// unassigned edges, or two bags can no longer share a vertex.
///
/// Returns BudgetExceeded when |E(H)| exceeds `max_edges` or the search
/// visits more than `max_assignments` states. Throws InvalidInput for an
/// empty T, edges of T outside H, or more than 64 vertices.
OracleResult oracle_solve(const Multigraph& h, const EdgeSet& t, const OracleBudget& budget = {});

}  // namespace kempe
