#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Partition of E(H) into matchings; class i is `classes[i]`.
struct MatchingPartition {
  std::vector<EdgeSet> classes;

  std::size_t k() const { return classes.size(); }
  friend bool operator==(const MatchingPartition&, const MatchingPartition&) = default;
};

struct Transversal {
  EdgeSet edges;
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

struct Violation {
  std::string what;
  std::vector<std::size_t> classes;
  EdgeSet edges;
};

struct Verdict {
  std::vector<Violation> violations;

  bool accepted() const { return violations.empty(); }
  /// One line per violation.
  std::string describe() const;
};

/// Accepts iff the classes are nonempty, pairwise disjoint, cover E(H)
/// exactly, and each is a matching.
Verdict verify_matching_partition(const Multigraph& h, const MatchingPartition& partition);

/// Accepts iff A ∪ B is a connected edge set for every pair of classes.
/// Reports only the first failing pair (lexicographic).
Verdict verify_kempe(const Multigraph& h, const MatchingPartition& partition);

struct TransversalVerdict : Verdict {
  /// (class index, edge) for every class hit exactly once.
  std::vector<std::pair<std::size_t, EdgeId>> assignment;
};

TransversalVerdict verify_transversal(const MatchingPartition& partition, const EdgeSet& t);

/// Class index of every edge, indexed by edge id value; SIZE_MAX when absent.
std::vector<std::size_t> class_lookup(const MatchingPartition& partition);

/// End vertices of the pair subgraph H(A,B): vertices covered by exactly one
/// edge of A ∪ B.
VertexSet pair_ends(const Multigraph& h, const MatchingPartition& partition, std::size_t a,
                    std::size_t b);

/// Number of class pairs {A,B} whose subgraph H(A,B) ends at v, counted by
/// enumerating the pairs. Throws UnknownVertex.
std::size_t pair_end_count(const Multigraph& h, const MatchingPartition& partition, VertexId v);

/// Each class with `removed` taken out; classes may become empty.
MatchingPartition restrict_partition(const MatchingPartition& partition, const EdgeSet& removed);

/// Product of class sizes, saturating at UINT64_MAX.
std::uint64_t transversal_count(const MatchingPartition& partition);
/// Every transversal in lexicographic order of class choices; at most `limit`.
std::vector<EdgeSet> all_transversals(const MatchingPartition& partition, std::size_t limit);
EdgeSet random_transversal(const MatchingPartition& partition, std::mt19937_64& rng);

}  // namespace kempe
