#pragma once

#include <cstddef>
#include <vector>

#include "kempe/solver.hpp"

namespace kempe::detail {

// Recursive core shared by the public entry points. Inputs are assumed to
// have passed the verifiers; every deeper call sees strictly fewer edges.
class Reducer {
 public:
  explicit Reducer(ReductionTrace& trace) : trace_(trace) {}

  std::vector<EdgeSet> run(const Multigraph& h, const MatchingPartition& partition,
                           const EdgeSet& t, std::size_t depth);

  std::vector<EdgeSet> parallel(const Multigraph& h, const MatchingPartition& partition,
                                const EdgeSet& t, std::size_t depth);

 private:
  std::vector<EdgeSet> base(const Multigraph& h, const MatchingPartition& partition,
                            const EdgeSet& t, std::size_t depth);
  std::vector<EdgeSet> star(const Multigraph& h, const MatchingPartition& partition,
                            const EdgeSet& t, VertexId pivot, std::size_t depth);
  std::vector<EdgeSet> fallback(const Multigraph& h, const MatchingPartition& partition,
                                const EdgeSet& t, std::size_t depth);

  ReductionStep& record(StepKind kind, const Multigraph& h, const MatchingPartition& partition,
                        std::size_t depth);

  ReductionTrace& trace_;
};

// Bags for n prescribed edges of the complete graph `host` on n vertices.
// Throws InvalidInput when host or t do not fit.
std::vector<EdgeSet> complete_bags(const Multigraph& host, const EdgeSet& t);

void require(bool fact, const char* what);

}  // namespace kempe::detail
