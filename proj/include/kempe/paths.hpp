#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// A path given by its node sequence. In the line graph the nodes are edges
/// of H; for edge-disjoint paths in H the sequence lists the traversed edges
/// in order, which is the same thing seen from L(H).
using Path = std::vector<EdgeId>;

enum class Disjointness { Vertex, Edge };

struct PathSystem {
  Disjointness mode = Disjointness::Vertex;
  std::vector<Path> paths;
};

/// Minimum-cardinality node set meeting every U,T-path.
struct Separator {
  EdgeSet nodes;
};

using MengerResult = std::variant<PathSystem, Separator>;

/// Either k vertex-disjoint U,T-paths in the line graph, each truncated at
/// its first T-node, or a minimum U,T-separator of size < k.
///
/// Paths come from a unit node-capacity flow (node splitting, breadth-first
/// augmentation, ties broken by ascending node id). Among the minimum
/// separators the one with fewest nodes in U ∪ T is returned, ties broken
/// towards U; it is read off the residual network of a second flow whose
/// node capacities carry that preference as a lower-order term.
///
/// Throws InvalidInput when U or T is empty or k is zero, UnknownEdgeId for
/// nodes outside the graph.
MengerResult disjoint_paths_or_separator(const LineGraph& g, const EdgeSet& from,
                                         const EdgeSet& to, std::size_t k);

/// k pairwise edge-disjoint a,b-paths in H as edge sequences starting at a.
/// Throws InsufficientConnectivity when fewer exist, InvalidInput for a == b,
/// UnknownVertex.
PathSystem edge_disjoint_paths(const Multigraph& h, VertexId a, VertexId b, std::size_t k);

/// Vertex sequence of an edge sequence walked from `start`.
VertexSet walk_vertices(const Multigraph& h, VertexId start, const Path& path);

struct SideSplit {
  EdgeSet side_c;
  EdgeSet side_d;
  VertexSet covered_c;
  VertexSet covered_d;
};

/// Splits E(H) \ S into its two connected edge components; side_c holds the
/// component with the smaller least edge id. Throws NotTwoSides when there
/// are not exactly two components or some non-isolated vertex is covered by
/// S alone; UnknownEdgeId.
SideSplit split_sides(const Multigraph& h, const EdgeSet& s);

}  // namespace kempe
