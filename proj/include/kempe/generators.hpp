#pragma once

#include <cstdint>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/instance.hpp"

namespace kempe {

struct CirculantSpec {
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> shifts;
};

/// Bipartite circulant on Z_m x {0,1} with class i = {(z,0)(z+a_i,1)}.
/// Vertex (z,s) has id s*m + z and name "z,s"; the class-i edge at z has id
/// i*m + z and name "M<i+1>_<z>".
/// Throws ShiftOutOfRange (a shift >= m, or no shifts), BadModulus (some
/// difference a_i - a_j not coprime to m).
Instance gen_circulant(const CirculantSpec& spec);

/// Joins H_1 - v_1 and H_2 - v_2 by bridges f_j between the far ends of the
/// class-j edges at v_1 and v_2. Names are prefixed "a." and "b.";
/// bridges are named "f<j+1>". Both inputs must be perfect 1-factorizations
/// of the same order. Throws OrderMismatch, NotPerfect, UnknownVertex.
Instance splice(const Instance& first, VertexId first_vertex, const Instance& second,
                VertexId second_vertex);

/// H - v with each class losing its edge at v; ids are renumbered densely,
/// names kept. Throws UnknownVertex, NotPerfect.
Instance delete_vertex(const Instance& instance, VertexId v);

/// K_4 on "0".."3" with classes {01,23}, {02,13}, {03,12}.
Instance k4_seed();

/// The simple complete graph on n vertices "0".."n-1", edges "e<i>_<j>" in
/// lexicographic order, with no partition.
Instance complete_graph(std::uint32_t n);

/// Every vertex has degree 2 in `edges`, which form a single cycle through
/// all vertices of H.
bool is_hamilton_cycle(const Multigraph& h, const EdgeSet& edges);
/// `edges` form a single path through all vertices of H.
bool is_hamilton_path(const Multigraph& h, const EdgeSet& edges);

/// Each class is a perfect matching and every pair union is a Hamilton cycle.
Verdict verify_perfect_factorization(const Multigraph& h, const MatchingPartition& partition);
/// Every pair union is a Hamilton path.
Verdict verify_hamilton_path_pairs(const Multigraph& h, const MatchingPartition& partition);

}  // namespace kempe
