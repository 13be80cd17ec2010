#include <doctest.h>

#include "kempe/corpus.hpp"
#include "kempe/errors.hpp"
#include "kempe/generators.hpp"
#include "support.hpp"

using namespace kt;

namespace {

void check_cycles(const Instance& in, std::size_t length) {
  for (std::size_t a = 0; a < in.partition.k(); ++a) {
    for (std::size_t b = a + 1; b < in.partition.k(); ++b) {
      const EdgeSet both = set_union(in.partition.classes[a], in.partition.classes[b]);
      CHECK(both.size() == length);
      CHECK(is_hamilton_cycle(in.graph, both));
    }
  }
}

}  // namespace

TEST_CASE("circulant on Z_5 with shifts 0,1,2") {
  const Instance c = gen_circulant({5, {0, 1, 2}});
  CHECK(c.graph.num_vertices() == 10);
  CHECK(c.graph.num_edges() == 15);
  CHECK(c.partition.k() == 3);
  check_cycles(c, 10);
  CHECK(c.names.vertex(V(7)) == "2,1");
  CHECK(c.names.edge(E(6)) == "M2_1");
  // class 1 edge at residue 1 joins (1,0) and (2,1)
  CHECK(c.graph.edge(E(6)) == EdgeRecord{E(6), V(1), V(7)});
  for (VertexId v : c.graph.vertices()) CHECK(c.graph.degree(v) == 3);
}

TEST_CASE("circulant on Z_7 with four shifts") {
  const Instance c = gen_circulant({7, {0, 1, 3, 5}});
  CHECK(c.graph.num_vertices() == 14);
  CHECK(c.graph.num_edges() == 28);
  CHECK(c.partition.k() == 4);
  CHECK(verify_perfect_factorization(c.graph, c.partition).accepted());
}

TEST_CASE("circulant parameter errors") {
  CHECK_THROWS_AS(gen_circulant({4, {0, 1, 2}}), BadModulus);
  CHECK_THROWS_AS(gen_circulant({7, {0, 1, 1}}), BadModulus);
  CHECK_THROWS_AS(gen_circulant({5, {0, 5}}), ShiftOutOfRange);
  CHECK_THROWS_AS(gen_circulant({5, {}}), ShiftOutOfRange);
}

TEST_CASE("two K_4 spliced give the prism") {
  const Instance prism = splice(k4_seed(), V(0), k4_seed(), V(3));
  CHECK(prism.graph.num_vertices() == 6);
  CHECK(prism.graph.num_edges() == 9);
  CHECK(prism.partition.k() == 3);
  check_cycles(prism, 6);
  for (VertexId v : prism.graph.vertices()) CHECK(prism.graph.degree(v) == 3);
  CHECK(prism.names.vertex(V(0)) == "a.1");
  CHECK(prism.names.vertex(V(3)) == "b.0");
  CHECK(prism.names.find_edge("f1").has_value());
}

TEST_CASE("K_4 spliced with a circulant") {
  const Instance c = gen_circulant({5, {0, 1, 2}});
  const Instance s = splice(k4_seed(), V(2), c, V(4));
  CHECK(s.graph.num_vertices() == 12);
  CHECK(s.graph.num_edges() == 6 + 15 - 3);
  CHECK(verify_kempe(s.graph, s.partition).accepted());
  check_cycles(s, 12);
}

TEST_CASE("splice errors") {
  const Instance c4 = gen_circulant({5, {0, 1, 2, 3}});
  CHECK_THROWS_AS(splice(k4_seed(), V(0), c4, V(0)), OrderMismatch);
  CHECK_THROWS_AS(splice(k4_seed(), V(0), k4_seed(), V(9)), UnknownVertex);
  const Instance triangle = delete_vertex(k4_seed(), V(3));
  CHECK_THROWS_AS(splice(k4_seed(), V(0), triangle, V(0)), NotPerfect);
}

TEST_CASE("K_4 minus a vertex") {
  const Instance t = delete_vertex(k4_seed(), V(3));
  CHECK(t.graph.num_vertices() == 3);
  CHECK(t.names.edges == std::vector<std::string>{"e01", "e02", "e12"});
  CHECK(t.partition.classes == std::vector<EdgeSet>{{E(0)}, {E(1)}, {E(2)}});
  CHECK(verify_hamilton_path_pairs(t.graph, t.partition).accepted());
  CHECK_THROWS_AS(delete_vertex(k4_seed(), V(9)), UnknownVertex);
  CHECK_THROWS_AS(delete_vertex(t, V(0)), NotPerfect);
}

TEST_CASE("circulant minus (0,0)") {
  const Instance c = delete_vertex(gen_circulant({5, {0, 1, 2}}), V(0));
  CHECK(c.graph.num_vertices() == 9);
  CHECK(verify_hamilton_path_pairs(c.graph, c.partition).accepted());
  CHECK(verify_kempe(c.graph, c.partition).accepted());
}

TEST_CASE("K_4 seed") {
  const Instance k4 = k4_seed();
  CHECK(k4.graph == k4_graph());
  CHECK(k4.partition == k4_partition());
  CHECK(edge_components(k4.graph, set_union(k4.partition.classes[0], k4.partition.classes[1])).size() == 1);
  CHECK(verify_transversal(k4.partition, {e01, e02, e03}).accepted());
}

TEST_CASE("Hamilton checks") {
  const Multigraph k4 = k4_graph();
  CHECK(is_hamilton_cycle(k4, {e01, e12, e23, e03}));
  CHECK_FALSE(is_hamilton_cycle(k4, {e01, e12, e02}));
  CHECK(is_hamilton_path(k4, {e01, e12, e23}));
  CHECK_FALSE(is_hamilton_path(k4, {e01, e02, e03}));
  CHECK_FALSE(is_hamilton_path(k4, {e01, e23}));
}

TEST_CASE("generator properties over the corpus") {
  const auto corpus = standard_corpus();
  std::vector<const CorpusEntry*> perfect;
  for (const CorpusEntry& entry : corpus) {
    const Instance& in = entry.instance;
    CHECK(verify_matching_partition(in.graph, in.partition).accepted());
    CHECK(verify_kempe(in.graph, in.partition).accepted());
    if (entry.kind == CorpusKind::Deletion) {
      CHECK(verify_hamilton_path_pairs(in.graph, in.partition).accepted());
    } else {
      CHECK(verify_perfect_factorization(in.graph, in.partition).accepted());
      perfect.push_back(&entry);
    }
  }
  // size bookkeeping on a sample of splices and deletions
  for (std::size_t i = 0; i + 1 < perfect.size(); i += 5) {
    const Instance& a = perfect[i]->instance;
    const Instance& b = perfect[i + 1]->instance;
    const Instance d = delete_vertex(a, a.graph.vertices().back());
    for (std::size_t j = 0; j < a.partition.k(); ++j) {
      CHECK(d.partition.classes[j].size() + 1 == a.partition.classes[j].size());
    }
    if (a.partition.k() != b.partition.k()) continue;
    const Instance s = splice(a, a.graph.vertices().back(), b, b.graph.vertices().front());
    CHECK(s.partition.k() == a.partition.k());
    CHECK(s.graph.num_vertices() == a.graph.num_vertices() + b.graph.num_vertices() - 2);
    CHECK(s.graph.num_edges() == a.graph.num_edges() + b.graph.num_edges() - a.partition.k());
  }
}
