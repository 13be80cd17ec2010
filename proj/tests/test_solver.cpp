#include <doctest.h>

#include "kempe/corpus.hpp"
#include "kempe/errors.hpp"
#include "kempe/generators.hpp"
#include "kempe/oracle.hpp"
#include "kempe/solver.hpp"
#include "support.hpp"

using namespace kt;

namespace {

// x=0, y=1, a1=2, c=3, b2=4; e,f join x and y.
struct TwoCycleCase {
  EdgeId e{0}, f{1}, xa1{2}, yc{3}, xc{4}, yb2{5};
  Multigraph h = graph_of(5, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {0, 3}, {1, 4}});
  MatchingPartition p{{{e}, {f}, {xa1, yc}, {xc, yb2}}};
};

// x=0, y=1, p=2, q=3, r=4; classes {xp,yq}, {xq,yr}, {xr,yp} close a cycle.
struct ThreeCycleCase {
  Multigraph h = graph_of(5, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {0, 3}, {1, 4}, {0, 4}, {1, 2}});
  MatchingPartition p{{{E(0)}, {E(1)}, {E(2), E(3)}, {E(4), E(5)}, {E(6), E(7)}}};
};

void check_solution(const Multigraph& h, const MatchingPartition& p, const EdgeSet& t) {
  const Solution s = solve(h, p, Transversal{t});
  CHECK(verify_solution(h, p, Transversal{t}, s.bags).accepted());
}

std::vector<EdgeSet> subsets(const EdgeSet& from, std::size_t size) {
  std::vector<EdgeSet> out;
  std::vector<bool> pick(from.size(), false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
  do {
    EdgeSet s;
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (pick[i]) s.push_back(from[i]);
    }
    out.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST_CASE("triangle with singleton classes") {
  const Multigraph k3 = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  const MatchingPartition p{{{E(0)}, {E(1)}, {E(2)}}};
  const Solution s = solve(k3, p, Transversal{{E(0), E(1), E(2)}});
  CHECK(sorted_bags(s.bags.bags) == std::vector<EdgeSet>{{E(0)}, {E(1)}, {E(2)}});
}

TEST_CASE("K_4 with the star at 0 as transversal") {
  const Multigraph k4 = k4_graph();
  const EdgeSet t{e01, e02, e03};
  // feasibility is established independently first
  CHECK(oracle_solve(k4, t).status == OracleStatus::Found);
  const Solution s = solve(k4, k4_partition(), Transversal{t});
  CHECK(s.bags.bags == std::vector<EdgeSet>{{e01}, {e02}, {e03}});
  REQUIRE(s.trace.steps.size() == 1);
  CHECK(s.trace.steps[0].kind == StepKind::MengerSuccess);
  CHECK(s.trace.steps[0].pivot == V(0));
}

TEST_CASE("every transversal of K_4 and of the 7-circulant") {
  for (const auto& t : all_transversals(k4_partition(), 100)) check_solution(k4_graph(), k4_partition(), t);
  const Instance circ = gen_circulant({7, {0, 1, 3}});
  for (const auto& t : all_transversals(circ.partition, 1000)) check_solution(circ.graph, circ.partition, t);
}

TEST_CASE("two parallel edges with a 2-cycle of two-edge classes") {
  const TwoCycleCase c;
  REQUIRE(verify_kempe(c.h, c.p).accepted());
  const Transversal t{{c.e, c.f, c.xa1, c.yb2}};
  const BagSystem bags = solve_parallel(c.h, c.p, t);
  CHECK(sorted_bags(bags.bags) == sorted_bags({{c.e}, {c.f}, {c.xa1, c.xc, c.yc}, {c.yb2}}));

  const Solution s = solve(c.h, c.p, t);
  CHECK(sorted_bags(s.bags.bags) == sorted_bags(bags.bags));
  CHECK(s.trace.steps.front().kind == StepKind::ParallelEdge);
}

TEST_CASE("pairwise incident transversal gives singleton bags") {
  const TwoCycleCase c;
  const BagSystem bags = solve_parallel(c.h, c.p, Transversal{{c.e, c.f, c.yc, c.xc}});
  CHECK(sorted_bags(bags.bags) == sorted_bags({{c.e}, {c.f}, {c.yc}, {c.xc}}));
}

TEST_CASE("every transversal of the parallel-edge cases") {
  const TwoCycleCase two;
  for (const auto& t : all_transversals(two.p, 100)) {
    CHECK(verify_solution(two.h, two.p, Transversal{t}, solve_parallel(two.h, two.p, Transversal{t}))
              .accepted());
  }
  const ThreeCycleCase three;
  REQUIRE(verify_kempe(three.h, three.p).accepted());
  for (const auto& t : all_transversals(three.p, 100)) {
    CHECK(verify_solution(three.h, three.p, Transversal{t},
                          solve_parallel(three.h, three.p, Transversal{t}))
              .accepted());
    check_solution(three.h, three.p, t);
  }
}

TEST_CASE("a singleton class is peeled off") {
  // x=0, y=1, z=2; e,f = xy, g = xz
  const Multigraph h = graph_of(3, {{0, 1}, {0, 1}, {0, 2}});
  const MatchingPartition p{{{E(0)}, {E(1)}, {E(2)}}};
  const Solution s = solve(h, p, Transversal{{E(0), E(1), E(2)}});
  CHECK(sorted_bags(s.bags.bags) == std::vector<EdgeSet>{{E(0)}, {E(1)}, {E(2)}});
  REQUIRE_FALSE(s.trace.steps.empty());
  CHECK(s.trace.steps.front().kind == StepKind::ParallelEdge);
  CHECK(s.trace.steps.front().peeled == E(2));
}

TEST_CASE("solve_parallel needs a parallel pair") {
  CHECK_THROWS_AS(solve_parallel(k4_graph(), k4_partition(), Transversal{{e01, e02, e03}}),
                  InvalidInput);
}

TEST_CASE("solve rejects inputs that fail the verifiers") {
  const Multigraph apart = graph_of(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(solve(apart, {{{E(0)}, {E(1)}}}, Transversal{{E(0), E(1)}}), InvalidInput);
  CHECK_THROWS_AS(solve(k4_graph(), k4_partition(), Transversal{{e01, e23, e02}}), InvalidInput);
  CHECK_THROWS_AS(solve(k4_graph(), {{{e01, e12}, {e02, e13}, {e03, e23}}}, Transversal{{e01, e02, e03}}),
                  InvalidInput);
}

TEST_CASE("complete graph cases") {
  CHECK(sorted_bags(solve_complete(complete_host(3), {E(0), E(1), E(2)}).bags) ==
        std::vector<EdgeSet>{{E(0)}, {E(1)}, {E(2)}});

  // K_4 ids: 01=0 02=1 03=2 12=3 13=4 23=5
  const BagSystem square = solve_complete(complete_host(4), {e01, e12, e23, e03});
  CHECK(verify_bags(complete_host(4), {e01, e03, e12, e23}, square).accepted());
  CHECK(square.bags.size() == 4);

  // K_5 ids: 01=0 02=1 03=2 04=3 12=4 13=5 14=6 23=7 24=8 34=9
  const Multigraph k5 = complete_host(5);
  const EdgeSet pentagon{E(0), E(3), E(4), E(7), E(9)};
  CHECK(oracle_solve(k5, pentagon).status == OracleStatus::Found);
  CHECK(verify_bags(k5, pentagon, solve_complete(k5, pentagon)).accepted());
}

TEST_CASE("every n-subset of K_n for n up to 6") {
  for (std::uint32_t n = 3; n <= 6; ++n) {
    const Multigraph host = complete_host(n);
    for (const EdgeSet& t : subsets(host.edge_ids(), n)) {
      CHECK(verify_bags(host, t, solve_complete(host, t)).accepted());
    }
  }
}

TEST_CASE("solve_complete input errors") {
  CHECK_THROWS_AS(solve_complete(complete_host(4), {e01, e02, e03}), InvalidInput);
  CHECK_THROWS_AS(solve_complete(graph_of(3, {{0, 1}, {1, 2}}), {E(0), E(1), E(1)}), InvalidInput);
  CHECK_THROWS_AS(solve_complete(complete_host(2), {E(0), E(0)}), InvalidInput);
  CHECK_THROWS_AS(solve_complete(complete_host(3), {E(0), E(1), E(7)}), InvalidInput);
}

TEST_CASE("complete fallback diagnostics") {
  const Multigraph k3 = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  const FallbackReport r = assert_complete_fallback(k3, {{{E(0)}, {E(1)}, {E(2)}}});
  CHECK(r.max_degree == 2);
  CHECK(r.min_degree == 2);
  CHECK(r.k == 3);
  CHECK(r.vertex_count == 3);
  CHECK(r.end_surplus == std::vector<std::int64_t>{0, 0, 0});
  CHECK(r.cubic_slack == 0);

  // K_4 has a vertex of degree k, so the fallback does not apply
  CHECK_THROWS_AS(assert_complete_fallback(k4_graph(), k4_partition()), InvalidInput);
  CHECK_THROWS_AS(assert_complete_fallback(graph_of(2, {{0, 1}, {0, 1}}), {{{E(0)}, {E(1)}, {E(1)}}}),
                  InvalidInput);
  // a path is not a valid instance; its degree facts fail
  const Multigraph path = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(assert_complete_fallback(path, {{{E(0)}, {E(1)}, {E(2)}}}), InternalAssertion);
}

TEST_CASE("solution verdicts") {
  const Multigraph k4 = k4_graph();
  const MatchingPartition p = k4_partition();
  CHECK(verify_solution(k4, p, Transversal{{e01, e02, e03}}, {{{e01}, {e02}, {e03}}}).accepted());
  CHECK_FALSE(verify_solution(k4, p, Transversal{{e01, e02, e23}}, {{{e01}, {e23}, {e02}}}).accepted());
  CHECK_FALSE(
      verify_solution(k4, p, Transversal{{e01, e02, e03}}, {{{e01, e02}, {e03}, {e13}}}).accepted());
  // wrong count, overlap, disconnected bag
  CHECK_FALSE(verify_solution(k4, p, Transversal{{e01, e02, e03}}, {{{e01}, {e02}}}).accepted());
  CHECK_FALSE(
      verify_solution(k4, p, Transversal{{e01, e02, e03}}, {{{e01, e12}, {e02, e12}, {e03}}}).accepted());
  CHECK_FALSE(
      verify_solution(k4, p, Transversal{{e01, e02, e03}}, {{{e01, e23}, {e02}, {e03}}}).accepted());
}

TEST_CASE("trace invariants on the corpus") {
  const auto corpus = standard_corpus();
  std::size_t separator_steps = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Instance& in = corpus[i].instance;
    for (const EdgeSet& t : corpus_transversals(in, 10, 99 + i)) {
      const Solution s = solve(in.graph, in.partition, Transversal{t});
      const auto& steps = s.trace.steps;
      REQUIRE_FALSE(steps.empty());
      CHECK(steps[0].depth == 0);
      for (std::size_t j = 0; j < steps.size(); ++j) {
        const ReductionStep& step = steps[j];
        if (step.depth > 0) {
          // the parent is the closest earlier step one level up
          std::size_t parent = j;
          while (steps[parent].depth + 1 != step.depth) --parent;
          CHECK(step.edge_count < steps[parent].edge_count);
        }
        if (step.kind == StepKind::MengerSuccess) {
          CHECK(step.paths.size() == step.k);
          for (const Path& path : step.paths) CHECK(contains(step.star, path.front()));
        }
        if (step.kind == StepKind::SeparatorContraction) {
          ++separator_steps;
          CHECK(step.separator.size() + 1 == step.k);
          CHECK(step.free_class.has_value());
          CHECK_FALSE(step.side_c.empty());
          CHECK_FALSE(step.side_d.empty());
          CHECK_FALSE(intersects(step.side_c, step.side_d));
          CHECK_FALSE(intersects(step.side_c, step.separator));
          CHECK(step.paths.size() + 1 == step.k);
          for (const Path& path : step.paths) {
            CHECK(set_intersection(normalized(path), step.separator).size() == 1);
          }
          if (step.depth == 0) CHECK_FALSE(intersects(step.side_c, t));
        }
        if (step.kind == StepKind::CompleteFallback) {
          REQUIRE(step.fallback.has_value());
          CHECK(2 * step.fallback->max_degree >= step.k + 1);
          CHECK(step.fallback->max_degree + 1 == step.k);
        }
      }
    }
  }
  CHECK(separator_steps > 0);
}
