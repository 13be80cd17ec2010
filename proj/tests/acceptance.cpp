// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kempe/corpus.hpp"
#include "kempe/errors.hpp"
#include "kempe/generators.hpp"
#include "kempe/oracle.hpp"
#include "kempe/paths.hpp"
#include "kempe/solver.hpp"

using namespace kempe;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    out.pass = false;
    out.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
  }
  if (!out.pass) ++failures;
  std::printf("%s criterion %d: %s [%.2f s] %s\n", out.pass ? "PASS" : "FAIL", number, title, seconds,
              out.detail.c_str());
  std::fflush(stdout);
}

Multigraph complete_host(std::uint32_t n) { return complete_graph(n).graph; }

EdgeSet edges_of(const Multigraph& k, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  EdgeSet out;
  for (auto [a, b] : pairs) out.push_back(*k.find_edge(VertexId{a}, VertexId{b}));
  return normalized(std::move(out));
}

std::vector<EdgeSet> sorted_bags(std::vector<EdgeSet> bags) {
  for (auto& b : bags) b = normalized(std::move(b));
  std::sort(bags.begin(), bags.end());
  return bags;
}

std::string first_failures(const std::vector<std::string>& failures) {
  std::string out;
  for (std::size_t i = 0; i < failures.size() && i < 3; ++i) out += "\n    " + failures[i];
  return out;
}

}  // namespace

int main() {
  const auto corpus = standard_corpus();

  criterion(1, "solve-then-verify on every corpus instance and sampled transversal", 10, [&] {
    const CorpusReport report = run_corpus(corpus, 50, 1);
    return Outcome{report.ok() && report.solved > 0,
                   std::to_string(report.instances) + " instances, " + std::to_string(report.solved) +
                       " solved, " + std::to_string(report.failures.size()) + " failures" +
                       first_failures(report.failures)};
  });

  criterion(2, "oracle finds a system for every small corpus instance and transversal", 0, [&] {
    std::size_t cases = 0, bad = 0;
    for (const CorpusEntry& entry : corpus) {
      const Instance& in = entry.instance;
      if (in.graph.num_edges() > 10) continue;
      for (const EdgeSet& t : all_transversals(in.partition, 1'000'000)) {
        ++cases;
        const OracleResult oracle = oracle_solve(in.graph, t);
        const Solution solved = solve(in.graph, in.partition, Transversal{t});
        if (oracle.status != OracleStatus::Found ||
            !verify_solution(in.graph, in.partition, Transversal{t}, solved.bags).accepted()) {
          ++bad;
        }
      }
    }
    return Outcome{cases > 0 && bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " bad"};
  });

  criterion(3, "every n-edge subset of K_n for n = 3, 4, 5", 5, [&] {
    std::string counts;
    std::size_t bad = 0;
    for (std::uint32_t n = 3; n <= 5; ++n) {
      const Multigraph host = complete_host(n);
      const EdgeSet all = host.edge_ids();
      std::vector<bool> pick(all.size(), false);
      std::fill(pick.end() - n, pick.end(), true);
      std::size_t cases = 0;
      do {
        EdgeSet t;
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (pick[i]) t.push_back(all[i]);
        }
        ++cases;
        if (!verify_bags(host, t, solve_complete(host, t)).accepted()) ++bad;
      } while (std::next_permutation(pick.begin(), pick.end()));
      counts += (counts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
                std::to_string(cases);
    }
    const bool counts_ok = counts == "n=3: 1, n=4: 15, n=5: 252";
    return Outcome{bad == 0 && counts_ok, counts + "; " + std::to_string(bad) + " rejected"};
  });

  const Multigraph k5 = complete_host(5);
  criterion(4, "K_5 with T = a K_2,3 is infeasible", 60, [&] {
    const EdgeSet t = edges_of(k5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    const OracleResult r = oracle_solve(k5, t);
    return Outcome{r.status == OracleStatus::Infeasible, std::to_string(r.explored) + " states"};
  });
  criterion(4, "K_5 with T = K_2,3 plus 01 and 23 is infeasible", 60, [&] {
    const EdgeSet t = edges_of(k5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {0, 1}, {2, 3}});
    const OracleResult r = oracle_solve(k5, t);
    return Outcome{r.status == OracleStatus::Infeasible, std::to_string(r.explored) + " states"};
  });
  criterion(4, "K_6 with T = K_2,4 plus 01 and 23 is infeasible", 60, [&] {
    const Multigraph k6 = complete_host(6);
    const EdgeSet t = edges_of(
        k6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 1}, {2, 3}});
    OracleBudget budget;
    budget.max_edges = 15;
    const OracleResult r = oracle_solve(k6, t, budget);
    return Outcome{r.status == OracleStatus::Infeasible, std::to_string(r.explored) + " states"};
  });

  criterion(5, "pair unions are Hamilton cycles (generated, spliced) or paths (deleted)", 0, [&] {
    std::size_t cycles = 0, paths = 0, bad = 0;
    for (const CorpusEntry& entry : corpus) {
      const Instance& in = entry.instance;
      const bool deleted = entry.kind == CorpusKind::Deletion;
      for (std::size_t a = 0; a < in.partition.k(); ++a) {
        for (std::size_t b = a + 1; b < in.partition.k(); ++b) {
          const EdgeSet both = set_union(in.partition.classes[a], in.partition.classes[b]);
          const bool ok = deleted ? is_hamilton_path(in.graph, both) : is_hamilton_cycle(in.graph, both);
          (deleted ? paths : cycles) += 1;
          if (!ok) ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(cycles) + " cycles, " + std::to_string(paths) + " paths, " +
                                 std::to_string(bad) + " bad"};
  });

  criterion(6, "pair_end_count(v) = d(k-d) and d(x)+d(y) >= k+1", 0, [&] {
    std::size_t vertices = 0, edges = 0, bad = 0;
    for (const CorpusEntry& entry : corpus) {
      const Instance& in = entry.instance;
      const std::size_t k = in.partition.k();
      for (VertexId v : in.graph.vertices()) {
        const std::size_t d = in.graph.degree(v);
        ++vertices;
        if (pair_end_count(in.graph, in.partition, v) != d * (k - d)) ++bad;
      }
      for (const EdgeRecord& e : in.graph.edges()) {
        ++edges;
        if (in.graph.degree(e.u) + in.graph.degree(e.v) < k + 1) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(vertices) + " vertices, " + std::to_string(edges) + " edges, " +
                                 std::to_string(bad) + " bad"};
  });

  criterion(7, "a top-level separator step with |S| = k-1, one free class, two sides", 0, [&] {
    std::size_t seen = 0, bad = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Instance& in = corpus[i].instance;
      for (const EdgeSet& t : corpus_transversals(in, 50, 1 + i)) {
        const Solution s = solve(in.graph, in.partition, Transversal{t});
        for (const ReductionStep& step : s.trace.steps) {
          if (step.kind != StepKind::SeparatorContraction || step.depth != 0) continue;
          ++seen;
          std::vector<std::size_t> avoiding;
          for (std::size_t c = 0; c < in.partition.k(); ++c) {
            if (!intersects(in.partition.classes[c], step.separator)) avoiding.push_back(c);
          }
          const SideSplit split = split_sides(in.graph, step.separator);
          const bool sides_match =
              sorted_bags({split.side_c, split.side_d}) == sorted_bags({step.side_c, step.side_d});
          if (step.separator.size() + 1 != in.partition.k() || avoiding.size() != 1 ||
              step.free_class != avoiding.front() || !sides_match) {
            ++bad;
          }
        }
      }
    }
    return Outcome{seen > 0 && bad == 0, std::to_string(seen) + " separator steps, " + std::to_string(bad) + " bad"};
  });

  criterion(8, "parallel-edge cases with two- and three-class cycles", 0, [&] {
    // x=0, y=1, a1=2, c=3 (= b1 = a2), b2=4; e=0 and f=1 join x and y
    std::vector<VertexId> vs;
    for (std::uint32_t i = 0; i < 5; ++i) vs.push_back(VertexId{i});
    auto edge = [](std::uint32_t id, std::uint32_t a, std::uint32_t b) {
      return EdgeRecord{EdgeId{id}, VertexId{a}, VertexId{b}};
    };
    const EdgeId e{0}, f{1}, xa1{2}, yc{3}, xc{4}, yb2{5};
    const Multigraph two(vs, std::vector<EdgeRecord>{edge(0, 0, 1), edge(1, 0, 1), edge(2, 0, 2),
                                                     edge(3, 1, 3), edge(4, 0, 3), edge(5, 1, 4)});
    const MatchingPartition p2{{{e}, {f}, {xa1, yc}, {xc, yb2}}};
    const Transversal t2{{e, f, xa1, yb2}};
    const BagSystem got = solve_parallel(two, p2, t2);
    const bool canonical =
        sorted_bags(got.bags) == sorted_bags({{e}, {f}, {xa1, xc, yc}, {yb2}}) &&
        verify_solution(two, p2, t2, got).accepted();

    // p=2, q=3, r=4; classes {xp,yq}, {xq,yr}, {xr,yp}
    const Multigraph three(vs, std::vector<EdgeRecord>{edge(0, 0, 1), edge(1, 0, 1), edge(2, 0, 2),
                                                       edge(3, 1, 3), edge(4, 0, 3), edge(5, 1, 4),
                                                       edge(6, 0, 4), edge(7, 1, 2)});
    const MatchingPartition p3{
        {{EdgeId{0}}, {EdgeId{1}}, {EdgeId{2}, EdgeId{3}}, {EdgeId{4}, EdgeId{5}}, {EdgeId{6}, EdgeId{7}}}};
    std::size_t accepted = 0, total = 0;
    for (const EdgeSet& t : all_transversals(p3, 100)) {
      ++total;
      if (verify_solution(three, p3, Transversal{t}, solve_parallel(three, p3, Transversal{t})).accepted()) {
        ++accepted;
      }
    }
    return Outcome{canonical && accepted == total,
                   std::string("two-class output ") + (canonical ? "matches" : "differs") + "; three-class " +
                       std::to_string(accepted) + "/" + std::to_string(total) + " accepted"};
  });

  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
