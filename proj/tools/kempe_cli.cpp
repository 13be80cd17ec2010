// Command-line front end. Exit codes: 0 success/accept, 1 reject or
// infeasible, 2 usage, parse or budget error, 3 internal assertion.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kempe/corpus.hpp"
#include "kempe/errors.hpp"
#include "kempe/generators.hpp"
#include "kempe/io.hpp"
#include "kempe/oracle.hpp"
#include "kempe/solver.hpp"

namespace {

using namespace kempe;

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

Instance load(const std::string& path, bool verify = true) {
  return parse_instance(read_text_file(path), ParseOptions{verify});
}

void store(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

EdgeSet edges_by_name(const Instance& instance, const std::string& list) {
  EdgeSet out;
  for (const std::string& name : split_list(list)) {
    const auto e = instance.names.find_edge(name);
    if (!e) throw ParseError("unknown edge '" + name + "'", "--transversal");
    out.push_back(*e);
  }
  return normalized(std::move(out));
}

VertexId vertex_by_name(const Instance& instance, const std::string& name, const char* flag) {
  const auto v = instance.names.find_vertex(name);
  if (!v) throw UnknownVertex("unknown vertex '" + name + "' (" + flag + ")");
  return *v;
}

// --transversal, then the instance's own, then the least edge of each class.
Transversal pick_transversal(const Instance& instance, const std::string& flag) {
  if (!flag.empty()) return Transversal{edges_by_name(instance, flag)};
  if (instance.transversal) return *instance.transversal;
  EdgeSet t;
  for (const EdgeSet& cls : instance.partition.classes) {
    if (!cls.empty()) t.push_back(cls.front());
  }
  return Transversal{normalized(std::move(t))};
}

void report(const char* what, const Verdict& verdict) {
  std::cout << what << ": " << (verdict.accepted() ? "accept" : "reject") << "\n";
  if (!verdict.accepted()) std::cout << verdict.describe();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted complete minors in line graphs of Kempe edge-colored graphs"};
  app.require_subcommand(1);

  std::string input, output, solution_path, transversal_flag;
  bool with_trace = false;

  auto* solve_cmd = app.add_subcommand("solve", "build a bag system for an instance");
  solve_cmd->add_option("-i,--input", input, "instance document")->required();
  solve_cmd->add_option("-o,--output", output, "solution document (default stdout)");
  solve_cmd->add_flag("--trace", with_trace, "include the reduction trace");
  solve_cmd->add_option("--transversal", transversal_flag, "comma-separated edge ids");

  auto* check_cmd = app.add_subcommand("check", "verify a solution against its instance");
  check_cmd->add_option("-i,--input", input, "instance document")->required();
  check_cmd->add_option("-s,--solution", solution_path, "solution document")->required();
  check_cmd->add_option("--transversal", transversal_flag, "comma-separated edge ids");

  auto* verify_cmd = app.add_subcommand("verify", "run the partition, Kempe and transversal checks");
  verify_cmd->add_option("-i,--input", input, "instance document")->required();

  auto* generate_cmd = app.add_subcommand("generate", "write a generated instance");
  generate_cmd->require_subcommand(1);
  std::uint32_t modulus = 0;
  std::string shifts, first_path, second_path, first_vertex, second_vertex, vertex;
  auto* circulant_cmd = generate_cmd->add_subcommand("circulant", "bipartite circulant");
  circulant_cmd->add_option("--m", modulus, "modulus")->required();
  circulant_cmd->add_option("--shifts", shifts, "comma-separated shifts")->required();
  circulant_cmd->add_option("-o,--output", output, "instance document (default stdout)");
  auto* splice_cmd = generate_cmd->add_subcommand("splice", "splice two perfect instances");
  splice_cmd->add_option("-a", first_path, "first instance")->required();
  splice_cmd->add_option("-b", second_path, "second instance")->required();
  splice_cmd->add_option("--va", first_vertex, "vertex of the first instance")->required();
  splice_cmd->add_option("--vb", second_vertex, "vertex of the second instance")->required();
  splice_cmd->add_option("-o,--output", output, "instance document (default stdout)");
  auto* delete_cmd = generate_cmd->add_subcommand("delete-vertex", "remove a vertex");
  delete_cmd->add_option("-i,--input", input, "perfect instance")->required();
  delete_cmd->add_option("--vertex", vertex, "vertex name")->required();
  delete_cmd->add_option("-o,--output", output, "instance document (default stdout)");
  auto* k4_cmd = generate_cmd->add_subcommand("k4", "the K_4 seed");
  k4_cmd->add_option("-o,--output", output, "instance document (default stdout)");

  std::size_t max_edges = OracleBudget{}.max_edges;
  std::uint64_t max_assignments = OracleBudget{}.max_assignments;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search for a bag system");
  oracle_cmd->add_option("-i,--input", input, "instance document")->required();
  oracle_cmd->add_option("--max-edges", max_edges, "edge cap")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--max-assignments", max_assignments, "state cap")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--transversal", transversal_flag, "comma-separated edge ids");

  auto* linegraph_cmd = app.add_subcommand("linegraph", "DOT rendering of L(H)");
  linegraph_cmd->add_option("-i,--input", input, "instance document")->required();
  linegraph_cmd->add_option("-o,--output", output, "DOT file (default stdout)");

  auto* dot_cmd = app.add_subcommand("dot", "DOT rendering of H, optionally with bags");
  dot_cmd->add_option("-i,--input", input, "instance document")->required();
  dot_cmd->add_option("-s,--solution", solution_path, "solution document");
  dot_cmd->add_option("-o,--output", output, "DOT file (default stdout)");

  auto* corpus_cmd = app.add_subcommand("corpus", "standard corpus");
  corpus_cmd->require_subcommand(1);
  std::string dir;
  std::size_t samples = 50;
  std::uint64_t seed = 20240607;
  auto* corpus_run = corpus_cmd->add_subcommand("run", "solve and check every instance in a directory");
  corpus_run->add_option("--dir", dir, "directory of instance documents")->required();
  corpus_run->add_option("--samples", samples, "transversals per instance");
  corpus_run->add_option("--seed", seed, "sampling seed");
  auto* corpus_write = corpus_cmd->add_subcommand("write", "write the standard corpus");
  corpus_write->add_option("--dir", dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) {
      const Instance instance = load(input);
      const Transversal t = pick_transversal(instance, transversal_flag);
      const Solution solution = solve(instance.graph, instance.partition, t);
      SolutionDocument doc{solution.bags, t, std::nullopt};
      if (with_trace) doc.trace = solution.trace;
      store(output, emit_solution(instance, doc));
      return kOk;
    }
    if (*check_cmd) {
      const Instance instance = load(input);
      const SolutionDocument doc = parse_solution(read_text_file(solution_path), instance);
      Transversal t;
      if (!transversal_flag.empty()) {
        t = Transversal{edges_by_name(instance, transversal_flag)};
      } else if (doc.transversal) {
        t = *doc.transversal;
      } else if (instance.transversal) {
        t = *instance.transversal;
      } else {
        std::cerr << "check: no transversal in the solution, the instance or --transversal\n";
        return kUsage;
      }
      const Verdict verdict = verify_solution(instance.graph, instance.partition, t, doc.bags);
      report("solution", verdict);
      return verdict.accepted() ? kOk : kReject;
    }
    if (*verify_cmd) {
      const Instance instance = load(input, false);
      const Verdict partition = verify_matching_partition(instance.graph, instance.partition);
      report("matching partition", partition);
      bool ok = partition.accepted();
      if (ok) {
        const Verdict kempe = verify_kempe(instance.graph, instance.partition);
        report("kempe", kempe);
        ok = kempe.accepted();
      }
      if (instance.transversal) {
        const Verdict transversal = verify_transversal(instance.partition, instance.transversal->edges);
        report("transversal", transversal);
        ok = ok && transversal.accepted();
      }
      return ok ? kOk : kReject;
    }
    if (*circulant_cmd) {
      CirculantSpec spec{modulus, {}};
      for (const std::string& s : split_list(shifts)) {
        try {
          spec.shifts.push_back(static_cast<std::uint32_t>(std::stoul(s)));
        } catch (const std::exception&) {
          throw ParseError("not a shift: '" + s + "'", "--shifts");
        }
      }
      store(output, emit_instance(gen_circulant(spec)));
      return kOk;
    }
    if (*splice_cmd) {
      const Instance a = load(first_path);
      const Instance b = load(second_path);
      store(output, emit_instance(splice(a, vertex_by_name(a, first_vertex, "--va"), b,
                                         vertex_by_name(b, second_vertex, "--vb"))));
      return kOk;
    }
    if (*delete_cmd) {
      const Instance instance = load(input);
      store(output, emit_instance(delete_vertex(instance, vertex_by_name(instance, vertex, "--vertex"))));
      return kOk;
    }
    if (*k4_cmd) {
      store(output, emit_instance(k4_seed()));
      return kOk;
    }
    if (*oracle_cmd) {
      // the oracle accepts any graph, so the coloring checks are skipped
      const Instance instance = load(input, false);
      if (transversal_flag.empty() && !instance.transversal && instance.partition.k() == 0) {
        std::cerr << "oracle: no transversal, classes or --transversal\n";
        return kUsage;
      }
      const EdgeSet t = pick_transversal(instance, transversal_flag).edges;
      const OracleResult result = oracle_solve(instance.graph, t, {max_edges, max_assignments});
      switch (result.status) {
        case OracleStatus::Found:
          std::cout << "found after " << result.explored << " states\n";
          std::cout << emit_solution(instance, {*result.bags, Transversal{t}, std::nullopt});
          return kOk;
        case OracleStatus::Infeasible:
          std::cout << "infeasible (" << result.explored << " states)\n";
          return kReject;
        case OracleStatus::BudgetExceeded:
          std::cout << "budget exceeded\n";
          return kUsage;
      }
    }
    if (*linegraph_cmd) {
      store(output, line_graph_dot(load(input, false)));
      return kOk;
    }
    if (*dot_cmd) {
      const Instance instance = load(input, false);
      if (solution_path.empty()) {
        store(output, instance_dot(instance));
      } else {
        const SolutionDocument doc = parse_solution(read_text_file(solution_path), instance);
        store(output, instance_dot(instance, &doc.bags));
      }
      return kOk;
    }
    if (*corpus_run) {
      const CorpusReport result = run_corpus_dir(dir, samples, seed);
      for (const std::string& failure : result.failures) std::cout << "FAIL " << failure << "\n";
      std::cout << result.instances << " instances, " << result.solved << " solved, "
                << result.failures.size() << " failures\n";
      return result.ok() ? kOk : kReject;
    }
    if (*corpus_write) {
      const auto entries = standard_corpus();
      write_corpus(entries, dir);
      std::cout << entries.size() << " instances written to " << dir << "\n";
      return kOk;
    }
  } catch (const InternalAssertion& e) {
    std::cerr << e.what() << "\n";
    return kInternal;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const SchemaViolation& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kReject;
  }
  return kUsage;
}
