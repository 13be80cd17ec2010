#include "kempe/corpus.hpp"

#include <algorithm>
#include <random>

#include "kempe/errors.hpp"
#include "kempe/generators.hpp"
#include "kempe/io.hpp"
#include "kempe/solver.hpp"

namespace kempe {

namespace {

std::string shift_label(const std::vector<std::uint32_t>& shifts) {
  std::string out;
  for (std::uint32_t s : shifts) out += "-" + std::to_string(s);
  return out;
}

VertexId least_vertex(const Instance& instance) { return instance.graph.vertices().front(); }

void run_one(const std::string& name, const Instance& instance, const EdgeSet& t,
             CorpusReport& report) {
  const std::string label = name + " T={" + [&] {
    std::string s;
    for (EdgeId e : t) s += (s.empty() ? "" : ",") + instance.names.edge(e);
    return s;
  }() + "}";
  try {
    const Transversal transversal{t};
    const Solution solution = solve(instance.graph, instance.partition, transversal);
    const SolutionDocument written{solution.bags, transversal, solution.trace};
    const SolutionDocument read = parse_solution(emit_solution(instance, written), instance);
    if (!(read == written)) {
      report.failures.push_back(label + ": solution document does not round-trip");
      return;
    }
    const Verdict verdict = verify_solution(instance.graph, instance.partition, transversal, read.bags);
    if (!verdict.accepted()) {
      report.failures.push_back(label + ": " + verdict.describe());
      return;
    }
    ++report.solved;
  } catch (const Error& e) {
    report.failures.push_back(label + ": " + e.what());
  }
}

}  // namespace

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> perfect;
  perfect.push_back({"k4", CorpusKind::Seed, k4_seed()});
  const std::vector<std::uint32_t> triangular = {0, 1, 3, 6, 10};
  for (std::uint32_t m : {5u, 7u, 11u, 13u}) {
    for (std::uint32_t k = 3; k <= 5; ++k) {
      std::vector<std::uint32_t> consecutive(k);
      for (std::uint32_t i = 0; i < k; ++i) consecutive[i] = i;
      std::vector<std::uint32_t> spread(triangular.begin(), triangular.begin() + k);
      for (const auto& shifts : {consecutive, spread}) {
        if (shifts.back() >= m) continue;
        try {
          perfect.push_back({"circ-m" + std::to_string(m) + shift_label(shifts), CorpusKind::Circulant,
                             gen_circulant({m, shifts})});
        } catch (const BadModulus&) {
          // that shift set does not work for this modulus
        }
      }
    }
  }

  std::vector<CorpusEntry> out = perfect;
  for (std::size_t i = 0; i < perfect.size(); ++i) {
    for (std::size_t j = i; j < perfect.size(); ++j) {
      const Instance& a = perfect[i].instance;
      const Instance& b = perfect[j].instance;
      if (a.partition.k() != b.partition.k()) continue;
      out.push_back({"splice-" + perfect[i].name + "+" + perfect[j].name, CorpusKind::Splice,
                     splice(a, least_vertex(a), b, least_vertex(b))});
    }
  }
  const std::size_t perfect_count = out.size();
  for (std::size_t i = 0; i < perfect_count; ++i) {
    out.push_back({"del-" + out[i].name, CorpusKind::Deletion,
                   delete_vertex(out[i].instance, least_vertex(out[i].instance))});
  }
  // Dropping a bridge end leaves k-1 bridges between the halves, so a
  // transversal on the far half forces a separator at the top level.
  for (std::size_t i = 0; i < perfect_count; ++i) {
    if (out[i].kind != CorpusKind::Splice) continue;
    const Instance& spliced = out[i].instance;
    const EdgeRecord& bridge = spliced.graph.edge(*spliced.names.find_edge("f1"));
    const VertexId far = spliced.names.vertex(bridge.u).starts_with("b.") ? bridge.u : bridge.v;
    out.push_back({"cut-" + out[i].name, CorpusKind::Deletion, delete_vertex(spliced, far)});
  }
  return out;
}

std::vector<EdgeSet> corpus_transversals(const Instance& instance, std::size_t samples,
                                         std::uint64_t seed) {
  if (transversal_count(instance.partition) <= samples) {
    return all_transversals(instance.partition, samples);
  }
  std::mt19937_64 rng(seed);
  std::vector<EdgeSet> out;
  for (std::size_t i = 0; i < samples; ++i) out.push_back(random_transversal(instance.partition, rng));
  return out;
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, std::size_t samples,
                        std::uint64_t seed) {
  CorpusReport report;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CorpusEntry& entry = entries[i];
    ++report.instances;
    std::vector<EdgeSet> ts = corpus_transversals(entry.instance, samples, seed + i);
    if (entry.instance.transversal) ts.push_back(entry.instance.transversal->edges);
    for (const EdgeSet& t : ts) run_one(entry.name, entry.instance, t, report);
  }
  return report;
}

void write_corpus(const std::vector<CorpusEntry>& entries, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const CorpusEntry& entry : entries) {
    write_text_file(dir / (entry.name + ".json"), emit_instance(entry.instance));
  }
}

CorpusReport run_corpus_dir(const std::filesystem::path& dir, std::size_t samples,
                            std::uint64_t seed) {
  if (!std::filesystem::is_directory(dir)) throw ParseError("not a directory", dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.is_regular_file() && item.path().extension() == ".json") files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> entries;
  CorpusReport parse_failures;
  for (const auto& file : files) {
    try {
      entries.push_back({file.stem().string(), CorpusKind::Seed, parse_instance(read_text_file(file))});
    } catch (const Error& e) {
      ++parse_failures.instances;
      parse_failures.failures.push_back(file.filename().string() + ": " + e.what());
    }
  }
  CorpusReport report = run_corpus(entries, samples, seed);
  report.instances += parse_failures.instances;
  report.failures.insert(report.failures.end(), parse_failures.failures.begin(),
                         parse_failures.failures.end());
  return report;
}

}  // namespace kempe
