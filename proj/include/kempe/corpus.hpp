#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "kempe/instance.hpp"

namespace kempe {

enum class CorpusKind { Seed, Circulant, Splice, Deletion };

struct CorpusEntry {
  std::string name;
  CorpusKind kind = CorpusKind::Seed;
  Instance instance;
};

/// The fixed test corpus:
///   circulants for m in {5,7,11,13} with shifts {0,..,k-1} and prefixes of
///   {0,1,3,6,10} of size k in {3,4,5} (only those with every shift below m);
///   the K_4 seed;
///   a splice of every unordered pair of same-k perfect entries, an entry
///   with itself included, at the least vertex of each;
///   the deletion of the least vertex of every perfect entry;
///   for every splice, the deletion of the second-half end of bridge f1.
std::vector<CorpusEntry> standard_corpus();

/// Every transversal when there are at most `samples`, otherwise `samples`
/// uniform draws from a generator seeded with `seed`.
std::vector<EdgeSet> corpus_transversals(const Instance& instance, std::size_t samples,
                                         std::uint64_t seed);

struct CorpusReport {
  std::size_t instances = 0;
  std::size_t solved = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Solves every instance for its sampled transversals (plus its own, if it
/// carries one), round-trips each solution through the document format and
/// re-checks it with verify_solution.
CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, std::size_t samples,
                        std::uint64_t seed);

/// Writes `<name>.json` for every entry into `dir`, creating it if needed.
void write_corpus(const std::vector<CorpusEntry>& entries, const std::filesystem::path& dir);

/// Loads every *.json file in `dir` (sorted by file name) and runs them.
/// A file that fails to parse is reported as a failure.
CorpusReport run_corpus_dir(const std::filesystem::path& dir, std::size_t samples,
                            std::uint64_t seed);

}  // namespace kempe
