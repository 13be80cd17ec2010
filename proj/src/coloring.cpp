#include "kempe/coloring.hpp"

#include <algorithm>
#include <limits>

#include "kempe/errors.hpp"

namespace kempe {

std::string Verdict::describe() const {
  std::string out;
  for (const auto& v : violations) {
    out += v.what;
    if (!v.classes.empty()) {
      out += " [classes";
      for (std::size_t c : v.classes) out += " " + std::to_string(c);
      out += "]";
    }
    if (!v.edges.empty()) {
      out += " [edges";
      for (EdgeId e : v.edges) out += " " + to_string(e);
      out += "]";
    }
    out += "\n";
  }
  return out;
}

std::vector<std::size_t> class_lookup(const MatchingPartition& partition) {
  std::uint32_t cap = 0;
  for (const auto& cls : partition.classes) {
    for (EdgeId e : cls) cap = std::max(cap, e.value + 1);
  }
  std::vector<std::size_t> out(cap, SIZE_MAX);
  for (std::size_t i = 0; i < partition.k(); ++i) {
    for (EdgeId e : partition.classes[i]) out[e.value] = i;
  }
  return out;
}

Verdict verify_matching_partition(const Multigraph& h, const MatchingPartition& partition) {
  Verdict verdict;
  std::vector<std::size_t> owner(h.fresh_edge().value, SIZE_MAX);

  for (std::size_t i = 0; i < partition.k(); ++i) {
    const EdgeSet& cls = partition.classes[i];
    if (cls.empty()) {
      verdict.violations.push_back({"class is empty", {i}, {}});
      continue;
    }
    if (!std::is_sorted(cls.begin(), cls.end()) ||
        std::adjacent_find(cls.begin(), cls.end()) != cls.end()) {
      verdict.violations.push_back({"class is not a sorted set of distinct edges", {i}, {}});
    }
    VertexSet seen;
    for (EdgeId e : cls) {
      if (!h.has_edge(e)) {
        verdict.violations.push_back({"class references an unknown edge", {i}, {e}});
        continue;
      }
      if (owner[e.value] != SIZE_MAX && owner[e.value] != i) {
        verdict.violations.push_back({"edge lies in two classes", {owner[e.value], i}, {e}});
      }
      owner[e.value] = i;
      const EdgeRecord& rec = h.edge(e);
      seen.push_back(rec.u);
      seen.push_back(rec.v);
    }
    // Two edges of the class share an endpoint.
    std::sort(seen.begin(), seen.end());
    for (std::size_t j = 1; j < seen.size(); ++j) {
      if (seen[j - 1] != seen[j]) continue;
      EdgeSet clash;
      for (EdgeId e : cls) {
        if (h.has_edge(e) && h.edge(e).touches(seen[j])) clash.push_back(e);
      }
      verdict.violations.push_back({"class is not a matching at " + to_string(seen[j]), {i}, clash});
    }
  }
  for (const EdgeRecord& e : h.edges()) {
    if (owner[e.id.value] == SIZE_MAX) {
      verdict.violations.push_back({"edge is in no class", {}, {e.id}});
    }
  }
  return verdict;
}

Verdict verify_kempe(const Multigraph& h, const MatchingPartition& partition) {
  Verdict verdict;
  for (std::size_t a = 0; a < partition.k(); ++a) {
    for (std::size_t b = a + 1; b < partition.k(); ++b) {
      const EdgeSet both = set_union(partition.classes[a], partition.classes[b]);
      if (!is_connected_edge_set(h, both)) {
        verdict.violations.push_back({"union of two classes is not connected", {a, b}, {}});
        return verdict;
      }
    }
  }
  return verdict;
}

TransversalVerdict verify_transversal(const MatchingPartition& partition, const EdgeSet& t) {
  TransversalVerdict verdict;
  const auto lookup = class_lookup(partition);
  std::vector<EdgeSet> hits(partition.k());
  for (EdgeId e : t) {
    if (e.value >= lookup.size() || lookup[e.value] == SIZE_MAX) {
      verdict.violations.push_back({"transversal edge belongs to no class", {}, {e}});
      continue;
    }
    hits[lookup[e.value]].push_back(e);
  }
  for (std::size_t i = 0; i < partition.k(); ++i) {
    if (hits[i].size() == 1) {
      verdict.assignment.emplace_back(i, hits[i].front());
    } else if (hits[i].empty()) {
      verdict.violations.push_back({"class is not hit by the transversal", {i}, {}});
    } else {
      verdict.violations.push_back({"class is hit more than once", {i}, hits[i]});
    }
  }
  return verdict;
}

VertexSet pair_ends(const Multigraph& h, const MatchingPartition& partition, std::size_t a,
                    std::size_t b) {
  const EdgeSet both = set_union(partition.classes.at(a), partition.classes.at(b));
  VertexSet ends;
  for (EdgeId e : both) {
    ends.push_back(h.edge(e).u);
    ends.push_back(h.edge(e).v);
  }
  std::sort(ends.begin(), ends.end());
  VertexSet out;
  for (std::size_t i = 0; i < ends.size();) {
    std::size_t j = i;
    while (j < ends.size() && ends[j] == ends[i]) ++j;
    if (j - i == 1) out.push_back(ends[i]);
    i = j;
  }
  return out;
}

std::size_t pair_end_count(const Multigraph& h, const MatchingPartition& partition, VertexId v) {
  if (!h.has_vertex(v)) throw UnknownVertex("unknown vertex " + to_string(v));
  std::size_t count = 0;
  for (std::size_t a = 0; a < partition.k(); ++a) {
    for (std::size_t b = a + 1; b < partition.k(); ++b) {
      if (contains(pair_ends(h, partition, a, b), v)) ++count;
    }
  }
  return count;
}

MatchingPartition restrict_partition(const MatchingPartition& partition, const EdgeSet& removed) {
  MatchingPartition out;
  out.classes.reserve(partition.k());
  for (const auto& cls : partition.classes) out.classes.push_back(set_difference(cls, removed));
  return out;
}

std::uint64_t transversal_count(const MatchingPartition& partition) {
  std::uint64_t count = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  for (const auto& cls : partition.classes) {
    if (cls.empty()) return 0;
    if (count > cap / cls.size()) return cap;
    count *= cls.size();
  }
  return count;
}

std::vector<EdgeSet> all_transversals(const MatchingPartition& partition, std::size_t limit) {
  std::vector<EdgeSet> out;
  if (transversal_count(partition) == 0) return out;
  std::vector<std::size_t> choice(partition.k(), 0);
  while (out.size() < limit) {
    EdgeSet t;
    for (std::size_t i = 0; i < partition.k(); ++i) t.push_back(partition.classes[i][choice[i]]);
    out.push_back(normalized(std::move(t)));
    // odometer, last class fastest
    std::size_t i = partition.k();
    while (i > 0) {
      --i;
      if (++choice[i] < partition.classes[i].size()) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
    if (partition.k() == 0) break;
  }
  return out;
}

EdgeSet random_transversal(const MatchingPartition& partition, std::mt19937_64& rng) {
  EdgeSet t;
  for (const auto& cls : partition.classes) {
    std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
    t.push_back(cls[pick(rng)]);
  }
  return normalized(std::move(t));
}

}  // namespace kempe
