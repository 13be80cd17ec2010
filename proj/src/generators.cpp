#include "kempe/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

// Assembles an instance with dense ids in insertion order.
class DenseBuilder {
 public:
  VertexId add_vertex(std::string name) {
    const VertexId id{static_cast<std::uint32_t>(vertices_.size())};
    vertices_.push_back(id);
    names_.vertices.push_back(std::move(name));
    return id;
  }

  EdgeId add_edge(VertexId a, VertexId b, std::string name) {
    const EdgeId id{static_cast<std::uint32_t>(edges_.size())};
    edges_.push_back({id, a, b});
    names_.edges.push_back(std::move(name));
    return id;
  }

  Instance finish(std::vector<EdgeSet> classes) {
    Instance out;
    out.graph = Multigraph(vertices_, edges_);
    for (auto& cls : classes) cls = normalized(std::move(cls));
    out.partition.classes = std::move(classes);
    out.names = std::move(names_);
    return out;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeRecord> edges_;
  Names names_;
};

void require_generated(const Verdict& verdict, const char* what) {
  if (!verdict.accepted()) {
    throw InternalAssertion(std::string("generated instance: ") + what + "\n" + verdict.describe());
  }
}

void require_perfect(const Instance& instance, const char* which) {
  const Verdict verdict = verify_perfect_factorization(instance.graph, instance.partition);
  if (!verdict.accepted()) {
    throw NotPerfect(std::string(which) + " is not a perfect 1-factorization:\n" + verdict.describe());
  }
}

// Class index of the unique edge of each class at v.
std::vector<EdgeId> edges_by_class(const Instance& instance, VertexId v) {
  const auto lookup = class_lookup(instance.partition);
  std::vector<EdgeId> out(instance.partition.k());
  for (EdgeId e : instance.graph.incident_edges(v)) out[lookup[e.value]] = e;
  return out;
}

bool single_component_spanning(const Multigraph& h, const EdgeSet& edges) {
  if (edges.empty()) return h.num_vertices() <= 1;
  return is_connected_edge_set(h, edges) && covered_vertices(h, edges).size() == h.num_vertices();
}

}  // namespace

bool is_hamilton_cycle(const Multigraph& h, const EdgeSet& edges) {
  std::vector<int> degree(h.fresh_vertex().value, 0);
  for (EdgeId e : edges) {
    ++degree[h.edge(e).u.value];
    ++degree[h.edge(e).v.value];
  }
  for (VertexId v : h.vertices()) {
    if (degree[v.value] != 2) return false;
  }
  return single_component_spanning(h, edges);
}

bool is_hamilton_path(const Multigraph& h, const EdgeSet& edges) {
  if (edges.size() + 1 != h.num_vertices()) return false;
  std::vector<int> degree(h.fresh_vertex().value, 0);
  for (EdgeId e : edges) {
    ++degree[h.edge(e).u.value];
    ++degree[h.edge(e).v.value];
  }
  for (VertexId v : h.vertices()) {
    if (degree[v.value] > 2) return false;
  }
  return single_component_spanning(h, edges);
}

Verdict verify_perfect_factorization(const Multigraph& h, const MatchingPartition& partition) {
  Verdict verdict = verify_matching_partition(h, partition);
  if (!verdict.accepted()) return verdict;
  for (std::size_t i = 0; i < partition.k(); ++i) {
    if (partition.classes[i].size() * 2 != h.num_vertices()) {
      verdict.violations.push_back({"class is not a perfect matching", {i}, {}});
    }
  }
  for (std::size_t a = 0; a < partition.k(); ++a) {
    for (std::size_t b = a + 1; b < partition.k(); ++b) {
      if (!is_hamilton_cycle(h, set_union(partition.classes[a], partition.classes[b]))) {
        verdict.violations.push_back({"pair union is not a Hamilton cycle", {a, b}, {}});
      }
    }
  }
  return verdict;
}

Verdict verify_hamilton_path_pairs(const Multigraph& h, const MatchingPartition& partition) {
  Verdict verdict;
  for (std::size_t a = 0; a < partition.k(); ++a) {
    for (std::size_t b = a + 1; b < partition.k(); ++b) {
      if (!is_hamilton_path(h, set_union(partition.classes[a], partition.classes[b]))) {
        verdict.violations.push_back({"pair union is not a Hamilton path", {a, b}, {}});
      }
    }
  }
  return verdict;
}

Instance gen_circulant(const CirculantSpec& spec) {
  const std::uint32_t m = spec.modulus;
  const auto& a = spec.shifts;
  if (a.empty()) throw ShiftOutOfRange("circulant needs at least one shift");
  for (std::uint32_t s : a) {
    if (s >= m) {
      throw ShiftOutOfRange("shift " + std::to_string(s) + " is not below the modulus " +
                            std::to_string(m));
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const std::uint32_t diff = a[i] > a[j] ? a[i] - a[j] : a[j] - a[i];
      if (std::gcd(diff, m) != 1) {
        throw BadModulus("gcd(" + std::to_string(diff) + ", " + std::to_string(m) + ") != 1");
      }
    }
  }

  DenseBuilder builder;
  for (std::uint32_t side = 0; side < 2; ++side) {
    for (std::uint32_t z = 0; z < m; ++z) {
      builder.add_vertex(std::to_string(z) + "," + std::to_string(side));
    }
  }
  std::vector<EdgeSet> classes(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::uint32_t z = 0; z < m; ++z) {
      const VertexId left{z};
      const VertexId right{m + (z + a[i]) % m};
      classes[i].push_back(builder.add_edge(left, right,
                                            "M" + std::to_string(i + 1) + "_" + std::to_string(z)));
    }
  }
  Instance out = builder.finish(std::move(classes));
  require_generated(verify_perfect_factorization(out.graph, out.partition), "circulant is perfect");
  return out;
}

Instance splice(const Instance& first, VertexId first_vertex, const Instance& second,
                VertexId second_vertex) {
  if (first.partition.k() != second.partition.k()) {
    throw OrderMismatch("spliced instances have " + std::to_string(first.partition.k()) + " and " +
                        std::to_string(second.partition.k()) + " classes");
  }
  if (!first.graph.has_vertex(first_vertex) || !second.graph.has_vertex(second_vertex)) {
    throw UnknownVertex("splice vertex is not in its instance");
  }
  require_perfect(first, "first instance");
  require_perfect(second, "second instance");
  const std::size_t k = first.partition.k();

  DenseBuilder builder;
  std::vector<EdgeSet> classes(k);
  // Copies one side without its splice vertex; returns the new id of the far
  // end of each class-j edge at the splice vertex.
  auto copy_side = [&](const Instance& in, VertexId cut, const std::string& prefix) {
    std::vector<VertexId> remap(in.graph.fresh_vertex().value);
    for (VertexId v : in.graph.vertices()) {
      if (v != cut) remap[v.value] = builder.add_vertex(prefix + in.names.vertex(v));
    }
    const auto lookup = class_lookup(in.partition);
    for (const EdgeRecord& e : in.graph.edges()) {
      if (e.touches(cut)) continue;
      classes[lookup[e.id.value]].push_back(
          builder.add_edge(remap[e.u.value], remap[e.v.value], prefix + in.names.edge(e.id)));
    }
    std::vector<VertexId> stubs;
    for (EdgeId e : edges_by_class(in, cut)) stubs.push_back(remap[in.graph.edge(e).other(cut).value]);
    return stubs;
  };
  const auto stubs_a = copy_side(first, first_vertex, "a.");
  const auto stubs_b = copy_side(second, second_vertex, "b.");
  for (std::size_t j = 0; j < k; ++j) {
    classes[j].push_back(builder.add_edge(stubs_a[j], stubs_b[j], "f" + std::to_string(j + 1)));
  }
  Instance out = builder.finish(std::move(classes));
  require_generated(verify_perfect_factorization(out.graph, out.partition), "splice is perfect");
  return out;
}

Instance delete_vertex(const Instance& instance, VertexId v) {
  if (!instance.graph.has_vertex(v)) throw UnknownVertex("unknown vertex " + to_string(v));
  require_perfect(instance, "instance");

  DenseBuilder builder;
  std::vector<VertexId> remap(instance.graph.fresh_vertex().value);
  for (VertexId x : instance.graph.vertices()) {
    if (x != v) remap[x.value] = builder.add_vertex(instance.names.vertex(x));
  }
  const auto lookup = class_lookup(instance.partition);
  std::vector<EdgeSet> classes(instance.partition.k());
  for (const EdgeRecord& e : instance.graph.edges()) {
    if (e.touches(v)) continue;
    classes[lookup[e.id.value]].push_back(
        builder.add_edge(remap[e.u.value], remap[e.v.value], instance.names.edge(e.id)));
  }
  Instance out = builder.finish(std::move(classes));
  require_generated(verify_matching_partition(out.graph, out.partition), "deletion keeps a partition");
  require_generated(verify_hamilton_path_pairs(out.graph, out.partition), "pair unions are paths");
  require_generated(verify_kempe(out.graph, out.partition), "deletion is Kempe");
  return out;
}

Instance k4_seed() {
  DenseBuilder builder;
  VertexId v[4];
  for (int i = 0; i < 4; ++i) v[i] = builder.add_vertex(std::to_string(i));
  const EdgeId e01 = builder.add_edge(v[0], v[1], "e01");
  const EdgeId e02 = builder.add_edge(v[0], v[2], "e02");
  const EdgeId e03 = builder.add_edge(v[0], v[3], "e03");
  const EdgeId e12 = builder.add_edge(v[1], v[2], "e12");
  const EdgeId e13 = builder.add_edge(v[1], v[3], "e13");
  const EdgeId e23 = builder.add_edge(v[2], v[3], "e23");
  Instance out = builder.finish({{e01, e23}, {e02, e13}, {e03, e12}});
  require_generated(verify_kempe(out.graph, out.partition), "K4 is Kempe");
  return out;
}

Instance complete_graph(std::uint32_t n) {
  DenseBuilder builder;
  for (std::uint32_t i = 0; i < n; ++i) builder.add_vertex(std::to_string(i));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      builder.add_edge(VertexId{i}, VertexId{j}, "e" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  return builder.finish({});
}

}  // namespace kempe
