#include "kempe/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "", line_of(text, e.byte));
  }
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& member(const json& object, const std::string& path, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) throw SchemaViolation(std::string("missing key '") + key + "'", path);
  return *it;
}

const json& expect_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw SchemaViolation("expected an array", path);
  return value;
}

const std::string& expect_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw SchemaViolation("expected a string", path);
  return value.get_ref<const std::string&>();
}

const json& expect_object(const json& value, const std::string& path) {
  if (!value.is_object()) throw SchemaViolation("expected an object", path);
  return value;
}

std::size_t expect_count(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) throw SchemaViolation("expected a nonnegative integer", path);
  return value.get<std::size_t>();
}

// Name lookups that report unknown references with a JSON pointer.
class Resolver {
 public:
  explicit Resolver(const Names& names) : names_(names) {
    for (std::size_t i = 0; i < names.vertices.size(); ++i) vertex_[names.vertices[i]] = i;
    for (std::size_t i = 0; i < names.edges.size(); ++i) edge_[names.edges[i]] = i;
  }

  VertexId vertex(const json& value, const std::string& path) const {
    const std::string& name = expect_string(value, path);
    if (const auto it = vertex_.find(name); it != vertex_.end()) {
      return VertexId{static_cast<std::uint32_t>(it->second)};
    }
    // vertices created by contraction are written as "#<id>"
    if (name.size() > 1 && name[0] == '#' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return VertexId{static_cast<std::uint32_t>(std::stoul(name.substr(1)))};
    }
    throw SchemaViolation("unknown vertex '" + name + "'", path);
  }

  EdgeId edge(const json& value, const std::string& path) const {
    const std::string& name = expect_string(value, path);
    const auto it = edge_.find(name);
    if (it == edge_.end()) throw SchemaViolation("unknown edge '" + name + "'", path);
    return EdgeId{static_cast<std::uint32_t>(it->second)};
  }

  EdgeSet edge_list(const json& value, const std::string& path) const {
    EdgeSet out;
    expect_array(value, path);
    for (std::size_t i = 0; i < value.size(); ++i) out.push_back(edge(value[i], child(path, i)));
    return out;
  }

  const Names& names() const { return names_; }

 private:
  const Names& names_;
  std::map<std::string, std::size_t> vertex_;
  std::map<std::string, std::size_t> edge_;
};

ordered_json edge_names(const Names& names, const EdgeSet& edges) {
  ordered_json out = ordered_json::array();
  for (EdgeId e : edges) out.push_back(names.edge(e));
  return out;
}

ordered_json emit_step(const Names& names, const ReductionStep& step) {
  ordered_json out;
  out["kind"] = step_kind_name(step.kind);
  out["depth"] = step.depth;
  out["edges"] = step.edge_count;
  out["k"] = step.k;
  if (step.pivot) out["pivot"] = names.vertex(*step.pivot);
  if (!step.star.empty()) out["star"] = edge_names(names, step.star);
  if (!step.paths.empty()) {
    ordered_json paths = ordered_json::array();
    for (const Path& p : step.paths) paths.push_back(edge_names(names, p));
    out["paths"] = std::move(paths);
  }
  if (!step.separator.empty()) out["separator"] = edge_names(names, step.separator);
  if (step.free_class) out["free_class"] = *step.free_class;
  if (!step.side_c.empty()) out["side_c"] = edge_names(names, step.side_c);
  if (!step.side_d.empty()) out["side_d"] = edge_names(names, step.side_d);
  if (step.contracted) out["contracted"] = names.vertex(*step.contracted);
  if (step.peeled) out["peeled"] = names.edge(*step.peeled);
  if (step.fallback) {
    const FallbackReport& f = *step.fallback;
    out["fallback"] = {{"max_degree", f.max_degree},     {"min_degree", f.min_degree},
                       {"k", f.k},                       {"vertex_count", f.vertex_count},
                       {"end_surplus", f.end_surplus},   {"cubic_slack", f.cubic_slack}};
  }
  return out;
}

StepKind parse_kind(const json& value, const std::string& path) {
  const std::string& name = expect_string(value, path);
  for (StepKind kind : {StepKind::Base, StepKind::MengerSuccess, StepKind::SeparatorContraction,
                        StepKind::ParallelEdge, StepKind::CompleteFallback}) {
    if (name == step_kind_name(kind)) return kind;
  }
  throw SchemaViolation("unknown step kind '" + name + "'", path);
}

ReductionStep parse_step(const Resolver& resolve, const json& value, const std::string& path) {
  expect_object(value, path);
  ReductionStep step;
  step.kind = parse_kind(member(value, path, "kind"), child(path, "kind"));
  step.depth = expect_count(member(value, path, "depth"), child(path, "depth"));
  step.edge_count = expect_count(member(value, path, "edges"), child(path, "edges"));
  step.k = expect_count(member(value, path, "k"), child(path, "k"));
  if (value.contains("pivot")) step.pivot = resolve.vertex(value["pivot"], child(path, "pivot"));
  if (value.contains("star")) step.star = resolve.edge_list(value["star"], child(path, "star"));
  if (value.contains("paths")) {
    const std::string at = child(path, "paths");
    const json& paths = expect_array(value["paths"], at);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      step.paths.push_back(resolve.edge_list(paths[i], child(at, i)));
    }
  }
  if (value.contains("separator")) {
    step.separator = resolve.edge_list(value["separator"], child(path, "separator"));
  }
  if (value.contains("free_class")) {
    step.free_class = expect_count(value["free_class"], child(path, "free_class"));
  }
  if (value.contains("side_c")) step.side_c = resolve.edge_list(value["side_c"], child(path, "side_c"));
  if (value.contains("side_d")) step.side_d = resolve.edge_list(value["side_d"], child(path, "side_d"));
  if (value.contains("contracted")) {
    step.contracted = resolve.vertex(value["contracted"], child(path, "contracted"));
  }
  if (value.contains("peeled")) step.peeled = resolve.edge(value["peeled"], child(path, "peeled"));
  if (value.contains("fallback")) {
    const std::string at = child(path, "fallback");
    const json& f = expect_object(value["fallback"], at);
    FallbackReport report;
    report.max_degree = expect_count(member(f, at, "max_degree"), child(at, "max_degree"));
    report.min_degree = expect_count(member(f, at, "min_degree"), child(at, "min_degree"));
    report.k = expect_count(member(f, at, "k"), child(at, "k"));
    report.vertex_count = expect_count(member(f, at, "vertex_count"), child(at, "vertex_count"));
    const json& surplus = expect_array(member(f, at, "end_surplus"), child(at, "end_surplus"));
    for (std::size_t i = 0; i < surplus.size(); ++i) {
      if (!surplus[i].is_number_integer()) {
        throw SchemaViolation("expected an integer", child(child(at, "end_surplus"), i));
      }
      report.end_surplus.push_back(surplus[i].get<std::int64_t>());
    }
    const json& slack = member(f, at, "cubic_slack");
    if (!slack.is_number_integer()) throw SchemaViolation("expected an integer", child(at, "cubic_slack"));
    report.cubic_slack = slack.get<std::int64_t>();
    step.fallback = std::move(report);
  }
  return step;
}

void require_verdict(const Verdict& verdict, const char* what) {
  if (!verdict.accepted()) throw InvalidInput(std::string(what) + " rejected:\n" + verdict.describe());
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* const kPalette[] = {"red",    "blue",      "forestgreen", "orange", "purple",
                                "brown",  "magenta",   "cyan4",       "gold3",  "gray40",
                                "navy",   "olivedrab", "deeppink",    "teal",   "sienna"};

}  // namespace

Instance parse_instance(std::string_view text, const ParseOptions& options) {
  const json doc = parse_json(text);
  expect_object(doc, "");

  Instance out;
  std::vector<VertexId> vertices;
  const json& vs = expect_array(member(doc, "", "vertices"), "/vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string& name = expect_string(vs[i], child("/vertices", i));
    if (std::find(out.names.vertices.begin(), out.names.vertices.end(), name) !=
        out.names.vertices.end()) {
      throw ParseError("duplicate vertex '" + name + "'", child("vertices", i));
    }
    out.names.vertices.push_back(name);
    vertices.push_back(VertexId{static_cast<std::uint32_t>(i)});
  }

  // Edge names must be known before endpoints are resolved.
  const json& es = expect_array(member(doc, "", "edges"), "/edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string at = child("/edges", i);
    expect_object(es[i], at);
    const std::string& name = expect_string(member(es[i], at, "id"), child(at, "id"));
    if (std::find(out.names.edges.begin(), out.names.edges.end(), name) != out.names.edges.end()) {
      throw ParseError("duplicate edge id '" + name + "'", child(child("edges", i), "id"));
    }
    out.names.edges.push_back(name);
  }
  const Resolver resolve(out.names);
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string at = child(child("/edges", i), "ends");
    const json& ends = expect_array(member(es[i], child("/edges", i), "ends"), at);
    if (ends.size() != 2) throw SchemaViolation("an edge has exactly two ends", at);
    // "#<id>" is only meaningful in solution traces
    for (std::size_t j = 0; j < 2; ++j) {
      if (!out.names.find_vertex(expect_string(ends[j], child(at, j)))) {
        throw SchemaViolation("unknown vertex '" + ends[j].get<std::string>() + "'", child(at, j));
      }
    }
    const VertexId u = resolve.vertex(ends[0], child(at, 0));
    const VertexId v = resolve.vertex(ends[1], child(at, 1));
    if (u == v) throw SchemaViolation("loop at '" + out.names.vertices[u.value] + "'", at);
    edges.push_back({EdgeId{static_cast<std::uint32_t>(i)}, u, v});
  }
  out.graph = Multigraph(vertices, edges);

  const json& cs = expect_array(member(doc, "", "classes"), "/classes");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out.partition.classes.push_back(normalized(resolve.edge_list(cs[i], child("/classes", i))));
  }
  if (doc.contains("transversal")) {
    out.transversal = Transversal{normalized(resolve.edge_list(doc["transversal"], "/transversal"))};
  }

  if (options.verify) {
    require_verdict(verify_matching_partition(out.graph, out.partition), "matching partition");
    require_verdict(verify_kempe(out.graph, out.partition), "Kempe check");
    if (out.transversal) {
      require_verdict(verify_transversal(out.partition, out.transversal->edges), "transversal");
    }
  }
  return out;
}

std::string emit_instance(const Instance& instance) {
  const Names& names = instance.names;
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (VertexId v : instance.graph.vertices()) doc["vertices"].push_back(names.vertex(v));
  doc["edges"] = ordered_json::array();
  for (const EdgeRecord& e : instance.graph.edges()) {
    doc["edges"].push_back({{"id", names.edge(e.id)},
                            {"ends", {names.vertex(e.u), names.vertex(e.v)}}});
  }
  doc["classes"] = ordered_json::array();
  for (const EdgeSet& cls : instance.partition.classes) doc["classes"].push_back(edge_names(names, cls));
  if (instance.transversal) doc["transversal"] = edge_names(names, instance.transversal->edges);
  return doc.dump(2) + "\n";
}

std::string emit_solution(const Instance& instance, const SolutionDocument& solution) {
  const Names& names = instance.names;
  ordered_json doc;
  doc["bags"] = ordered_json::array();
  for (const EdgeSet& bag : solution.bags.bags) doc["bags"].push_back(edge_names(names, bag));
  if (solution.transversal) doc["transversal"] = edge_names(names, solution.transversal->edges);
  if (solution.trace) {
    doc["trace"] = ordered_json::array();
    for (const ReductionStep& step : solution.trace->steps) {
      doc["trace"].push_back(emit_step(names, step));
    }
  }
  return doc.dump(2) + "\n";
}

SolutionDocument parse_solution(std::string_view text, const Instance& instance) {
  const json doc = parse_json(text);
  expect_object(doc, "");
  const Resolver resolve(instance.names);
  SolutionDocument out;
  const json& bags = expect_array(member(doc, "", "bags"), "/bags");
  for (std::size_t i = 0; i < bags.size(); ++i) {
    out.bags.bags.push_back(resolve.edge_list(bags[i], child("/bags", i)));
  }
  if (doc.contains("transversal")) {
    out.transversal = Transversal{normalized(resolve.edge_list(doc["transversal"], "/transversal"))};
  }
  if (doc.contains("trace")) {
    const json& steps = expect_array(doc["trace"], "/trace");
    ReductionTrace trace;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      trace.steps.push_back(parse_step(resolve, steps[i], child("/trace", i)));
    }
    out.trace = std::move(trace);
  }
  return out;
}

std::string line_graph_dot(const Instance& instance) {
  const LineGraph lg(instance.graph);
  const auto lookup = class_lookup(instance.partition);
  std::ostringstream out;
  out << "graph L {\n  node [shape=box];\n";
  for (EdgeId e : lg.nodes()) {
    out << "  " << quoted(instance.names.edge(e));
    if (e.value < lookup.size() && lookup[e.value] != SIZE_MAX) {
      out << " [color=" << kPalette[lookup[e.value] % std::size(kPalette)] << "]";
    }
    out << ";\n";
  }
  for (std::size_t i = 0; i < lg.size(); ++i) {
    for (std::size_t j : lg.neighbor_indices(i)) {
      if (j <= i) continue;
      out << "  " << quoted(instance.names.edge(lg.nodes()[i])) << " -- "
          << quoted(instance.names.edge(lg.nodes()[j])) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string instance_dot(const Instance& instance, const BagSystem* bags) {
  const auto lookup = class_lookup(instance.partition);
  std::vector<std::size_t> bag_of(instance.graph.fresh_edge().value, SIZE_MAX);
  if (bags) {
    for (std::size_t i = 0; i < bags->bags.size(); ++i) {
      for (EdgeId e : bags->bags[i]) {
        if (e.value < bag_of.size()) bag_of[e.value] = i;
      }
    }
  }
  std::ostringstream out;
  out << "graph H {\n";
  for (VertexId v : instance.graph.vertices()) out << "  " << quoted(instance.names.vertex(v)) << ";\n";
  for (const EdgeRecord& e : instance.graph.edges()) {
    std::string label = instance.names.edge(e.id);
    out << "  " << quoted(instance.names.vertex(e.u)) << " -- " << quoted(instance.names.vertex(e.v))
        << " [";
    if (e.id.value < lookup.size() && lookup[e.id.value] != SIZE_MAX) {
      out << "color=" << kPalette[lookup[e.id.value] % std::size(kPalette)] << ", ";
    }
    if (bag_of[e.id.value] != SIZE_MAX) {
      label += " [B" + std::to_string(bag_of[e.id.value]) + "]";
      out << "penwidth=3, ";
    } else if (bags) {
      out << "style=dashed, ";
    }
    out << "label=" << quoted(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace kempe
