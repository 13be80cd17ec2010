#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "kempe/instance.hpp"
#include "kempe/solver.hpp"

namespace kempe {

struct ParseOptions {
  /// Run the matching-partition, Kempe and transversal verifiers after the
  /// schema checks; a rejection throws InvalidInput.
  bool verify = true;
};

/// Reads an instance document:
///   {"vertices": [name...],
///    "edges": [{"id": name, "ends": [vertex, vertex]}...],
///    "classes": [[edge...]...],
///    "transversal": [edge...]}      (optional)
/// Ids are assigned densely in document order.
/// Throws ParseError (malformed JSON, with line; duplicate names, with field),
/// SchemaViolation (wrong shape, unknown reference or loop, with a JSON
/// pointer), InvalidInput (a verifier rejects).
Instance parse_instance(std::string_view text, const ParseOptions& options = {});
std::string emit_instance(const Instance& instance);

struct SolutionDocument {
  BagSystem bags;
  std::optional<Transversal> transversal;
  std::optional<ReductionTrace> trace;

  friend bool operator==(const SolutionDocument&, const SolutionDocument&) = default;
};

/// {"bags": [[edge...]...], "transversal": [...], "trace": [step...]}, with
/// edges and vertices referenced by their names in `instance`.
std::string emit_solution(const Instance& instance, const SolutionDocument& solution);
/// Throws ParseError, SchemaViolation (shape, or a name unknown to `instance`).
SolutionDocument parse_solution(std::string_view text, const Instance& instance);

/// L(H) with nodes labelled by edge name.
std::string line_graph_dot(const Instance& instance);
/// H with edges colored by class; when `bags` is given, bag edges are drawn
/// bold and labelled with their bag index.
std::string instance_dot(const Instance& instance, const BagSystem* bags = nullptr);

/// Throws ParseError (field = path) when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
/// Throws Error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace kempe
