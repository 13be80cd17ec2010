#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace kempe {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph construction and queries
class LoopEdge : public Error { public: using Error::Error; };
class DuplicateEdgeId : public Error { public: using Error::Error; };
class DuplicateVertexId : public Error { public: using Error::Error; };
class UnknownEndpoint : public Error { public: using Error::Error; };
class UnknownEdgeId : public Error { public: using Error::Error; };
class UnknownVertex : public Error { public: using Error::Error; };
class DisconnectedContractionSet : public Error { public: using Error::Error; };
class WouldCreateLoop : public Error { public: using Error::Error; };

// path routines
class NotTwoSides : public Error { public: using Error::Error; };
class InsufficientConnectivity : public Error { public: using Error::Error; };

// solver
class InvalidInput : public Error { public: using Error::Error; };

/// A structural fact guaranteed by the underlying proof did not hold.
/// Never expected on valid input; carries the violated fact.
class InternalAssertion : public Error {
 public:
  explicit InternalAssertion(const std::string& fact)
      : Error("internal assertion failed: " + fact), fact_(fact) {}
  const std::string& fact() const noexcept { return fact_; }

 private:
  std::string fact_;
};

// generators
class BadModulus : public Error { public: using Error::Error; };
class ShiftOutOfRange : public Error { public: using Error::Error; };
class OrderMismatch : public Error { public: using Error::Error; };
class NotPerfect : public Error { public: using Error::Error; };

// documents
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string field,
             std::optional<std::size_t> line = std::nullopt)
      : Error(format(message, field, line)), field_(std::move(field)), line_(line) {}

  const std::string& field() const noexcept { return field_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& message, const std::string& field,
                            std::optional<std::size_t> line) {
    std::string out = "parse error";
    if (line) out += " at line " + std::to_string(*line);
    if (!field.empty()) out += " in '" + field + "'";
    return out + ": " + message;
  }

  std::string field_;
  std::optional<std::size_t> line_;
};

class SchemaViolation : public Error {
 public:
  SchemaViolation(const std::string& message, std::string path)
      : Error("schema violation at " + path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace kempe
