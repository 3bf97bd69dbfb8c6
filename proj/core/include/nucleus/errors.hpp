#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nucleus {

enum class ParseErrorKind {
  kMalformedLine,
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kDisconnected,
  kTooFewVertices,
  kTooManyEdges,
  kTooManyVertices,
};

std::string_view to_string(ParseErrorKind kind);

/// Rejected graph input. `kind` identifies the diagnostic.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// A size guard (face cap, vertex-subset cap, edge cap) would be exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The layered matching construction selected a face whose partner was
/// already matched. Raised only under ConflictPolicy::kStrict.
class AnomalyError : public std::runtime_error {
 public:
  AnomalyError(const std::string& what, int layer, int step, std::uint32_t face)
      : std::runtime_error(what), layer_(layer), step_(step), face_(face) {}
  int layer() const { return layer_; }
  int step() const { return step_; }
  std::uint32_t face_bits() const { return face_; }

 private:
  int layer_;
  int step_;
  std::uint32_t face_;
};

}  // namespace nucleus
