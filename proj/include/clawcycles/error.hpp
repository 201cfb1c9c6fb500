#ifndef CLAWCYCLES_ERROR_HPP
#define CLAWCYCLES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clawcycles {

using Vertex = int;

/// Failure categories reported by the library. Several of them carry a
/// structural witness (a claw, a 4-cycle, an offending vertex) in
/// Error::evidence().
enum class ErrorKind {
  OutOfRange,          // vertex label outside 0..n-1
  LoopEdge,
  NotAnEdge,
  Parse,               // malformed graph6
  TooLarge,            // graph6 size limit exceeded
  InvalidPath,
  InvalidCycle,
  NotAHole,
  NotCubic,
  Disconnected,
  ClawFound,           // evidence: center, leaf, leaf, leaf
  C4Found,             // evidence: the 4-cycle
  MinDegree,           // evidence: a vertex of too small degree
  CutVertex,           // evidence: the cut vertex
  NotSmallestHole,     // evidence: a strictly shorter hole
  NoTriangleAt,        // evidence: the vertex
  MultiLink,           // evidence: the two triangle indices
  StructureViolation,  // evidence: the offending configuration
  TargetMissing,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<Vertex> evidence = {})
      : std::runtime_error(message), kind_(kind), evidence_(std::move(evidence)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Vertex>& evidence() const noexcept { return evidence_; }

  /// True for the kinds that signal an unmet hypothesis of a construction
  /// (claw, C4, degree, cut vertex, non-hole input) rather than a bad call
  /// or a structural surprise.
  bool is_precondition_failure() const noexcept;

 private:
  ErrorKind kind_;
  std::vector<Vertex> evidence_;
};

}  // namespace clawcycles

#endif  // CLAWCYCLES_ERROR_HPP
