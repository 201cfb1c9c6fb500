#ifndef CLAWCYCLES_HOLES_HPP
#define CLAWCYCLES_HOLES_HPP

#include <optional>
#include <vector>

#include "clawcycles/graph.hpp"

namespace clawcycles {

/// Chordless cycle of length at least four.
class Hole {
 public:
  /// Throws Error{NotAHole} unless `c` is a hole of `g`.
  Hole(const Graph& g, Cycle c);

  const Cycle& cycle() const { return cycle_; }
  std::size_t length() const { return cycle_.length(); }
  std::span<const Vertex> vertices() const { return cycle_.vertices; }

 private:
  Cycle cycle_;
};

/// A smallest hole with every other edge marked. Marked edge i joins
/// hole positions start + 2i and start + 2i + 1 (mod length), and
/// detours[i] is the third vertex of its triangle.
struct MarkedHole {
  Hole hole;
  std::size_t start = 0;  // 0 or 1
  std::vector<Edge> marked;
  std::vector<Vertex> detours;

  /// Cycle of length hole.length() + t passing through the detours of
  /// the first t marked edges.
  Cycle detour_cycle(std::size_t t) const;
};

/// Greedy maximal path from vertex 0 closed at the farthest neighbor of its
/// end; the result has length >= min degree + 1. Throws Error{MinDegree}
/// when the minimum degree is below 2.
Cycle long_cycle_min_degree(const Graph& g);

/// Splits `c` at its lexicographically least chord until no chord remains.
/// Between the two halves the one of length >= 5 is kept if exactly one
/// qualifies, otherwise the shorter (ties: smaller sorted vertex set).
/// The result is chordless: a hole, or a triangle.
Cycle chordless_descend(const Graph& g, const Cycle& c);

/// A minimum-length hole, found by increasing-length chordless search.
std::optional<Hole> smallest_hole(const Graph& g);

/// A minimum-length hole containing v.
std::optional<Hole> smallest_hole_through(const Graph& g, Vertex v);

/// Alternating marked-edge structure on a smallest hole of a claw-free,
/// C4-free graph with minimum degree >= 3.
///
/// Unmet hypotheses raise precondition errors (ClawFound, C4Found,
/// MinDegree, NotAHole, NotSmallestHole). If the hypotheses hold but no
/// alternating assignment with distinct off-hole detours exists, or the
/// hole has odd length, Error{StructureViolation} is thrown with the
/// offending vertices as evidence.
MarkedHole mark_hole(const Graph& g, const Hole& h);

/// Checks the four MarkedHole clauses directly on the data.
bool is_valid_marked_hole(const Graph& g, const MarkedHole& m);

}  // namespace clawcycles

#endif  // CLAWCYCLES_HOLES_HPP
