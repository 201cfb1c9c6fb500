#ifndef CLAWCYCLES_RECOGNIZERS_HPP
#define CLAWCYCLES_RECOGNIZERS_HPP

#include <cstddef>
#include <map>
#include <optional>

#include "clawcycles/graph.hpp"

namespace clawcycles {

/// Induced K_{1,3}: center adjacent to each leaf, leaves pairwise non-adjacent.
struct ClawWitness {
  Vertex center = 0;
  Vertex leaves[3] = {0, 0, 0};
};

/// Achievable cycle lengths with one witness cycle per length.
struct CycleSpectrum {
  std::map<std::size_t, Cycle> witnesses;

  bool contains(std::size_t length) const { return witnesses.count(length) != 0; }
  std::vector<std::size_t> lengths() const;
};

struct TriangulationStatus {
  Edge edge;
  std::size_t triangle_count = 0;
  /// Third vertex of the triangle, present iff triangle_count == 1.
  std::optional<Vertex> detour;

  bool uniquely_triangulated() const { return triangle_count == 1; }
};

/// First induced claw in (center, leaf triple) lexicographic order.
std::optional<ClawWitness> find_claw(const Graph& g);

inline bool is_claw_free(const Graph& g) { return !find_claw(g); }

/// A 4-cycle subgraph (chords allowed), found as two vertices with two
/// common neighbors.
std::optional<Cycle> find_c4(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Exact decision: some cycle of exactly `length` vertices, or nullopt.
std::optional<Cycle> has_cycle_of_length(const Graph& g, std::size_t length);

/// All cycle lengths up to max_len (which must not exceed the order).
CycleSpectrum cycle_spectrum(const Graph& g, std::size_t max_len);
inline CycleSpectrum cycle_spectrum(const Graph& g) { return cycle_spectrum(g, g.order()); }

struct PowerOfTwoCycle {
  Cycle cycle;
  int exponent = 0;
};

/// Cycle of length 2^k, k >= 2, smallest k first.
std::optional<PowerOfTwoCycle> power_of_two_cycle(const Graph& g);

/// Throws Error{NotAnEdge} when e is not an edge of g.
TriangulationStatus triangulation_status(const Graph& g, Edge e);

}  // namespace clawcycles

#endif  // CLAWCYCLES_RECOGNIZERS_HPP
