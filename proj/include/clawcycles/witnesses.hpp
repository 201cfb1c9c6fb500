#ifndef CLAWCYCLES_WITNESSES_HPP
#define CLAWCYCLES_WITNESSES_HPP

#include <cstdint>
#include <optional>

#include "clawcycles/graph.hpp"

namespace clawcycles {

enum class CycleForm {
  Pow2,       // length 2^k
  ThreePow2,  // length 3 * 2^k
};

std::string_view to_string(CycleForm form);

struct Target {
  std::uint64_t value = 0;
  CycleForm form = CycleForm::Pow2;
  int k = 0;

  friend bool operator==(const Target&, const Target&) = default;
};

/// A cycle whose length is 2^k or 3 * 2^k.
struct EGWitness {
  Cycle cycle;
  int k = 0;
  CycleForm form = CycleForm::Pow2;

  std::uint64_t expected_length() const;
};

/// Smallest element of {2^k : k >= 2} u {3 * 2^k : k >= 1} inside [lo, hi].
/// Requires 3 <= lo <= hi (Error{InvalidArgument} otherwise).
std::optional<Target> target_in_interval(std::uint64_t lo, std::uint64_t hi);

/// Smallest power of two 2^k (k >= 2) inside [lo, hi].
std::optional<Target> power_of_two_in_interval(std::uint64_t lo, std::uint64_t hi);

/// Cycle of length 2^k or 3 * 2^k in a claw-free graph with minimum degree
/// at least 3. A 4-cycle is returned directly when present; otherwise the
/// smallest hole is marked and stretched through as many detours as the
/// nearest target length needs.
///
/// Throws ClawFound / MinDegree for unmet hypotheses, StructureViolation
/// when the marking fails, TargetMissing if the hole length interval holds
/// no target.
EGWitness theorem1_witness(const Graph& g);

/// Power-of-two cycle through a non-cut vertex v of a claw-free C4-free
/// graph with minimum degree at least 4.
///
/// The graph must be 4-regular with N(v) inducing two disjoint edges
/// {w,u}, {x,y}. The shortest of the four cross paths in G - v closes into
/// a hole C through v of length s >= 5; every edge of C has a distinct
/// off-cycle triangle vertex, so detours reach every length in [s, 2s].
///
/// Unmet hypotheses throw ClawFound, MinDegree, C4Found or CutVertex. A
/// failure of any intermediate claim (regularity, neighborhood shape,
/// minimality of C, distinct detours) throws StructureViolation.
EGWitness theorem5_witness(const Graph& g, Vertex v);

/// Cycle length l and exponent k with 2l <= 2^k < 3l.
struct Conjecture8Hit {
  std::size_t length = 0;
  int k = 0;
  Cycle cycle;
};

/// Shortest qualifying cycle length, or nullopt. Throws Error{NotCubic}.
std::optional<Conjecture8Hit> conjecture8_check(const Graph& g);

/// Whether some power of two 2^k (k >= 1) satisfies 2l <= 2^k < 3l.
std::optional<int> conjecture8_exponent(std::uint64_t l);

}  // namespace clawcycles

#endif  // CLAWCYCLES_WITNESSES_HPP
