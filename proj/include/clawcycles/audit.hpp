#ifndef CLAWCYCLES_AUDIT_HPP
#define CLAWCYCLES_AUDIT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clawcycles/graph.hpp"

namespace clawcycles {

/// Breadth-first levels L_i = {v : d(v, root) = i}.
struct LevelProfile {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> levels;
  std::vector<std::size_t> induced_edges;  // edges with both ends in L_i
  /// (a, b, c): a, b in L_3 with a common neighbor c in L_4.
  std::vector<std::array<Vertex, 3>> cross_shared;

  std::size_t level_size(std::size_t i) const { return i < levels.size() ? levels[i].size() : 0; }
  std::size_t edges_in(std::size_t i) const { return i < induced_edges.size() ? induced_edges[i] : 0; }
};

LevelProfile bfs_levels(const Graph& g, Vertex root);

/// Cycle lengths whose presence in the contracted graph already yields a
/// power-of-two cycle in the claw-free blow-up.
inline constexpr std::array<std::size_t, 5> kForbiddenLengths{3, 4, 6, 7, 8};

/// First cycle (by ascending length) whose length is in kForbiddenLengths.
std::optional<Cycle> find_forbidden_cycle(const Graph& g);

enum class Claim {
  L1Independent,        // L_1 has no inner edge
  L2AtMostOneEdge,      // L_2 induces at most one edge
  L3EdgeBound,          // L_3 induces <= 3 edges (L_2 edgeless) or <= 1 (one L_2 edge)
  NoSharedL4Neighbor,   // no two L_3 vertices share an L_4 neighbor
  AtLeast38Vertices,    // forbidden-cycle-free implies n >= 38
};

std::string_view to_string(Claim c);

struct AuditEntry {
  Claim claim;
  bool holds = false;
  /// Present whenever the claim fails and the graph has a forbidden cycle.
  std::optional<Cycle> fallback;

  bool sound() const { return holds || fallback.has_value(); }
};

enum class Verdict {
  Consistent,     // every claim holds or is excused by a forbidden cycle
  Contradiction,  // a claim fails on a forbidden-cycle-free graph
};

std::string_view to_string(Verdict v);

struct AuditReport {
  LevelProfile profile;
  bool forbidden_free = false;
  std::vector<AuditEntry> entries;
  Verdict verdict = Verdict::Consistent;
};

/// Evaluates each level claim as an implication: it holds, or the graph
/// has a cycle with length in kForbiddenLengths (returned as fallback).
/// Throws NotCubic or Disconnected.
AuditReport theorem9_audit(const Graph& g, Vertex root);

}  // namespace clawcycles

#endif  // CLAWCYCLES_AUDIT_HPP
