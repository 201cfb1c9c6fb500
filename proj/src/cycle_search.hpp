// Anchored depth-first cycle search shared by the recognizers and the hole
// machinery. Not part of the public interface.
#ifndef CLAWCYCLES_SRC_CYCLE_SEARCH_HPP
#define CLAWCYCLES_SRC_CYCLE_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "clawcycles/graph.hpp"

namespace clawcycles::detail {

/// Looks for a cycle of exactly `length` vertices through `anchor`, using
/// only vertices >= `lower`. With `chordless` set, partial paths are
/// extended only by vertices that see no earlier path vertex other than
/// their predecessor (and the anchor, when closing), so every hit is
/// induced.
class ExactCycleFinder {
 public:
  ExactCycleFinder(const Graph& g, std::size_t length, bool chordless);

  std::optional<Cycle> through(Vertex anchor, Vertex lower);

 private:
  bool extend(Vertex last);
  void push(Vertex v);
  void pop();

  const Graph& g_;
  std::size_t length_;
  bool chordless_;
  Vertex anchor_ = 0;
  Vertex lower_ = 0;
  std::vector<int> dist_;
  std::vector<char> on_path_;
  std::vector<int> path_contacts_;
  std::vector<Vertex> path_;
};

/// Each cycle is found from its smallest vertex.
std::optional<Cycle> find_cycle_exact(const Graph& g, std::size_t length, bool chordless);

/// BFS distances to `anchor` inside the subgraph of vertices >= lower.
std::vector<int> distances_above(const Graph& g, Vertex anchor, Vertex lower);

}  // namespace clawcycles::detail

#endif  // CLAWCYCLES_SRC_CYCLE_SEARCH_HPP
