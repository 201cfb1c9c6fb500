#include "cycle_search.hpp"

#include <deque>

namespace clawcycles::detail {

std::vector<int> distances_above(const Graph& g, Vertex anchor, Vertex lower) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{anchor};
  dist[static_cast<std::size_t>(anchor)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (w < lower || dist[wi] != -1) continue;
      dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

ExactCycleFinder::ExactCycleFinder(const Graph& g, std::size_t length, bool chordless)
    : g_(g),
      length_(length),
      chordless_(chordless),
      on_path_(g.order(), 0),
      path_contacts_(g.order(), 0) {}

void ExactCycleFinder::push(Vertex v) {
  path_.push_back(v);
  on_path_[static_cast<std::size_t>(v)] = 1;
  for (Vertex w : g_.neighbors(v)) ++path_contacts_[static_cast<std::size_t>(w)];
}

void ExactCycleFinder::pop() {
  Vertex v = path_.back();
  path_.pop_back();
  on_path_[static_cast<std::size_t>(v)] = 0;
  for (Vertex w : g_.neighbors(v)) --path_contacts_[static_cast<std::size_t>(w)];
}

std::optional<Cycle> ExactCycleFinder::through(Vertex anchor, Vertex lower) {
  if (length_ < 3 || length_ > g_.order()) return std::nullopt;
  anchor_ = anchor;
  lower_ = lower;
  dist_ = distances_above(g_, anchor, lower);
  push(anchor);
  const bool found = extend(anchor);
  std::optional<Cycle> out;
  if (found) out = Cycle{path_};
  while (!path_.empty()) pop();
  return out;
}

bool ExactCycleFinder::extend(Vertex last) {
  const std::size_t p = path_.size();
  if (p == length_) return g_.has_edge(last, anchor_);
  const bool closing = p + 1 == length_;
  for (Vertex x : g_.neighbors(last)) {
    auto xi = static_cast<std::size_t>(x);
    if (x < lower_ || on_path_[xi]) continue;
    // The cycle needs at least dist - 1 more vertices after x.
    if (dist_[xi] < 0 || p + static_cast<std::size_t>(dist_[xi]) > length_) continue;
    if (chordless_) {
      const int allowed = closing ? 2 : 1;
      if (path_contacts_[xi] != allowed) continue;
    }
    push(x);
    if (extend(x)) return true;
    pop();
  }
  return false;
}

std::optional<Cycle> find_cycle_exact(const Graph& g, std::size_t length, bool chordless) {
  if (length < 3 || length > g.order()) return std::nullopt;
  ExactCycleFinder finder(g, length, chordless);
  const auto n = static_cast<Vertex>(g.order());
  // An anchor needs length - 1 larger vertices.
  for (Vertex m = 0; m + static_cast<Vertex>(length) <= n; ++m) {
    if (g.degree(m) < 2) continue;
    if (auto c = finder.through(m, m)) return c;
  }
  return std::nullopt;
}

}  // namespace clawcycles::detail
