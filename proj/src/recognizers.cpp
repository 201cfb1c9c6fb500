#include "clawcycles/recognizers.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <unordered_map>

#include "cycle_search.hpp"

namespace clawcycles {

std::vector<std::size_t> CycleSpectrum::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(witnesses.size());
  for (const auto& [len, _] : witnesses) out.push_back(len);
  return out;
}

std::optional<ClawWitness> find_claw(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex c = 0; c < n; ++c) {
    auto nb = g.neighbors(c);
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) {
            return ClawWitness{c, {nb[i], nb[j], nb[k]}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Cycle> find_c4(const Graph& g) {
  // (a, b) -> first common neighbor seen; a second one closes a 4-cycle.
  std::unordered_map<long long, Vertex> first_middle;
  const auto n = static_cast<long long>(g.order());
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const long long key = nb[i] * n + nb[j];
        auto [it, fresh] = first_middle.try_emplace(key, v);
        if (!fresh) return Cycle{{nb[i], it->second, nb[j], v}};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  std::optional<std::size_t> best;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<Vertex> queue{static_cast<Vertex>(root)};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      const auto dv = static_cast<std::size_t>(dist[static_cast<std::size_t>(v)]);
      // Nothing shorter can appear deeper in this BFS.
      if (best && 2 * dv + 1 >= *best) break;
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (dist[wi] == -1) {
          dist[wi] = static_cast<int>(dv) + 1;
          parent[wi] = v;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(v)]) {
          const std::size_t len = dv + static_cast<std::size_t>(dist[wi]) + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<Cycle> has_cycle_of_length(const Graph& g, std::size_t length) {
  if (length < 3) throw Error(ErrorKind::InvalidArgument, "cycle length must be at least 3");
  return detail::find_cycle_exact(g, length, false);
}

namespace {

// Enumerates simple paths from each anchor through larger vertices and
// records every closing length; branches that cannot reach a length still
// missing are cut.
class SpectrumSearch {
 public:
  SpectrumSearch(const Graph& g, std::size_t max_len)
      : g_(g), max_len_(max_len), on_path_(g.order(), 0), found_(max_len + 1, 0) {
    max_needed_ = max_len;
    settle();
  }

  CycleSpectrum run() {
    const auto n = static_cast<Vertex>(g_.order());
    for (Vertex m = 0; m + 2 < n && max_needed_ >= 3; ++m) {
      if (g_.degree(m) < 2) continue;
      anchor_ = m;
      dist_ = detail::distances_above(g_, m, m);
      path_.assign(1, m);
      on_path_[static_cast<std::size_t>(m)] = 1;
      extend(m);
      on_path_[static_cast<std::size_t>(m)] = 0;
    }
    return std::move(spectrum_);
  }

 private:
  void settle() {
    while (max_needed_ >= 3 && found_[max_needed_]) --max_needed_;
  }

  void extend(Vertex last) {
    const std::size_t p = path_.size();
    if (p >= 3 && p <= max_len_ && !found_[p] && g_.has_edge(last, anchor_)) {
      found_[p] = 1;
      spectrum_.witnesses.emplace(p, Cycle{path_});
      settle();
    }
    if (p >= max_len_) return;
    for (Vertex x : g_.neighbors(last)) {
      auto xi = static_cast<std::size_t>(x);
      if (x < anchor_ || on_path_[xi] || dist_[xi] < 0) continue;
      if (p + static_cast<std::size_t>(dist_[xi]) > max_needed_) continue;
      path_.push_back(x);
      on_path_[xi] = 1;
      extend(x);
      on_path_[xi] = 0;
      path_.pop_back();
      if (max_needed_ < 3) return;
    }
  }

  const Graph& g_;
  std::size_t max_len_;
  std::size_t max_needed_ = 0;
  Vertex anchor_ = 0;
  std::vector<int> dist_;
  std::vector<char> on_path_;
  std::vector<char> found_;
  std::vector<Vertex> path_;
  CycleSpectrum spectrum_;
};

}  // namespace

CycleSpectrum cycle_spectrum(const Graph& g, std::size_t max_len) {
  if (max_len > g.order()) {
    throw Error(ErrorKind::InvalidArgument, "max_len exceeds the graph order");
  }
  if (max_len < 3) return {};
  return SpectrumSearch(g, max_len).run();
}

std::optional<PowerOfTwoCycle> power_of_two_cycle(const Graph& g) {
  for (int k = 2; (std::size_t{1} << k) <= g.order(); ++k) {
    if (auto c = has_cycle_of_length(g, std::size_t{1} << k)) return PowerOfTwoCycle{std::move(*c), k};
  }
  return std::nullopt;
}

TriangulationStatus triangulation_status(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw Error(ErrorKind::NotAnEdge,
                "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge", {e.u, e.v});
  }
  auto a = g.neighbors(e.u);
  auto b = g.neighbors(e.v);
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  TriangulationStatus status{e, common.size(), std::nullopt};
  if (common.size() == 1) status.detour = common.front();
  return status;
}

}  // namespace clawcycles
