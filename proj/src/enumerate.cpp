#include "clawcycles/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "clawcycles/canonical.hpp"
#include "clawcycles/graph6.hpp"

namespace clawcycles {

namespace {

// Labels every connected cubic graph in breadth-first order: vertex h is
// completed before h + 1, and its missing edges go either to already
// labeled, unfinished vertices after h or to fresh labels taken in order.
// Every connected cubic graph has such a labeling, so collecting the
// certificates of all leaves yields each class exactly once.
class BfsCubicSearch {
 public:
  explicit BfsCubicSearch(std::size_t n) : n_(n), adj_(n), degree_(n, 0) {}

  std::set<std::string> run() {
    labeled_ = 1;
    complete(0);
    return std::move(certs_);
  }

 private:
  void link(std::size_t a, std::size_t b) {
    adj_[a].push_back(static_cast<Vertex>(b));
    adj_[b].push_back(static_cast<Vertex>(a));
    ++degree_[a];
    ++degree_[b];
  }

  void unlink(std::size_t a, std::size_t b) {
    adj_[a].pop_back();
    adj_[b].pop_back();
    --degree_[a];
    --degree_[b];
  }

  void emit() {
    std::vector<Edge> edges;
    edges.reserve(3 * n_ / 2);
    for (std::size_t v = 0; v < n_; ++v) {
      for (Vertex w : adj_[v]) {
        if (static_cast<std::size_t>(w) > v) edges.emplace_back(static_cast<Vertex>(v), w);
      }
    }
    certs_.insert(canonical_cert(Graph::from_edges(n_, edges)).graph6);
  }

  void complete(std::size_t h) {
    if (h == n_) {
      emit();
      return;
    }
    // Queue ran dry before every vertex was labeled: disconnected.
    if (h >= labeled_) return;
    const std::size_t need = 3 - degree_[h];
    std::vector<std::size_t> candidates;
    for (std::size_t v = h + 1; v < labeled_; ++v) {
      if (degree_[v] < 3 && std::find(adj_[h].begin(), adj_[h].end(), static_cast<Vertex>(v)) == adj_[h].end()) {
        candidates.push_back(v);
      }
    }
    std::vector<std::size_t> chosen;
    choose(h, need, candidates, 0, chosen);
  }

  void choose(std::size_t h, std::size_t need, const std::vector<std::size_t>& candidates, std::size_t from,
              std::vector<std::size_t>& chosen) {
    // Fill the rest of h's slots with fresh vertices.
    const std::size_t fresh = need - chosen.size();
    if (labeled_ + fresh <= n_) {
      const std::size_t first = labeled_;
      for (std::size_t i = 0; i < fresh; ++i) link(h, first + i);
      labeled_ += fresh;
      complete(h + 1);
      labeled_ -= fresh;
      for (std::size_t i = fresh; i-- > 0;) unlink(h, first + i);
    }
    if (chosen.size() == need) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      link(h, candidates[i]);
      choose(h, need, candidates, i + 1, chosen);
      unlink(h, candidates[i]);
      chosen.pop_back();
    }
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::size_t> degree_;
  std::size_t labeled_ = 0;
  std::set<std::string> certs_;
};

std::vector<Graph> connected_classes(std::size_t n) {
  std::vector<Graph> out;
  for (const auto& code : BfsCubicSearch(n).run()) out.push_back(parse_graph6(code));
  return out;
}

// Multisets of connected components with non-increasing sizes summing to n.
void unions(std::size_t remaining, std::size_t max_part, std::size_t min_index, const Graph& acc,
            const std::function<const std::vector<Graph>&(std::size_t)>& classes, std::set<std::string>& certs) {
  if (remaining == 0) {
    certs.insert(canonical_cert(acc).graph6);
    return;
  }
  for (std::size_t part = std::min(max_part, remaining); part >= 4; part -= 2) {
    const auto& list = classes(part);
    const std::size_t start = part == max_part ? min_index : 0;
    for (std::size_t i = start; i < list.size(); ++i) {
      unions(remaining - part, part, i, disjoint_union(acc, list[i]), classes, certs);
    }
  }
}

}  // namespace

std::vector<Graph> enumerate_cubic_graphs(std::size_t n, bool connected_only) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "cubic graphs need an even order >= 4, got " + std::to_string(n));
  }
  if (connected_only) return connected_classes(n);

  std::vector<std::vector<Graph>> cache(n + 1);
  std::vector<char> ready(n + 1, 0);
  std::function<const std::vector<Graph>&(std::size_t)> classes = [&](std::size_t m) -> const std::vector<Graph>& {
    if (!ready[m]) {
      cache[m] = connected_classes(m);
      ready[m] = 1;
    }
    return cache[m];
  };
  std::set<std::string> certs;
  unions(n, n, 0, Graph(0), classes, certs);
  std::vector<Graph> out;
  for (const auto& code : certs) out.push_back(parse_graph6(code));
  return out;
}

void for_each_cubic_graph(std::size_t n, bool connected_only, const std::function<void(const Graph&)>& sink) {
  for (const Graph& g : enumerate_cubic_graphs(n, connected_only)) sink(g);
}

}  // namespace clawcycles
