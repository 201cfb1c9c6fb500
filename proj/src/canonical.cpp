#include "clawcycles/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "clawcycles/graph6.hpp"

namespace clawcycles {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::string run() {
    if (n_ == 0) return write_graph6(g_);
    std::vector<int> color(n_, 0);
    search(std::move(color));
    return best_code_;
  }

 private:
  // Equitable refinement; colours stay ordered by their parent colour so the
  // result is label-invariant. Returns the cell count and an invariant hash
  // of the quotient structure.
  std::pair<int, std::uint64_t> refine(std::vector<int>& color) const {
    int cells = 1 + *std::max_element(color.begin(), color.end());
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> order(n_);
    for (;;) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(color[v]);
        for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) s.push_back(color[static_cast<std::size_t>(w)]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
      });
      int next = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])]) ++next;
        color[static_cast<std::size_t>(order[i])] = next;
      }
      const int refined = next + 1;
      if (refined == cells) break;
      cells = refined;
    }
    std::uint64_t h = static_cast<std::uint64_t>(cells);
    for (std::size_t i = 0; i < n_; ++i) {
      if (i > 0 && sig[static_cast<std::size_t>(order[i])] == sig[static_cast<std::size_t>(order[i - 1])]) {
        h = mix(h, 1);
        continue;
      }
      for (int c : sig[static_cast<std::size_t>(order[i])]) h = mix(h, static_cast<std::uint64_t>(c) + 2);
    }
    return {cells, h};
  }

  std::string leaf_code(const std::vector<int>& color) const {
    std::vector<Vertex> at(n_);
    for (std::size_t v = 0; v < n_; ++v) at[static_cast<std::size_t>(color[v])] = static_cast<Vertex>(v);
    std::string out;
    if (n_ <= 62) {
      out.push_back(static_cast<char>(n_ + 63));
    } else {
      out.push_back('~');
      for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n_ >> shift) & 63) + 63));
    }
    int chunk = 0, filled = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        chunk = (chunk << 1) | (g_.has_edge(at[i], at[j]) ? 1 : 0);
        if (++filled == 6) {
          out.push_back(static_cast<char>(chunk + 63));
          chunk = filled = 0;
        }
      }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
  }

  // -1, 0, +1: the current path trace against the best one on their common
  // prefix; a longer trace with an equal prefix counts as larger.
  int compare_to_best() const {
    if (best_trace_.empty()) return -1;
    const std::size_t common = std::min(trace_.size(), best_trace_.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (trace_[i] != best_trace_[i]) return trace_[i] < best_trace_[i] ? -1 : 1;
    }
    return trace_.size() > best_trace_.size() ? 1 : 0;
  }

  void search(std::vector<int> color) {
    const auto [cells, inv] = refine(color);
    trace_.push_back(inv);
    const int cmp = compare_to_best();
    if (cmp > 0) {
      trace_.pop_back();
      return;
    }
    if (static_cast<std::size_t>(cells) == n_) {
      std::string code = leaf_code(color);
      if (cmp < 0 || trace_.size() < best_trace_.size() || code < best_code_) {
        best_trace_ = trace_;
        best_code_ = std::move(code);
      }
      trace_.pop_back();
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : color) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] == 1) ++target;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      std::vector<int> child = color;
      for (std::size_t u = 0; u < n_; ++u) {
        if (child[u] > target || (child[u] == target && u != v)) ++child[u];
      }
      search(std::move(child));
    }
    trace_.pop_back();
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint64_t> trace_;
  std::vector<std::uint64_t> best_trace_;
  std::string best_code_;
};

}  // namespace

CanonicalCert canonical_cert(const Graph& g) { return CanonicalCert{Canonizer(g).run()}; }

Graph canonical_form(const Graph& g) { return parse_graph6(canonical_cert(g).graph6); }

}  // namespace clawcycles
