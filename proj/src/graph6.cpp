#include "clawcycles/graph6.hpp"

#include <vector>

namespace clawcycles {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, "graph6: " + what); }

int sextet(char c, std::size_t pos) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    fail("character code " + std::to_string(static_cast<unsigned char>(c)) + " at offset " +
         std::to_string(pos) + " outside 63..126");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) fail("empty line");

  // Size prefix: one byte for n <= 62, 126 + 3 bytes up to 2^18-1, 126 126 + 6 bytes beyond.
  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(sextet(line[0], 0));
    pos = 1;
  } else {
    std::size_t digits = 3;
    pos = 1;
    if (line.size() > 1 && line[1] == '~') {
      digits = 6;
      pos = 2;
    }
    if (line.size() < pos + digits) fail("truncated length prefix");
    for (std::size_t i = 0; i < digits; ++i, ++pos) {
      n = (n << 6) | static_cast<std::size_t>(sextet(line[pos], pos));
    }
  }
  if (n > kGraph6MaxOrder) {
    throw Error(ErrorKind::TooLarge, "graph6: order " + std::to_string(n) + " exceeds " +
                                         std::to_string(kGraph6MaxOrder));
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    fail("expected " + std::to_string(bytes) + " adjacency bytes, found " + std::to_string(line.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(line[pos + k / 6], pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(line.back(), line.size() - 1);
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) fail("nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Error(ErrorKind::TooLarge, "graph6: order " + std::to_string(n) + " exceeds " +
                                         std::to_string(kGraph6MaxOrder));
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace clawcycles
