#ifndef CLAWCYCLES_GRAPH6_HPP
#define CLAWCYCLES_GRAPH6_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "clawcycles/graph.hpp"

namespace clawcycles {

/// Largest order representable in the 4-byte size form.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Parses one graph6 line. A leading ">>graph6<<" header and a trailing
/// CR/LF are accepted. Throws Error{Parse} on malformed input and
/// Error{TooLarge} above kGraph6MaxOrder.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 of the labeled graph, without the newline.
std::string write_graph6(const Graph& g);

}  // namespace clawcycles

#endif  // CLAWCYCLES_GRAPH6_HPP
