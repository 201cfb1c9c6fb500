#ifndef CLAWCYCLES_CANONICAL_HPP
#define CLAWCYCLES_CANONICAL_HPP

#include <string>

#include "clawcycles/graph.hpp"

namespace clawcycles {

/// Isomorphism certificate: the graph6 line of a canonical relabeling.
/// Equal certificates <=> isomorphic graphs.
struct CanonicalCert {
  std::string graph6;

  friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;
};

/// Colour refinement plus individualization, keeping the lexicographically
/// least leaf among those with the least refinement trace. Exact; the
/// search is exponential only for highly symmetric inputs.
CanonicalCert canonical_cert(const Graph& g);

/// The canonical relabeling itself (parse of the certificate).
Graph canonical_form(const Graph& g);

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_cert(a) == canonical_cert(b);
}

}  // namespace clawcycles

#endif  // CLAWCYCLES_CANONICAL_HPP
