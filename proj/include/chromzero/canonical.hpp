#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromzero/graph.hpp"

namespace chromzero {

/// Isomorphism-invariant certificate: vertex count plus the upper triangle of
/// the adjacency matrix under the canonical ordering, packed into words.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> bits;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  /// Compact byte string, usable as a hash-map key.
  std::string key() const;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> order;
};

/// Canonical labeling of a graph given by adjacency bitmasks (n <= 64).
///
/// Individualization-refinement: equitable colour refinement, branching on the
/// first smallest non-singleton cell, keeping the lexicographically least leaf
/// certificate. Only one representative per class of twins (vertices with equal
/// neighborhoods outside each other) is branched on. Returns nullopt when the
/// search visits more than `leaf_cap` leaves.
std::optional<CanonicalLabeling> canonical_labeling(const std::vector<VertexSet>& adjacency,
                                                    std::size_t leaf_cap = 1'000'000);

/// Throws ResourceError when the leaf cap is hit.
CanonicalLabeling canonical_labeling(const Graph& g, std::size_t leaf_cap = 1'000'000);
CanonicalForm canonical_form(const Graph& g);

/// The graph rebuilt in its canonical labeling.
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace chromzero
