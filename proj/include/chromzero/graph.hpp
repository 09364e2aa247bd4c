#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace chromzero {

using Vertex = int;

/// Bitmask over vertex labels; only valid for graphs with at most 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense label space 0..n-1.
///
/// Immutable once built: the constructor normalizes every edge to u < v, drops
/// repeated pairs and rejects self-loops or out-of-range endpoints with
/// std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  Graph(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  /// Sorted, each with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const noexcept { return max_degree_; }
  bool adjacent(Vertex u, Vertex v) const;

  bool is_connected() const;
  std::vector<std::vector<Vertex>> components() const;

  /// Neighborhood as a bitmask. Requires num_vertices() <= 64.
  VertexSet neighbor_mask(Vertex v) const;

  /// Subgraph induced on `vertices`; vertex vertices[i] becomes label i.
  Graph induced(std::span<const Vertex> vertices) const;
  Graph induced(VertexSet vertices) const;

  /// Relabels vertex v as new_label[v]; new_label must be a permutation.
  Graph relabeled(std::span<const Vertex> new_label) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

std::vector<Vertex> mask_to_vertices(VertexSet set);
VertexSet vertices_to_mask(std::span<const Vertex> vertices);

}  // namespace chromzero
