#include "chromzero/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace chromzero {

Graph::Graph(int num_vertices) : Graph(num_vertices, std::span<const Edge>{}) {}

Graph::Graph(int num_vertices, std::span<const Edge> edges) : n_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<int> seen(static_cast<std::size_t>(n_), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : neighbors(comp[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

VertexSet Graph::neighbor_mask(Vertex v) const {
  if (n_ > kMaxMaskVertices) throw std::invalid_argument("bitmask routines need at most 64 vertices");
  VertexSet mask = 0;
  for (Vertex w : neighbors(v)) mask |= VertexSet{1} << w;
  return mask;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
    if (index[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("induced: repeated vertex");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    const int a = index[static_cast<std::size_t>(e.u)];
    const int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) sub.push_back(Edge{a, b});
  }
  return Graph(static_cast<int>(vertices.size()), sub);
}

Graph Graph::induced(VertexSet vertices) const {
  const auto list = mask_to_vertices(vertices);
  return induced(std::span<const Vertex>(list));
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) throw std::invalid_argument("relabel: size mismatch");
  std::vector<int> hit(static_cast<std::size_t>(n_), 0);
  for (Vertex l : new_label) {
    if (l < 0 || l >= n_ || hit[static_cast<std::size_t>(l)]++) {
      throw std::invalid_argument("relabel: not a permutation");
    }
  }
  std::vector<Edge> moved;
  moved.reserve(edges_.size());
  for (const Edge& e : edges_) {
    moved.push_back(Edge{new_label[static_cast<std::size_t>(e.u)], new_label[static_cast<std::size_t>(e.v)]});
  }
  return Graph(n_, moved);
}

std::vector<Vertex> mask_to_vertices(VertexSet set) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(set)));
  while (set) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

VertexSet vertices_to_mask(std::span<const Vertex> vertices) {
  VertexSet mask = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxMaskVertices) throw std::invalid_argument("vertex does not fit a 64-bit mask");
    mask |= VertexSet{1} << v;
  }
  return mask;
}

}  // namespace chromzero
