#include "chromzero/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "chromzero/canonical.hpp"
#include "chromzero/errors.hpp"

namespace chromzero {
namespace {

using Masks = std::vector<VertexSet>;

// Canonical labeling is only a cache key here, so give up early on highly
// symmetric graphs and fall back to the labeled key.
constexpr std::size_t kMemoLeafCap = 4096;

int edge_count(const Masks& adj) {
  int twice = 0;
  for (VertexSet m : adj) twice += std::popcount(m);
  return twice / 2;
}

VertexSet compact_bits(VertexSet mask, int removed) {
  const VertexSet low = (VertexSet{1} << removed) - 1;
  return (mask & low) | ((mask >> (removed + 1)) << removed);
}

Masks remove_vertex(const Masks& adj, int v) {
  Masks out;
  out.reserve(adj.size() - 1);
  for (std::size_t x = 0; x < adj.size(); ++x)
    if (static_cast<int>(x) != v) out.push_back(compact_bits(adj[x], v));
  return out;
}

Masks extract(const Masks& adj, VertexSet keep) {
  Masks out;
  const auto vertices = mask_to_vertices(keep);
  for (Vertex v : vertices) {
    VertexSet row = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (adj[static_cast<std::size_t>(v)] >> vertices[i] & 1U) row |= VertexSet{1} << i;
    out.push_back(row);
  }
  return out;
}

std::vector<VertexSet> component_masks(const Masks& adj) {
  std::vector<VertexSet> comps;
  VertexSet unseen = adj.size() == 64 ? ~VertexSet{0} : (VertexSet{1} << adj.size()) - 1;
  while (unseen) {
    VertexSet comp = unseen & (~unseen + 1);
    VertexSet frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexSet fresh = adj[static_cast<std::size_t>(v)] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    comps.push_back(comp);
    unseen &= ~comp;
  }
  return comps;
}

IntPolynomial q_minus(long long k) { return IntPolynomial{-k, 1}; }

IntPolynomial power(const IntPolynomial& base, int e) {
  IntPolynomial out{1};
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

std::string raw_key(const Masks& adj) {
  std::string key(1, 'R');
  key.push_back(static_cast<char>(adj.size()));
  for (VertexSet m : adj)
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((m >> (8 * b)) & 0xFF));
  return key;
}

}  // namespace

ChromaticSolver::ChromaticSolver(int max_vertices) : max_vertices_(max_vertices) {
  if (max_vertices < 0 || max_vertices > kMaxMaskVertices) throw std::invalid_argument("vertex cap must be in 0..64");
}

IntPolynomial ChromaticSolver::operator()(const Graph& g) {
  if (g.num_vertices() > max_vertices_) {
    throw ResourceError("chromatic polynomial: " + std::to_string(g.num_vertices()) + " vertices exceeds the cap of " +
                        std::to_string(max_vertices_));
  }
  Masks adj(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  return solve(std::move(adj));
}

IntPolynomial ChromaticSolver::solve(Masks adj) {
  const int n = static_cast<int>(adj.size());
  if (edge_count(adj) == 0) return IntPolynomial::monomial(n);
  const auto comps = component_masks(adj);
  if (comps.size() == 1) return solve_connected(std::move(adj));
  IntPolynomial product{1};
  for (VertexSet comp : comps) product *= solve_connected(extract(adj, comp));
  return product;
}

IntPolynomial ChromaticSolver::solve_connected(Masks adj) {
  const int n = static_cast<int>(adj.size());
  const int m = edge_count(adj);
  if (n == 1) return IntPolynomial::monomial(1);
  if (m == n - 1) return IntPolynomial::monomial(1) * power(q_minus(1), n - 1);
  if (m == n * (n - 1) / 2) {
    IntPolynomial falling = IntPolynomial::monomial(1);
    for (int k = 1; k < n; ++k) falling *= q_minus(k);
    return falling;
  }
  for (int v = 0; v < n; ++v) {
    if (std::popcount(adj[static_cast<std::size_t>(v)]) == 1) return q_minus(1) * solve_connected(remove_vertex(adj, v));
  }

  const auto labeling = canonical_labeling(adj, kMemoLeafCap);
  const std::string key = labeling ? "C" + labeling->form.key() : raw_key(adj);
  if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;

  // Branch on an edge at a minimum-degree vertex, towards its busiest neighbor.
  int u = 0;
  for (int v = 1; v < n; ++v)
    if (std::popcount(adj[static_cast<std::size_t>(v)]) < std::popcount(adj[static_cast<std::size_t>(u)])) u = v;
  int w = -1;
  for (VertexSet rest = adj[static_cast<std::size_t>(u)]; rest; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    if (w < 0 || std::popcount(adj[static_cast<std::size_t>(x)]) > std::popcount(adj[static_cast<std::size_t>(w)])) w = x;
  }

  Masks deleted = adj;
  deleted[static_cast<std::size_t>(u)] &= ~(VertexSet{1} << w);
  deleted[static_cast<std::size_t>(w)] &= ~(VertexSet{1} << u);

  Masks merged = adj;
  merged[static_cast<std::size_t>(u)] |= merged[static_cast<std::size_t>(w)];
  for (auto& row : merged) {
    if (row >> w & 1U) row |= VertexSet{1} << u;
  }
  merged[static_cast<std::size_t>(u)] &= ~(VertexSet{1} << u);
  merged = remove_vertex(merged, w);

  IntPolynomial result = solve(std::move(deleted)) - solve_connected(std::move(merged));
  memo_.emplace(key, result);
  return result;
}

IntPolynomial chromatic_polynomial(const Graph& g, int max_vertices) {
  ChromaticSolver solver(max_vertices);
  return solver(g);
}

namespace {

std::uint64_t count_from(const Graph& g, long long q, int v, std::vector<long long>& color) {
  if (v == g.num_vertices()) return 1;
  std::uint64_t total = 0;
  for (long long c = 0; c < q; ++c) {
    bool clash = false;
    for (Vertex w : g.neighbors(v)) {
      if (w < v && color[static_cast<std::size_t>(w)] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[static_cast<std::size_t>(v)] = c;
    total += count_from(g, q, v + 1, color);
  }
  return total;
}

}  // namespace

BigInt count_proper_colorings(const Graph& g, long long q, const ColoringCaps& caps) {
  if (q < 0) throw std::invalid_argument("number of colors must be non-negative");
  if (g.num_vertices() > caps.max_vertices || q > caps.max_colors) {
    throw ResourceError("coloring enumeration beyond caps (n <= " + std::to_string(caps.max_vertices) +
                        ", q <= " + std::to_string(caps.max_colors) + ")");
  }
  std::vector<long long> color(static_cast<std::size_t>(g.num_vertices()), -1);
  return BigInt(count_from(g, q, 0, color));
}

}  // namespace chromzero
