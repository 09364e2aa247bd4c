#include "chromzero/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "chromzero/errors.hpp"

namespace chromzero {
namespace {

using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbor counts into every current cell until stable.
void refine(const std::vector<VertexSet>& adj, Cells& cells) {
  const std::size_t n = adj.size();
  while (true) {
    std::vector<VertexSet> cell_mask(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_mask[c] |= VertexSet{1} << v;

    Cells next;
    next.reserve(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> sig(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c)
          sig[c] = std::popcount(adj[static_cast<std::size_t>(v)] & cell_mask[c]);
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<int> group{keyed.front().second};
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(std::move(group));
          group.clear();
        }
        group.push_back(keyed[i].second);
      }
      next.push_back(std::move(group));
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

std::vector<std::uint64_t> certificate(const std::vector<VertexSet>& adj, const std::vector<int>& order) {
  const std::size_t n = order.size();
  std::vector<std::uint64_t> bits((n * (n - 1) / 2 + 63) / 64 + 1, 0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexSet row = adj[static_cast<std::size_t>(order[i])];
    for (std::size_t j = i + 1; j < n; ++j, ++pos) {
      if (row >> order[j] & 1U) bits[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
    }
  }
  return bits;
}

struct Search {
  const std::vector<VertexSet>& adj;
  std::size_t leaf_cap;
  std::size_t leaves = 0;
  bool aborted = false;
  std::optional<CanonicalLabeling> best;

  void visit(Cells cells) {
    if (aborted) return;
    refine(adj, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    }
    if (target == cells.size()) {
      if (++leaves > leaf_cap) {
        aborted = true;
        return;
      }
      std::vector<int> order;
      order.reserve(adj.size());
      for (const auto& cell : cells) order.push_back(cell.front());
      auto bits = certificate(adj, order);
      if (!best || bits < best->form.bits) {
        best = CanonicalLabeling{CanonicalForm{static_cast<int>(adj.size()), std::move(bits)}, std::move(order)};
      }
      return;
    }
    const auto cell = cells[target];
    std::vector<int> tried;
    for (int v : cell) {
      const bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) {
        const VertexSet bu = VertexSet{1} << u;
        const VertexSet bv = VertexSet{1} << v;
        return (adj[static_cast<std::size_t>(u)] & ~bv) == (adj[static_cast<std::size_t>(v)] & ~bu);
      });
      if (twin) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cell)
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      visit(std::move(child));
      if (aborted) return;
    }
  }
};

std::vector<VertexSet> adjacency_masks(const Graph& g) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  return adj;
}

}  // namespace

std::string CanonicalForm::key() const {
  std::string out;
  out.reserve(1 + bits.size() * 8);
  out.push_back(static_cast<char>(n));
  for (std::uint64_t w : bits)
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xFF));
  return out;
}

std::optional<CanonicalLabeling> canonical_labeling(const std::vector<VertexSet>& adjacency, std::size_t leaf_cap) {
  if (adjacency.size() > static_cast<std::size_t>(kMaxMaskVertices)) throw std::invalid_argument("canonical labeling needs at most 64 vertices");
  if (adjacency.empty()) return CanonicalLabeling{CanonicalForm{0, {0}}, {}};
  Search search{adjacency, leaf_cap, 0, false, std::nullopt};
  Cells all(1);
  for (int v = 0; v < static_cast<int>(adjacency.size()); ++v) all.front().push_back(v);
  search.visit(std::move(all));
  if (search.aborted) return std::nullopt;
  return search.best;
}

CanonicalLabeling canonical_labeling(const Graph& g, std::size_t leaf_cap) {
  auto result = canonical_labeling(adjacency_masks(g), leaf_cap);
  if (!result) throw ResourceError("canonical labeling exceeded its leaf cap");
  return *result;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
  const auto labeling = canonical_labeling(g);
  std::vector<Vertex> new_label(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t i = 0; i < labeling.order.size(); ++i) new_label[static_cast<std::size_t>(labeling.order[i])] = static_cast<Vertex>(i);
  return g.relabeled(new_label);
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace chromzero
