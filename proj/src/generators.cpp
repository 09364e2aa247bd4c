#include "chromzero/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace chromzero {

std::optional<GraphFamily> parse_family(std::string_view name) {
  if (name == "complete") return GraphFamily::complete;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "path") return GraphFamily::path;
  if (name == "star") return GraphFamily::star;
  if (name == "grid") return GraphFamily::grid;
  if (name == "petersen") return GraphFamily::petersen;
  if (name == "random-regular") return GraphFamily::random_regular;
  return std::nullopt;
}

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::complete: return "complete";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::path: return "path";
    case GraphFamily::star: return "star";
    case GraphFamily::grid: return "grid";
    case GraphFamily::petersen: return "petersen";
    case GraphFamily::random_regular: return "random-regular";
  }
  return "unknown";
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs length >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph(rows * cols, edges);
}

Graph petersen_graph() {
  // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = pairs[static_cast<std::size_t>(i)];
      const auto [c, d] = pairs[static_cast<std::size_t>(j)];
      if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
    }
  }
  return Graph(10, edges);
}

namespace {

// Rejection sampling on the raw engine output keeps draws identical across
// standard libraries, unlike std::uniform_int_distribution.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

}  // namespace

Graph random_regular_graph(int n, int degree, std::uint64_t seed) {
  if (n < 1 || degree < 0 || degree >= n) throw std::invalid_argument("random-regular needs 0 <= degree < n");
  if ((static_cast<long long>(n) * degree) % 2 != 0) throw std::invalid_argument("random-regular needs degree*n even");
  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 100000;
  std::vector<int> stubs;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < degree; ++k) stubs.push_back(v);
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::swap(stubs[i - 1], stubs[static_cast<std::size_t>(bounded(rng, i))]);
    }
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      const int u = std::min(stubs[i], stubs[i + 1]);
      const int v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v && seen.insert(Edge{u, v}).second;
    }
    if (simple) {
      const std::vector<Edge> edges(seen.begin(), seen.end());
      return Graph(n, edges);
    }
  }
  throw std::runtime_error("random-regular: no simple pairing found");
}

Graph generate_graph(GraphFamily family, const GeneratorParams& p) {
  switch (family) {
    case GraphFamily::complete: return complete_graph(p.n);
    case GraphFamily::cycle: return cycle_graph(p.n);
    case GraphFamily::path: return path_graph(p.n);
    case GraphFamily::star: return star_graph(p.n);
    case GraphFamily::grid: return grid_graph(p.n, p.cols > 0 ? p.cols : p.n);
    case GraphFamily::petersen: return petersen_graph();
    case GraphFamily::random_regular: return random_regular_graph(p.n, p.degree, p.seed);
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace chromzero
