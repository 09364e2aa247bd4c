#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>

#include "chromzero/graph.hpp"
#include "chromzero/polynomial.hpp"

namespace chromzero {

/// Deletion–contraction with memoization on canonical forms.
///
/// Reductions applied before branching: edgeless → q^n, disconnected → product
/// over components, tree → q(q-1)^(n-1), complete → falling factorial, a
/// pendant vertex contributes a factor (q-1). The memo lives as long as the
/// solver, so reusing one solver across a corpus shares work between graphs.
/// Not thread-safe; use one solver per thread.
class ChromaticSolver {
 public:
  explicit ChromaticSolver(int max_vertices = 18);

  IntPolynomial operator()(const Graph& g);

  std::size_t cache_size() const noexcept { return memo_.size(); }

 private:
  IntPolynomial solve(std::vector<VertexSet> adj);
  IntPolynomial solve_connected(std::vector<VertexSet> adj);

  int max_vertices_;
  std::unordered_map<std::string, IntPolynomial> memo_;
};

/// Throws ResourceError when g has more than max_vertices vertices.
IntPolynomial chromatic_polynomial(const Graph& g, int max_vertices = 18);

struct ColoringCaps {
  int max_vertices = 10;
  long long max_colors = 6;
};

/// Exhaustive count of proper q-colorings by backtracking over assignments.
/// Independent of the polynomial route; used as its oracle.
BigInt count_proper_colorings(const Graph& g, long long q, const ColoringCaps& caps = {});

}  // namespace chromzero
