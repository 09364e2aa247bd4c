#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "chromzero/chromatic.hpp"
#include "chromzero/corpus.hpp"
#include "chromzero/errors.hpp"
#include "chromzero/generators.hpp"
#include "chromzero/neighborhood.hpp"
#include "chromzero/roots.hpp"

using namespace chromzero;

namespace {

// G with edge e removed.
Graph deleted(const Graph& g, Edge e) {
  std::vector<Edge> rest;
  for (const Edge& f : g.edges())
    if (!(f == e)) rest.push_back(f);
  return Graph(g.num_vertices(), rest);
}

// G with the endpoints of e merged into e.u; e.v disappears and labels above it shift down.
Graph contracted(const Graph& g, Edge e) {
  auto relabel = [&](Vertex x) {
    if (x == e.v) x = e.u;
    return x > e.v ? x - 1 : x;
  };
  std::vector<Edge> merged;
  for (const Edge& f : g.edges()) {
    const Vertex a = relabel(f.u);
    const Vertex b = relabel(f.v);
    if (a != b) merged.push_back({a, b});
  }
  return Graph(g.num_vertices() - 1, merged);
}

// Coefficients of the unique polynomial of degree <= n through (k, values[k]), k = 0..n.
std::vector<Rational> interpolate(const std::vector<BigInt>& values) {
  const std::size_t m = values.size();
  std::vector<Rational> out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * static_cast<long long>(j);
      }
      basis = std::move(next);
      denom *= static_cast<long long>(i) - static_cast<long long>(j);
    }
    for (std::size_t k = 0; k < m; ++k) out[k] += basis[k] * Rational(values[i]) / denom;
  }
  return out;
}

double min_distance(const std::vector<std::complex<double>>& roots, std::complex<double> z) {
  double best = 1e300;
  for (const auto& r : roots) best = std::min(best, std::abs(r - z));
  return best;
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(chromatic_polynomial(complete_graph(3)) == IntPolynomial{0, 2, -3, 1});
  CHECK(chromatic_polynomial(Graph(3)) == IntPolynomial::monomial(3));
  // trees: q (q-1)^(n-1)
  CHECK(chromatic_polynomial(path_graph(5)) == IntPolynomial::monomial(1) * IntPolynomial::binomial_power(-1, 4));
  CHECK(chromatic_polynomial(star_graph(4)) == IntPolynomial::monomial(1) * IntPolynomial::binomial_power(-1, 4));
  // cycles: (q-1)^n + (-1)^n (q-1)
  for (int n = 3; n <= 8; ++n) {
    IntPolynomial expected = IntPolynomial::binomial_power(-1, n);
    const IntPolynomial linear{-1, 1};
    expected += n % 2 == 0 ? linear : -linear;
    CHECK(chromatic_polynomial(cycle_graph(n)) == expected);
  }
  CHECK(chromatic_polynomial(complete_graph(4)).to_string() == "q^4 - 6*q^3 + 11*q^2 - 6*q");
}

TEST_CASE("Petersen chromatic polynomial") {
  const IntPolynomial p = chromatic_polynomial(petersen_graph());
  CHECK(p.degree() == 10);
  CHECK(p.coefficient(9) == -15);
  CHECK(p.evaluate(BigInt(3)) == 120);
  CHECK(p.evaluate(BigInt(2)) == 0);
}

TEST_CASE("deletion-contraction identity holds on every edge") {
  ChromaticSolver solve;
  for (const Graph& g : connected_graphs(5)) {
    for (const Edge& e : g.edges()) CHECK(solve(g) == solve(deleted(g, e)) - solve(contracted(g, e)));
  }
}

TEST_CASE("polynomial matches interpolated coloring counts") {
  ChromaticSolver solve;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      std::vector<BigInt> counts;
      for (int q = 0; q <= n; ++q) counts.push_back(count_proper_colorings(g, q, {10, 8}));
      const auto coeffs = interpolate(counts);
      const IntPolynomial p = solve(g);
      for (int k = 0; k <= n; ++k) CHECK(coeffs[static_cast<std::size_t>(k)] == Rational(p.coefficient(k)));
    }
  }
}

TEST_CASE("solver caps") {
  CHECK_THROWS_AS(chromatic_polynomial(complete_graph(6), 5), ResourceError);
  CHECK_THROWS_AS(count_proper_colorings(complete_graph(11), 3), ResourceError);
  CHECK_THROWS_AS(count_proper_colorings(complete_graph(3), 7), ResourceError);
}

TEST_CASE("square-free decomposition") {
  // q (q-1)^3 (q-2)^2
  const IntPolynomial p =
      IntPolynomial::monomial(1) * IntPolynomial::binomial_power(-1, 3) * IntPolynomial::binomial_power(-2, 2);
  const auto parts = square_free_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::pair<IntPolynomial, int>{IntPolynomial{0, 1}, 1});
  CHECK(parts[1] == std::pair<IntPolynomial, int>{IntPolynomial{-2, 1}, 2});
  CHECK(parts[2] == std::pair<IntPolynomial, int>{IntPolynomial{-1, 1}, 3});
}

TEST_CASE("roots of known chromatic polynomials") {
  SUBCASE("K4 has roots 0..3") {
    const RootSet r = polynomial_roots(chromatic_polynomial(complete_graph(4)));
    for (int k = 0; k < 4; ++k) CHECK(min_distance(r.roots, k) < 1e-12);
    CHECK(r.max_modulus == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("C5 has roots 0, 1, 2 and 1 +- i") {
    const RootSet r = polynomial_roots(chromatic_polynomial(cycle_graph(5)));
    CHECK(r.roots.size() == 5);
    for (std::complex<double> z : {std::complex<double>(0, 0), {1, 0}, {2, 0}, {1, 1}, {1, -1}})
      CHECK(min_distance(r.roots, z) < 1e-12);
    CHECK(r.max_modulus == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("repeated roots keep their multiplicity") {
    const RootSet r = polynomial_roots(chromatic_polynomial(path_graph(6)));
    CHECK(std::count_if(r.roots.begin(), r.roots.end(), [](auto z) { return std::abs(z - 1.0) < 1e-12; }) == 5);
  }
  SUBCASE("residuals are small and roots come in conjugate pairs") {
    const RootSet r = polynomial_roots(chromatic_polynomial(petersen_graph()));
    for (double res : r.residuals) CHECK(res < 1e-10);
    for (const auto& z : r.roots) CHECK(min_distance(r.roots, std::conj(z)) < 1e-12);
  }
  CHECK_THROWS_AS(polynomial_roots(IntPolynomial{5}), std::invalid_argument);
}

TEST_CASE("invariants under relabeling") {
  std::mt19937_64 rng(17);
  const std::vector<Graph> graphs = {petersen_graph(), grid_graph(3, 3), random_regular_graph(10, 3, 4),
                                     random_regular_graph(12, 4, 9)};
  for (const Graph& g : graphs) {
    const IntPolynomial p = chromatic_polynomial(g);
    const auto profile = neighborhood_profile(g);
    std::vector<Vertex> perm(static_cast<std::size_t>(g.num_vertices()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = g.relabeled(perm);
      CHECK(chromatic_polynomial(h) == p);
      CHECK(neighborhood_profile(h) == profile);
    }
  }
}

TEST_CASE("chromatic polynomial coefficient structure") {
  // Leading 1, next -|E|, signs alternate, no constant term.
  for (const Graph& g : connected_graphs(6)) {
    const IntPolynomial p = chromatic_polynomial(g);
    CHECK(p.coefficient(6) == 1);
    CHECK(p.coefficient(5) == -g.num_edges());
    CHECK(p.coefficient(0) == 0);
    for (int k = 1; k <= 6; ++k) CHECK((k % 2 == 0 ? p.coefficient(k) >= 0 : p.coefficient(k) <= 0));
  }
}
