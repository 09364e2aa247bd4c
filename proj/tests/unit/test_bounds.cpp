#include <doctest.h>

#include <cmath>

#include "chromzero/bounds.hpp"
#include "chromzero/corpus.hpp"
#include "chromzero/generators.hpp"
#include "chromzero/minimize.hpp"
#include "chromzero/parallel.hpp"

using namespace chromzero;

namespace {

// |round(v, 2) - cell| <= 0.01, compared in integer hundredths.
bool within_one_hundredth(double value, double cell) {
  return std::llabs(std::llround(round_half_up(value, 2) * 100) - std::llround(cell * 100)) <= 1;
}

}  // namespace

TEST_CASE("minimizer") {
  const auto r = minimize_on_interval([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, 0.0, 1.0);
  CHECK(r.argmin == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.tolerance_met);
  CHECK(r.lo <= r.argmin);
  CHECK(r.argmin <= r.hi);

  // Two wells; golden section alone from the full interval would be misled.
  const auto two = minimize_on_interval([](double x) { return std::cos(14 * x) + 0.1 * x; }, 0.0, 2.0);
  CHECK(two.argmin == doctest::Approx(M_PI / 14).epsilon(1e-3));

  // Divergent ends are never sampled.
  const auto edge = minimize_on_interval([](double x) { return 1.0 / (x * (1.0 - x)); }, 0.0, 1.0);
  CHECK(edge.value == doctest::Approx(4.0));

  CHECK(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, 0.0, 2.0), std::invalid_argument);
}

TEST_CASE("comparison table values") {
  const int deltas[] = {2, 3, 4, 6};
  const double sokal[] = {13.23, 21.14, 29.08, 44.98};
  const double cstar[] = {10.72, 17.57, 24.44, 38.24};
  const double complete[] = {9.90, 15.75, 21.58, 33.24};
  for (int i = 0; i < 4; ++i) {
    CHECK(within_one_hundredth(sokal_bound(deltas[i]).value, sokal[i]));
    CHECK(within_one_hundredth(cstar_delta(deltas[i]).value, cstar[i]));
    CHECK(within_one_hundredth(complete_graph_bound(deltas[i]), complete[i]));
  }
  CHECK(complete_graph_bound(2) == doctest::Approx(1.0 / (5.0 - 2.0 * std::sqrt(6.0))));
  CHECK(complete_graph_bound(4) == doctest::Approx(9.0 / (11.0 - 2.0 * std::sqrt(28.0))));
  CHECK_THROWS_AS(sokal_bound(1), std::invalid_argument);
  CHECK_THROWS_AS(cstar_delta(1), std::invalid_argument);
}

TEST_CASE("limiting constants") {
  const Constants c = constants();
  CHECK(c.k.value == doctest::Approx(7.963906).epsilon(1e-6));
  CHECK(c.k_star.value > 6.906);
  CHECK(c.k_star.value < 6.908);
  CHECK(c.k_star.argmin == doctest::Approx(1.3702).epsilon(1e-4));
  const double y = 1.3702;
  CHECK(y / ((2 - y) * std::log(y)) >= c.k_star.value);
}

TEST_CASE("x-form and a-form agree") {
  for (int d = 2; d <= 20; ++d) CHECK(cstar_delta(d).value == doctest::Approx(cstar_delta_a_form(d).value).epsilon(1e-8));
}

TEST_CASE("improvement ordering and monotone ratios") {
  double prev = 0.0;
  double prev_complete = 0.0;
  for (int d = 2; d <= 20; ++d) {
    const double cs = cstar_delta(d).value;
    CHECK(cs < sokal_bound(d).value);
    CHECK(complete_graph_bound(d) < cs);
    CHECK(cs / d >= prev);
    CHECK(complete_graph_bound(d) / d >= prev_complete);
    prev = cs / d;
    prev_complete = complete_graph_bound(d) / d;
  }
  CHECK(prev < constants().k_star.value);
  CHECK(prev_complete < 1.0 / (3.0 - 2.0 * std::sqrt(2.0)));
}

TEST_CASE("profile bound on named graphs") {
  const auto k4 = cstar_graph(complete_graph(4));
  REQUIRE(k4.c_star_graph);
  CHECK(*k4.c_star_graph == doctest::Approx(15.746).epsilon(1e-4));
  CHECK(cstar_profile(*k4.profile).argmin == doctest::Approx((-6 + std::sqrt(60.0)) / 12).epsilon(1e-7));
  CHECK(*cstar_graph(complete_graph(3)).c_star_graph == doctest::Approx(9.899).epsilon(1e-4));
  CHECK(*cstar_graph(cycle_graph(5)).c_star_graph == doctest::Approx(cstar_delta(2).value).epsilon(1e-10));
  CHECK(*cstar_graph(petersen_graph()).c_star_graph == doctest::Approx(cstar_delta(3).value).epsilon(1e-10));
  for (int d = 2; d <= 8; ++d)
    CHECK(*cstar_graph(complete_graph(d + 1)).c_star_graph == doctest::Approx(complete_graph_bound(d)).epsilon(1e-9));
}

TEST_CASE("degenerate degrees") {
  const auto edge = cstar_graph(complete_graph(2));
  CHECK(edge.delta == 1);
  CHECK_FALSE(edge.c_star_graph.has_value());
  CHECK(edge.zero_free_radius() == doctest::Approx(cstar_delta(2).value));
  const auto point = verify_zero_free(Graph(1));
  CHECK(point.zero_free_verified);
  CHECK(*point.max_root_modulus == 0.0);
  CHECK_THROWS_AS(cstar_graph(Graph(0)), std::invalid_argument);
}

TEST_CASE("series form agrees with the closed form") {
  for (const Graph& g : {complete_graph(3), complete_graph(4), complete_graph(5), cycle_graph(5), petersen_graph(),
                         star_graph(4)}) {
    const auto r = cstar_graph_series(g);
    REQUIRE(r.c_star_graph_series);
    CHECK(std::abs(*r.c_star_graph_series - *r.c_star_graph) < 1e-3);
  }
}

TEST_CASE("zero-free verification") {
  const auto k3 = verify_zero_free(complete_graph(3), "K3");
  CHECK(*k3.max_root_modulus == doctest::Approx(2.0));
  CHECK(k3.zero_free_verified);
  CHECK(k3.ordering_holds());
  CHECK(*verify_zero_free(cycle_graph(5)).max_root_modulus == doctest::Approx(2.0));
  const auto petersen = verify_zero_free(petersen_graph());
  CHECK(petersen.zero_free_verified);
  CHECK(*petersen.max_root_modulus < 17.57);
  CHECK(*petersen.max_residual < 1e-10);
}

TEST_CASE("parallel map keeps input order") {
  std::vector<int> items(100);
  for (int i = 0; i < 100; ++i) items[static_cast<std::size_t>(i)] = i;
  const auto squares = parallel_map(items, [](int x) { return x * x; }, 4);
  for (int i = 0; i < 100; ++i) CHECK(squares[static_cast<std::size_t>(i)] == i * i);
  CHECK_THROWS_AS(parallel_map(items, [](int x) { if (x == 7) throw std::runtime_error("seven"); return x; }, 3),
                  std::runtime_error);
}

TEST_CASE("half-up rounding") {
  CHECK(round_half_up(0.125, 2) == doctest::Approx(0.13));
  CHECK(round_half_up(33.2481, 2) == doctest::Approx(33.25));
  CHECK(round_half_up(2.0, 2) == 2.0);
}
