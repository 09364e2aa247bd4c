#include "chromzero/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chromzero/chromatic.hpp"
#include "chromzero/roots.hpp"
#include "chromzero/tree_series.hpp"

namespace chromzero {
namespace {

// Upper end for searches in a; every a-objective diverges long before this.
constexpr double kMaxA = 20.0;

void require_delta(int delta) {
  if (delta < 2) throw std::invalid_argument("bound needs delta >= 2");
}

}  // namespace

OptimizationResult sokal_bound(int delta) {
  require_delta(delta);
  const double d = delta;
  return minimize_on_interval(
      [d](double a) {
        const double s = 1.0 + a * std::exp(-a);
        return std::exp(a) * std::pow(s, 1.0 - 1.0 / d) / std::expm1(std::log(s) / d);
      },
      0.0, kMaxA);
}

OptimizationResult cstar_delta(int delta) {
  require_delta(delta);
  const double d = delta;
  return minimize_on_interval(
      [d](double x) { return std::pow(1.0 + x, d - 1.0) / (x * (2.0 - std::pow(1.0 + x, d))); }, 0.0,
      std::expm1(std::log(2.0) / d));
}

OptimizationResult cstar_delta_a_form(int delta) {
  require_delta(delta);
  const double d = delta;
  return minimize_on_interval(
      [d](double a) {
        const double s = 2.0 - std::exp(-a);
        return std::exp(a) * std::pow(s, 1.0 - 1.0 / d) / std::expm1(std::log(s) / d);
      },
      0.0, kMaxA);
}

double complete_graph_bound(int delta) {
  require_delta(delta);
  const double d = delta;
  return (d - 1.0) * (d - 1.0) / (3.0 * d - 1.0 - 2.0 * std::sqrt(2.0 * d * d - d));
}

Constants constants() {
  Constants c;
  c.k = minimize_on_interval(
      [](double a) {
        const double l = std::log1p(a * std::exp(-a));
        return std::exp(a + l) / l;
      },
      0.0, kMaxA);
  c.k_star = minimize_on_interval([](double y) { return y / ((2.0 - y) * std::log(y)); }, 1.0, 2.0);
  return c;
}

OptimizationResult cstar_profile(const NeighborhoodProfile& profile) {
  const IntPolynomial z = profile.z();
  const IntPolynomial zt = profile.z_tilde();
  const double top = inverse_increasing(z, 2.0);
  return minimize_on_interval([&](double x) { return zt.evaluate(x) / ((2.0 - z.evaluate(x)) * x); }, 0.0, top);
}

OptimizationResult cstar_profile_series(const NeighborhoodProfile& profile, int N) {
  if (N < 2) throw std::invalid_argument("series order must be at least 2");
  const TruncatedSeries t = solve_tree_series(profile.z_tilde(), profile.z(), N).t;
  std::vector<double> c;
  for (const auto& x : t.coefficients()) c.push_back(x.convert_to<double>());

  const SeriesRadius radius = series_radius(profile.z_tilde());
  const double w_max = std::isfinite(radius.r) ? 0.9 * radius.r : std::numeric_limits<double>::infinity();
  const double last = c[c.size() - 1];
  const double before = c[c.size() - 2];
  const double rho = before > 0.0 ? 1.1 * last / before : 0.0;

  // sum_n t̄_n w^(n-1) with the geometric tail closing it.
  auto series = [&](double w) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * w + c[k];
    if (last == 0.0) return acc;
    const double r = rho * w;
    // An uncertified tail makes w inadmissible.
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return acc + last * std::pow(w, static_cast<double>(N - 1)) * r / (1.0 - r);
  };

  auto kappa = [&](double a) {
    const double b = 2.0 - std::exp(-a);
    // Largest admissible w with series(w) <= b; the series increases in w.
    double hi = std::isfinite(w_max) ? w_max : 1.0;
    if (!std::isfinite(w_max)) {
      while (series(hi) <= b) hi *= 2.0;
    } else if (series(hi) <= b) {
      return std::exp(a) / hi;
    }
    double lo = 0.0;
    while (hi - lo > 1e-13 * hi) {
      const double mid = 0.5 * (lo + hi);
      (series(mid) <= b ? lo : hi) = mid;
    }
    return std::exp(a) / lo;
  };
  try {
    return minimize_on_interval(kappa, 0.0, kMaxA);
  } catch (const std::domain_error&) {
    throw std::domain_error("series tail ratio reached 1 for every admissible point; bound inconclusive");
  }
}

double fp_parameter(const NeighborhoodProfile& profile) {
  const double x = cstar_profile(profile).argmin;
  return -std::log(2.0 - profile.z().evaluate(x));
}

bool BoundReport::ordering_holds() const {
  constexpr double slack = 1e-9;
  const bool lower = !c_star_graph || *c_star_graph <= c_star_delta * (1.0 + slack);
  return lower && c_star_delta <= c_sokal * (1.0 + slack);
}

double BoundReport::zero_free_radius() const { return c_star_graph.value_or(c_star_delta); }

BoundReport cstar_graph(const Graph& g, const std::string& graph_id) {
  if (g.num_vertices() == 0) throw std::invalid_argument("graph has no vertices");
  BoundReport report;
  report.graph_id = graph_id;
  report.delta = g.max_degree();
  if (report.delta <= 1) {
    report.c_sokal = sokal_bound(2).value;
    report.c_star_delta = cstar_delta(2).value;
    if (report.delta == 1) report.profile = neighborhood_profile(g);
    return report;
  }
  report.profile = neighborhood_profile(g);
  report.c_sokal = sokal_bound(report.delta).value;
  report.c_star_delta = cstar_delta(report.delta).value;
  report.c_star_graph = cstar_profile(*report.profile).value;
  return report;
}

BoundReport cstar_graph_series(const Graph& g, int N, const std::string& graph_id) {
  BoundReport report = cstar_graph(g, graph_id);
  if (report.c_star_graph) report.c_star_graph_series = cstar_profile_series(*report.profile, N).value;
  return report;
}

BoundReport verify_zero_free(const Graph& g, const std::string& graph_id, int max_vertices, double tol) {
  BoundReport report = cstar_graph(g, graph_id);
  report.chromatic = chromatic_polynomial(g, max_vertices);
  const RootSet roots = polynomial_roots(*report.chromatic, tol);
  report.max_root_modulus = roots.max_modulus;
  report.max_residual = roots.residuals.empty() ? 0.0 : *std::max_element(roots.residuals.begin(), roots.residuals.end());
  report.zero_free_verified = roots.max_modulus < report.zero_free_radius() && report.ordering_holds();
  return report;
}

double round_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::floor(value * scale + 0.5) / scale;
}

}  // namespace chromzero
