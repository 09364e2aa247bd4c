#pragma once

#include <optional>
#include <string>

#include "chromzero/graph.hpp"
#include "chromzero/minimize.hpp"
#include "chromzero/neighborhood.hpp"
#include "chromzero/polynomial.hpp"

namespace chromzero {

/// Sokal's radius: min over a > 0 of e^a (1+ae^-a)^(1-1/Δ) / ((1+ae^-a)^(1/Δ) - 1).
OptimizationResult sokal_bound(int delta);

/// min over 0 < x < 2^(1/Δ) - 1 of (1+x)^(Δ-1) / (x (2 - (1+x)^Δ)).
OptimizationResult cstar_delta(int delta);

/// The same constant in the variable a, with 2 - e^-a = (1+x)^Δ:
/// min over a > 0 of e^a (2-e^-a)^(1-1/Δ) / ((2-e^-a)^(1/Δ) - 1).
OptimizationResult cstar_delta_a_form(int delta);

/// (Δ-1)^2 / (3Δ - 1 - 2 sqrt(2Δ^2 - Δ)), the profile bound of K_{Δ+1} in closed form.
double complete_graph_bound(int delta);

struct Constants {
  OptimizationResult k;       ///< lim sokal_bound(Δ)/Δ
  OptimizationResult k_star;  ///< lim cstar_delta(Δ)/Δ, minimized over y in (1, 2)
};
Constants constants();

/// min over 0 < x < Z^-1(2) of Z~(x) / ((2 - Z(x)) x).
OptimizationResult cstar_profile(const NeighborhoodProfile& profile);

/// The same constant from the tree counts: for each a, the least κ with
/// sum_n t̄_n (e^a/κ)^(n-1) <= 2 - e^-a, where the sum runs to N and is closed
/// by a geometric tail whose ratio is the last coefficient ratio plus 10%.
/// e^a/κ is kept below 0.9 R, and a point whose tail ratio reaches 1 is not
/// admissible. Throws std::domain_error when no point is admissible.
OptimizationResult cstar_profile_series(const NeighborhoodProfile& profile, int N = 64);

/// a = -ln(2 - Z(x*)) at the minimizer x* of cstar_profile: the convergence
/// parameter that makes the profile bound an instance of the FP condition.
double fp_parameter(const NeighborhoodProfile& profile);

struct BoundReport {
  std::string graph_id;
  int delta = 0;
  std::optional<NeighborhoodProfile> profile;
  double c_sokal = 0.0;
  double c_star_delta = 0.0;
  /// Absent when Δ <= 1; such graphs are checked against cstar_delta(2).
  std::optional<double> c_star_graph;
  std::optional<double> c_star_graph_series;
  std::optional<IntPolynomial> chromatic;
  std::optional<double> max_root_modulus;
  std::optional<double> max_residual;
  bool zero_free_verified = false;

  /// c_star_graph <= c_star_delta <= c_sokal, up to rounding noise.
  bool ordering_holds() const;
  /// The radius roots must stay inside: c_star_graph, or c_star_delta when absent.
  double zero_free_radius() const;
};

/// Fills the bound fields. Δ <= 1 uses the Δ = 2 constants and leaves
/// c_star_graph empty. Throws std::invalid_argument for graphs without vertices.
BoundReport cstar_graph(const Graph& g, const std::string& graph_id = "");

/// cstar_graph plus the series form.
BoundReport cstar_graph_series(const Graph& g, int N = 64, const std::string& graph_id = "");

/// cstar_graph plus the chromatic polynomial and its roots; verified when every
/// root modulus is below zero_free_radius() and the ordering holds.
BoundReport verify_zero_free(const Graph& g, const std::string& graph_id = "", int max_vertices = 18,
                             double tol = 1e-10);

/// Half-up rounding to the given number of decimals.
double round_half_up(double value, int decimals);

}  // namespace chromzero
