#include "chromzero/report_json.hpp"

#include <cmath>

namespace chromzero {
namespace {

// JSON has no infinity; an uncertified quantity is written as null.
nlohmann::json finite_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

nlohmann::json strings(const std::vector<BigInt>& values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

}  // namespace

nlohmann::json to_json(const BigInt& value) { return value.str(); }

nlohmann::json to_json(const IntPolynomial& p) { return strings(p.coefficients()); }

nlohmann::json to_json(const TruncatedSeries& s) { return strings(s.coefficients()); }

nlohmann::json to_json(const Graph& g) {
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const NeighborhoodProfile& profile) {
  return {{"delta", profile.delta}, {"t", strings(profile.t)}, {"t_tilde", strings(profile.t_tilde)}};
}

nlohmann::json to_json(const OptimizationResult& r) {
  return {{"argmin", r.argmin},           {"value", r.value},
          {"bracket", {r.lo, r.hi}},      {"evaluations", r.evaluations},
          {"tolerance_met", r.tolerance_met}};
}

nlohmann::json to_json(const PenroseReport& r) {
  return {{"root", r.root},
          {"s_value", std::to_string(r.s_value)},
          {"tree_count", std::to_string(r.tree_count)},
          {"penrose_count", std::to_string(r.penrose_count)},
          {"weak_penrose_count", std::to_string(r.weak_penrose_count)}};
}

nlohmann::json to_json(const CnBoundCheck& c) {
  return {{"n", c.n},     {"lhs_scaled", c.lhs_scaled.str()}, {"rhs_scaled", c.rhs_scaled.str()},
          {"lhs", c.lhs}, {"rhs", c.rhs},                     {"holds", c.holds}};
}

nlohmann::json to_json(const FpCertificate& c) {
  return {{"status", fp_status_name(c.status)},
          {"head", c.head},
          {"tail", finite_or_null(c.tail)},
          {"threshold", c.threshold},
          {"ratio", c.ratio},
          {"terms", c.terms}};
}

nlohmann::json to_json(const RootSet& roots) {
  auto list = nlohmann::json::array();
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    list.push_back({{"re", roots.roots[i].real()}, {"im", roots.roots[i].imag()}, {"residual", roots.residuals[i]}});
  }
  return {{"roots", std::move(list)}, {"max_modulus", roots.max_modulus}};
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json out = {{"graph_id", r.graph_id},
                        {"delta", r.delta},
                        {"c_sokal", r.c_sokal},
                        {"c_star_delta", r.c_star_delta},
                        {"zero_free_verified", r.zero_free_verified}};
  out["profile"] = r.profile ? to_json(*r.profile) : nlohmann::json(nullptr);
  out["c_star_graph"] = r.c_star_graph ? nlohmann::json(*r.c_star_graph) : nlohmann::json(nullptr);
  if (r.c_star_graph_series) out["c_star_graph_series"] = *r.c_star_graph_series;
  if (r.chromatic) out["chromatic_polynomial"] = to_json(*r.chromatic);
  if (r.max_root_modulus) out["max_root_modulus"] = *r.max_root_modulus;
  if (r.max_residual) out["max_residual"] = *r.max_residual;
  return out;
}

}  // namespace chromzero
