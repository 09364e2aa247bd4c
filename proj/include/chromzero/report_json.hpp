#pragma once

#include <json.hpp>

#include "chromzero/bounds.hpp"
#include "chromzero/graph.hpp"
#include "chromzero/neighborhood.hpp"
#include "chromzero/penrose.hpp"
#include "chromzero/polymer.hpp"
#include "chromzero/polynomial.hpp"
#include "chromzero/roots.hpp"
#include "chromzero/tree_series.hpp"

namespace chromzero {

// Exact integers are written as decimal strings so no precision is lost;
// optimized bound values are plain JSON numbers.

nlohmann::json to_json(const BigInt& value);
/// Ascending coefficients.
nlohmann::json to_json(const IntPolynomial& p);
/// a_1..a_N.
nlohmann::json to_json(const TruncatedSeries& s);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const NeighborhoodProfile& profile);
nlohmann::json to_json(const OptimizationResult& result);
nlohmann::json to_json(const PenroseReport& report);
nlohmann::json to_json(const CnBoundCheck& check);
nlohmann::json to_json(const FpCertificate& cert);
nlohmann::json to_json(const RootSet& roots);
nlohmann::json to_json(const BoundReport& report);

}  // namespace chromzero
