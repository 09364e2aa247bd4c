#pragma once

#include <functional>

namespace chromzero {

struct OptimizationResult {
  double argmin = 0.0;
  double value = 0.0;
  double lo = 0.0;  ///< final bracket
  double hi = 0.0;
  int evaluations = 0;
  bool tolerance_met = false;
};

struct MinimizeOptions {
  int grid_points = 1024;
  double tolerance = 1e-10;
  int max_iterations = 500;
};

/// Global minimum of f on the open interval (lo, hi). A uniform grid that
/// starts one step inside each end locates the best cell; golden-section search
/// then narrows the cell around it to the tolerance (relative to 1 + |x|).
/// Non-finite values count as +infinity.
OptimizationResult minimize_on_interval(const std::function<double(double)>& f, double lo, double hi,
                                        const MinimizeOptions& options = {});

/// Root of f in [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
/// Throws std::invalid_argument otherwise.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tolerance = 1e-12);

}  // namespace chromzero
