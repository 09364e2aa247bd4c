#include "chromzero/minimize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace chromzero {

OptimizationResult minimize_on_interval(const std::function<double(double)>& f, double lo, double hi,
                                        const MinimizeOptions& options) {
  if (!(lo < hi)) throw std::invalid_argument("empty minimization interval");
  if (options.grid_points < 3) throw std::invalid_argument("grid needs at least 3 points");
  OptimizationResult out;
  auto eval = [&](double x) {
    ++out.evaluations;
    const double y = f(x);
    return std::isfinite(y) ? y : std::numeric_limits<double>::infinity();
  };

  const int m = options.grid_points;
  const double step = (hi - lo) / (m + 1);
  int best = 1;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= m; ++i) {
    const double y = eval(lo + step * i);
    if (y < best_value) {
      best_value = y;
      best = i;
    }
  }
  if (!std::isfinite(best_value)) throw std::domain_error("objective is not finite anywhere on the grid");

  double a = lo + step * (best - 1);
  double b = lo + step * (best + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  for (int it = 0; it < options.max_iterations; ++it) {
    if (b - a <= options.tolerance * (1.0 + std::abs(0.5 * (a + b)))) {
      out.tolerance_met = true;
      break;
    }
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  out.lo = a;
  out.hi = b;
  out.argmin = 0.5 * (a + b);
  out.value = eval(out.argmin);
  // The grid point can beat the refined interior point when the cell is flat.
  if (best_value < out.value) {
    out.argmin = lo + step * best;
    out.value = best_value;
  }
  return out;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tolerance) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw std::invalid_argument("bisection needs a sign change");
  for (int it = 0; it < 400 && hi - lo > tolerance * (1.0 + std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace chromzero
