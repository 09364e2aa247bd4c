#include "chromzero/tree_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace chromzero {
namespace {

void require_counting_polynomial(const IntPolynomial& p, const char* name) {
  if (p.coefficient(0) != 1) throw std::invalid_argument(std::string(name) + " must have constant term 1");
  for (const auto& c : p.coefficients())
    if (c < 0) throw std::invalid_argument(std::string(name) + " must have non-negative coefficients");
}

}  // namespace

double TruncatedSeries::partial_sum_over_x(double x) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].convert_to<double>();
  return acc;
}

TreeSeries solve_tree_series(const IntPolynomial& z_tilde, const IntPolynomial& z, int N) {
  if (N < 1) throw std::invalid_argument("series order must be at least 1");
  require_counting_polynomial(z_tilde, "Z~");
  require_counting_polynomial(z, "Z");

  // power[k][m] = [x^m] U^k. Row m of every power needs only u_1..u_m, and
  // u_n = [x^(n-1)] Z~(U), so one pass in increasing m fills everything.
  const int top = std::max(z.degree(), z_tilde.degree());
  const auto rows = static_cast<std::size_t>(N);
  std::vector<std::vector<BigInt>> power(static_cast<std::size_t>(top) + 1, std::vector<BigInt>(rows, 0));
  power[0][0] = 1;
  std::vector<BigInt> u(rows + 1, 0);
  std::vector<BigInt> t(rows, 0);
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t k = 1; k < power.size(); ++k) {
      BigInt acc = 0;
      for (std::size_t j = 1; j <= m; ++j) acc += u[j] * power[k - 1][m - j];
      power[k][m] = std::move(acc);
    }
    BigInt next = 0;
    BigInt total = 0;
    for (std::size_t k = 0; k < power.size(); ++k) {
      next += z_tilde.coefficient(static_cast<int>(k)) * power[k][m];
      total += z.coefficient(static_cast<int>(k)) * power[k][m];
    }
    u[m + 1] = std::move(next);
    t[m] = std::move(total);
  }
  u.erase(u.begin());
  return {TruncatedSeries(std::move(u)), TruncatedSeries(std::move(t))};
}

TruncatedSeries t_n_delta(int delta, int N) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  return solve_tree_series(IntPolynomial::binomial_power(1, delta - 1), IntPolynomial::binomial_power(1, delta), N).t;
}

SeriesRadius series_radius(const IntPolynomial& z_tilde) {
  require_counting_polynomial(z_tilde, "Z~");
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (z_tilde.degree() <= 0) return {inf, inf};
  if (z_tilde.degree() == 1) return {1.0 / z_tilde.coefficient(1).convert_to<double>(), inf};

  // g(u) = Z~(u) - u Z~'(u) = 1 - sum_k (k-1) t~_k u^k falls strictly from 1.
  const IntPolynomial g = z_tilde - IntPolynomial::monomial(1) * z_tilde.derivative();
  double lo = 0.0;
  double hi = 1.0;
  while (g.evaluate(hi) > 0.0) hi *= 2.0;
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (g.evaluate(mid) > 0.0 ? lo : hi) = mid;
  }
  const double u0 = 0.5 * (lo + hi);
  return {u0 / z_tilde.evaluate(u0), u0};
}

double inverse_increasing(const IntPolynomial& z, double b) {
  require_counting_polynomial(z, "Z");
  if (!(b > 1.0)) throw std::invalid_argument("threshold b must exceed 1");
  if (z.degree() < 1) throw std::invalid_argument("threshold b lies beyond the range of Z");
  double lo = 0.0;
  double hi = 1.0;
  while (z.evaluate(hi) < b) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::invalid_argument("threshold b lies beyond the range of Z");
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (z.evaluate(mid) < b ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double sup_x_threshold(double b, const IntPolynomial& z, const IntPolynomial& z_tilde) {
  require_counting_polynomial(z_tilde, "Z~");
  const double u = inverse_increasing(z, b);
  return u / z_tilde.evaluate(u);
}

}  // namespace chromzero
