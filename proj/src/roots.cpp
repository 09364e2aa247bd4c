#include "chromzero/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace chromzero {
namespace {

using HiReal = boost::multiprecision::cpp_bin_float_50;
using HiComplex = boost::multiprecision::cpp_complex_50;
using RPoly = std::vector<Rational>;  // ascending, trimmed

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long long>(k));
  trim(d);
  return d;
}

RPoly subtract(RPoly a, const RPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  if (deg(a) < deg(b)) return {RPoly{}, a};
  RPoly q(static_cast<std::size_t>(deg(a) - deg(b) + 1));
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    const Rational factor = a.back() / b.back();
    q[static_cast<std::size_t>(shift)] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + static_cast<std::size_t>(shift)] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RPoly monic(RPoly p) {
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RPoly gcd(RPoly a, RPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

IntPolynomial primitive(const RPoly& p) {
  BigInt lcm = 1;
  for (const auto& c : p) {
    const BigInt den = denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<BigInt> ints;
  BigInt content = 0;
  for (const auto& c : p) {
    ints.push_back(numerator(c) * (lcm / denominator(c)));
    content = boost::multiprecision::gcd(content, ints.back());
  }
  if (content != 0) {
    if (ints.back() < 0) content = -content;
    for (auto& c : ints) c /= content;
  }
  return IntPolynomial(std::move(ints));
}

template <class C, class T>
void horner(const std::vector<T>& c, const C& z, C& value, C& slope) {
  value = C(c.back());
  slope = C(0);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    slope = slope * z + value;
    value = value * z + C(c[k]);
  }
}

// Unique positive root of |a_d| x^d - sum_{k<d} |a_k| x^k; every root lies within it.
double cauchy_radius(const std::vector<double>& c) {
  const std::size_t d = c.size() - 1;
  auto g = [&](double x) {
    double acc = std::abs(c[d]);
    for (std::size_t k = d; k-- > 0;) acc = acc * x - std::abs(c[k]);
    return acc;
  };
  double hi = 1.0;
  while (g(hi) <= 0.0) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

std::vector<std::complex<double>> aberth_double(const std::vector<double>& c) {
  const std::size_t d = c.size() - 1;
  const double radius = std::max(cauchy_radius(c), 1e-3);
  std::vector<std::complex<double>> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4;
    const double r = radius * (0.9 + 0.05 * static_cast<double>(k % 3) / 2.0);
    z[k] = std::polar(r, angle);
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double worst = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      std::complex<double> p, dp;
      horner(c, z[k], p, dp);
      if (p == 0.0) continue;
      const std::complex<double> newton = p / dp;
      std::complex<double> repel = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) repel += 1.0 / (z[k] - z[j]);
      const std::complex<double> step = newton / (1.0 - newton * repel);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[k] -= step;
        worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
      }
    }
    if (worst < 1e-14) break;
  }
  return z;
}

std::vector<HiComplex> aberth_polish(const std::vector<BigInt>& coeffs, std::vector<HiComplex> z) {
  std::vector<HiReal> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.emplace_back(x);
  const std::size_t d = c.size() - 1;
  const HiReal stop("1e-45");
  for (int iter = 0; iter < 200; ++iter) {
    HiReal worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
      HiComplex p, dp;
      horner(c, z[k], p, dp);
      if (abs(p) == 0) continue;
      const HiComplex newton = p / dp;
      HiComplex repel = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) repel += HiComplex(1) / (z[k] - z[j]);
      const HiComplex step = newton / (HiComplex(1) - newton * repel);
      z[k] -= step;
      worst = std::max(worst, HiReal(abs(step) / (1 + abs(z[k]))));
    }
    if (worst < stop) break;
  }
  return z;
}

void pair_conjugates(std::vector<HiComplex>& z) {
  const HiReal tiny("1e-30");
  for (auto& r : z)
    if (abs(r.imag()) <= tiny * std::max(HiReal(1), HiReal(abs(r)))) r = HiComplex(r.real(), 0);
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i] || z[i].imag() <= 0) continue;
    std::size_t partner = z.size();
    HiReal best = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (used[j] || j == i || z[j].imag() >= 0) continue;
      const HiReal gap = abs(z[j] - conj(z[i]));
      if (partner == z.size() || gap < best) {
        partner = j;
        best = gap;
      }
    }
    if (partner == z.size()) continue;
    const HiComplex mean = (z[i] + conj(z[partner])) / 2;
    z[i] = mean;
    z[partner] = conj(mean);
    used[i] = used[partner] = true;
  }
}

}  // namespace

std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  RPoly f;
  for (const auto& c : p.coefficients()) f.emplace_back(c);
  std::vector<std::pair<IntPolynomial, int>> out;
  const RPoly a0 = gcd(f, derivative(f));
  RPoly b = divmod(f, a0).first;
  RPoly c = divmod(derivative(f), a0).first;
  RPoly d = subtract(c, derivative(b));
  for (int i = 1; deg(b) > 0; ++i) {
    const RPoly a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = subtract(c, derivative(b));
    if (deg(a) > 0) out.emplace_back(primitive(a), i);
  }
  return out;
}

RootSet polynomial_roots(const IntPolynomial& p, double tol) {
  if (p.degree() < 1) throw std::invalid_argument("root finding needs degree >= 1");

  std::vector<HiComplex> all;
  for (const auto& [factor, multiplicity] : square_free_decomposition(p)) {
    std::vector<double> approx;
    for (const auto& c : factor.coefficients()) approx.push_back(c.convert_to<double>());
    std::vector<HiComplex> start;
    for (const auto& z : aberth_double(approx)) start.emplace_back(z.real(), z.imag());
    auto polished = aberth_polish(factor.coefficients(), std::move(start));
    pair_conjugates(polished);
    for (const auto& r : polished)
      for (int m = 0; m < multiplicity; ++m) all.push_back(r);
  }

  std::vector<HiReal> coeffs;
  for (const auto& c : p.coefficients()) coeffs.emplace_back(c);
  const HiReal scale(p.max_abs_coefficient());

  RootSet out;
  bool ok = static_cast<int>(all.size()) == p.degree();
  for (const auto& r : all) {
    HiComplex value, slope;
    horner(coeffs, r, value, slope);
    const double residual = static_cast<double>(HiReal(abs(value) / scale));
    out.roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    out.residuals.push_back(residual);
    out.max_modulus = std::max(out.max_modulus, std::abs(out.roots.back()));
    if (!(residual < tol)) ok = false;
  }
  if (!ok) {
    throw RootFindingError("root finding did not reach residual " + std::to_string(tol), out.roots, out.residuals);
  }
  return out;
}

}  // namespace chromzero
