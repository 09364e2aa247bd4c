#include "chromzero/neighborhood.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace chromzero {
namespace {

constexpr int kMaxProfileDegree = 30;

struct LocalCounts {
  std::vector<std::uint64_t> total;                  // total[k]: independent k-subsets
  std::vector<std::vector<std::uint64_t>> containing;  // containing[i][k]: those holding neighbor i
};

// Backtracking over independent subsets of one neighborhood.
void extend(const std::vector<std::uint32_t>& conflict, int next, std::uint32_t chosen, int size,
            LocalCounts& counts) {
  const int d = static_cast<int>(conflict.size());
  for (int i = next; i < d; ++i) {
    if (conflict[static_cast<std::size_t>(i)] & chosen) continue;
    const std::uint32_t with = chosen | (std::uint32_t{1} << i);
    const int k = size + 1;
    ++counts.total[static_cast<std::size_t>(k)];
    for (std::uint32_t rest = with; rest; rest &= rest - 1) {
      ++counts.containing[static_cast<std::size_t>(std::countr_zero(rest))][static_cast<std::size_t>(k)];
    }
    extend(conflict, i + 1, with, k, counts);
  }
}

}  // namespace

IntPolynomial NeighborhoodProfile::z() const {
  std::vector<BigInt> c{1};
  c.insert(c.end(), t.begin(), t.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial NeighborhoodProfile::z_tilde() const {
  std::vector<BigInt> c{1};
  c.insert(c.end(), t_tilde.begin(), t_tilde.end());
  return IntPolynomial(std::move(c));
}

NeighborhoodProfile neighborhood_profile(const Graph& g) {
  const int delta = g.max_degree();
  if (delta == 0) throw std::invalid_argument("profile undefined for Δ=0");
  if (delta > kMaxProfileDegree) throw std::invalid_argument("profile enumeration supports Δ <= 30");

  std::vector<std::uint64_t> t(static_cast<std::size_t>(delta) + 1, 0);
  std::vector<std::uint64_t> t_tilde(static_cast<std::size_t>(delta) + 1, 0);

  for (Vertex v0 = 0; v0 < g.num_vertices(); ++v0) {
    const auto& nb = g.neighbors(v0);
    const int d = static_cast<int>(nb.size());
    if (d == 0) continue;
    std::vector<std::uint32_t> conflict(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j && g.adjacent(nb[static_cast<std::size_t>(i)], nb[static_cast<std::size_t>(j)]))
          conflict[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

    LocalCounts counts{std::vector<std::uint64_t>(static_cast<std::size_t>(d) + 1, 0),
                       std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(d),
                                                               std::vector<std::uint64_t>(static_cast<std::size_t>(d) + 1, 0))};
    extend(conflict, 0, 0, 0, counts);

    for (int k = 1; k <= d; ++k) t[static_cast<std::size_t>(k)] = std::max(t[static_cast<std::size_t>(k)], counts.total[static_cast<std::size_t>(k)]);
    for (int k = 1; k + 1 <= d; ++k) {
      for (int i = 0; i < d; ++i) {
        const std::uint64_t without = counts.total[static_cast<std::size_t>(k)] - counts.containing[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        t_tilde[static_cast<std::size_t>(k)] = std::max(t_tilde[static_cast<std::size_t>(k)], without);
      }
    }
  }

  NeighborhoodProfile profile;
  profile.delta = delta;
  for (int k = 1; k <= delta; ++k) profile.t.emplace_back(t[static_cast<std::size_t>(k)]);
  for (int k = 1; k <= delta - 1; ++k) profile.t_tilde.emplace_back(t_tilde[static_cast<std::size_t>(k)]);
  return profile;
}

NeighborhoodProfile binomial_profile(int delta) {
  if (delta < 1) throw std::invalid_argument("binomial profile needs Δ >= 1");
  NeighborhoodProfile profile;
  profile.delta = delta;
  const auto z = IntPolynomial::binomial_power(1, delta);
  const auto zt = IntPolynomial::binomial_power(1, delta - 1);
  for (int k = 1; k <= delta; ++k) profile.t.push_back(z.coefficient(k));
  for (int k = 1; k <= delta - 1; ++k) profile.t_tilde.push_back(zt.coefficient(k));
  return profile;
}

}  // namespace chromzero
