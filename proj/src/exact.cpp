#include "mfas/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "mfas/errors.hpp"

namespace mfas {
namespace {

struct DpTable {
  std::vector<std::uint16_t> cost;  // indexed by subset bitmask
  std::vector<std::uint8_t> last;   // vertex placed last in the best ordering of the subset
};

// cost(S) = min over v in S of cost(S \ v) + |E({v}, S \ v)|
DpTable solve_dp(const Digraph& g, std::size_t limit) {
  const std::size_t n = g.size();
  if (n > std::min(limit, kExactLimit)) throw TooLarge(n, std::min(limit, kExactLimit));
  std::vector<std::uint32_t> out_mask(n, 0);
  for (const Edge& e : g.edges()) out_mask[e.from] |= 1u << e.to;

  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  DpTable t{std::vector<std::uint16_t>(std::size_t{full} + 1, 0), std::vector<std::uint8_t>(std::size_t{full} + 1, 0)};
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    std::uint16_t best = UINT16_MAX;
    std::uint8_t best_v = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::uint8_t>(std::countr_zero(rest));
      const std::uint32_t without = s & ~(1u << v);
      const auto c = static_cast<std::uint16_t>(t.cost[without] + std::popcount(out_mask[v] & without));
      if (c < best) {
        best = c;
        best_v = v;
      }
    }
    t.cost[s] = best;
    t.last[s] = best_v;
    if (s == full) break;
  }
  return t;
}

}  // namespace

Count exact_fas_size(const Digraph& g, std::size_t limit) {
  const auto t = solve_dp(g, limit);
  return t.cost.back();
}

std::vector<Edge> exact_fas_edges(const Digraph& g, std::size_t limit) {
  const auto t = solve_dp(g, limit);
  std::vector<Edge> x;
  std::uint32_t s = static_cast<std::uint32_t>(t.cost.size() - 1);
  while (s != 0) {
    const Vertex v = t.last[s];
    s &= ~(1u << v);
    for (Vertex w : g.out(v)) {
      if (s & (1u << w)) x.push_back(g.labeled({v, w}));
    }
  }
  std::sort(x.begin(), x.end());
  return x;
}

Count brute_force_check(const Digraph& g) {
  const std::size_t n = g.size();
  if (n > kBruteForceLimit) throw TooLarge(n, kBruteForceLimit);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  const auto edges = g.edges();
  Count best = edges.size();
  std::vector<std::size_t> pos(n);
  do {
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    Count backward = 0;
    for (const Edge& e : edges) backward += pos[e.from] > pos[e.to];
    best = std::min(best, backward);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace mfas
