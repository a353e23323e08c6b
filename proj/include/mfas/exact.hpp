#pragma once

#include <cstddef>
#include <vector>

#include "mfas/digraph.hpp"

namespace mfas {

inline constexpr std::size_t kExactLimit = 24;
inline constexpr std::size_t kBruteForceLimit = 8;

/// Minimum feedback arc set size, by subset DP over vertex orderings.
/// Throws TooLarge when n exceeds `limit` (at most kExactLimit).
Count exact_fas_size(const Digraph& g, std::size_t limit = kExactLimit);

/// A minimum feedback arc set, as labels. On ties the smallest vertex id is placed last.
std::vector<Edge> exact_fas_edges(const Digraph& g, std::size_t limit = kExactLimit);

/// Minimum number of backward edges over all n! orderings; n <= kBruteForceLimit.
Count brute_force_check(const Digraph& g);

}  // namespace mfas
