#pragma once

// Seeded corpus of m-free instances shared by the acceptance suite and unit tests.

#include <vector>

#include "mfas/digraph.hpp"
#include "mfas/generators.hpp"

namespace corpus {

struct Instance {
  mfas::GenSpec spec;
  mfas::Digraph graph;
  int m = 4;
};

inline void keep_if_m_free(std::vector<Instance>& out, const mfas::GenSpec& spec) {
  mfas::Digraph g = mfas::generate(spec);
  if (g.size() < 8 || g.size() > 40 || mfas::check_m_free(g, spec.m)) return;
  out.push_back({spec, std::move(g), spec.m});
}

/// m in {4,5,6}, n in [8,40], all four generator models.
inline std::vector<Instance> build() {
  using mfas::GenSpec;
  using mfas::Model;
  std::vector<Instance> out;
  for (int m : {4, 5, 6}) {
    for (std::size_t n : {8, 10, 13, 20, 31, 40}) {
      GenSpec s;
      s.model = Model::Cycle;
      s.n = n;
      s.m = m;
      keep_if_m_free(out, s);
    }
    const std::vector<std::vector<std::size_t>> step_sets = {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {1, 4}, {2, 5}};
    for (std::size_t n : {8, 9, 11, 14, 17, 23, 29, 37}) {
      for (const auto& steps : step_sets) {
        if (steps.back() >= n) continue;
        GenSpec s;
        s.model = Model::Circulant;
        s.n = n;
        s.m = m;
        s.steps = steps;
        keep_if_m_free(out, s);
      }
    }
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      GenSpec s;
      s.model = Model::Blowup;
      s.m = m;
      s.seed = seed;
      const std::size_t base = static_cast<std::size_t>(m) + 1 + seed % 3;
      for (std::size_t i = 0; i < base; ++i) s.sizes.push_back(1 + (seed * 7 + i * 3) % 3);
      s.n = base;
      keep_if_m_free(out, s);
    }
    for (std::size_t n : {8, 9, 10, 11, 12, 13, 14, 16, 20, 25, 30, 40}) {
      for (mfas::Probability p : {mfas::Probability{1, 5}, mfas::Probability{2, 5}}) {
        for (std::uint64_t seed : {1, 2}) {
          GenSpec s;
          s.model = Model::ErRepair;
          s.n = n;
          s.m = m;
          s.p = p;
          s.seed = seed + 100 * static_cast<std::uint64_t>(m);
          keep_if_m_free(out, s);
        }
      }
    }
  }
  return out;
}

}  // namespace corpus
