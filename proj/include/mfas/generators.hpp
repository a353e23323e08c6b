#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfas/digraph.hpp"

namespace mfas {

/// Probability p = numerator / denominator, 0 <= p <= 1.
struct Probability {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  std::string str() const { return std::to_string(numerator) + "/" + std::to_string(denominator); }
  /// Parses "a/b" or a plain integer 0 or 1.
  static Probability parse(const std::string& text);
  friend bool operator==(const Probability&, const Probability&) = default;
};

enum class Model { Cycle, Circulant, Blowup, ErRepair };

const char* to_string(Model model);
Model parse_model(const std::string& name);

/// Everything needed to regenerate an instance.
struct GenSpec {
  Model model = Model::Cycle;
  std::size_t n = 0;  // for Blowup: the base cycle length
  int m = 4;
  std::vector<std::size_t> steps;  // Circulant
  std::vector<std::size_t> sizes;  // Blowup class sizes
  Probability p;                   // ErRepair
  std::uint64_t seed = 0;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

Digraph gen_cycle(std::size_t n);
Digraph gen_circulant(std::size_t n, const std::vector<std::size_t>& steps);

/// C_{base_len} with vertex i replaced by an independent class of sizes[i]
/// vertices, every class-i vertex pointing at every class-(i+1) vertex.
/// Vertex ids are shuffled with a permutation drawn from `seed`.
Digraph gen_blowup(std::size_t base_len, const std::vector<std::size_t>& sizes, std::uint64_t seed);

/// G(n, p) on ordered pairs, then shortest cycles of length <= m are broken
/// one at a time by deleting their lexicographically smallest edge.
///
/// The stream is std::mt19937_64 seeded with `seed`; one 64-bit draw per
/// ordered pair (u, v), u != v, visiting u then v in ascending order; the
/// pair is kept iff draw * denominator < numerator * 2^64.
Digraph gen_er_repair(std::size_t n, Probability p, int m, std::uint64_t seed);

Digraph generate(const GenSpec& spec);

}  // namespace mfas
