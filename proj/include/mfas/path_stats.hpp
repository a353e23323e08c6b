#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mfas/digraph.hpp"
#include "mfas/layers.hpp"
#include "mfas/ratio.hpp"

namespace mfas {

/// A directed path v0 -> ... -> vl that spans no other edge (in either
/// direction) among its vertices and whose endpoints are at distance l.
struct ShortestInducedPath {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend auto operator<=>(const ShortestInducedPath&, const ShortestInducedPath&) = default;
};

/// Every shortest induced path of length 1..max_len, lexicographically ordered.
std::vector<ShortestInducedPath> enumerate_sips(const Digraph& g, std::size_t max_len);

/// Row-major all-pairs BFS distances; unreachable pairs hold `unreachable`.
class DistanceMatrix {
 public:
  static constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

  explicit DistanceMatrix(const Digraph& g);
  std::size_t operator()(Vertex from, Vertex to) const { return d_[from * n_ + to]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> d_;
};

/// The six per-vertex triple counts over shortest induced paths of length k+2.
///
/// For a path (v0, ..., v_{k+2}) the triple (v0, v_{k+1}, v_{k+2}) feeds the
/// P/Q/R family and (v0, v1, v_{k+2}) the P'/Q'/R' family; P counts triples
/// whose first entry is v, Q the middle entry, R the last. Triples are
/// de-duplicated across interior paths.
class TripleStats {
 public:
  enum Stat { P = 0, Q, R, PPrime, QPrime, RPrime, kStatCount };

  TripleStats(int m, std::size_t n);

  int m() const { return m_; }
  std::size_t size() const { return n_; }

  Count& at(Stat s, int k, Vertex v);
  Count at(Stat s, int k, Vertex v) const;
  Count sum(Stat s, int k) const;

  /// Number of distinct triples recorded for each family at a given k.
  Count& family_size(bool primed, int k) { return family_sizes_[primed][static_cast<std::size_t>(k - 1)]; }
  Count family_size(bool primed, int k) const { return family_sizes_[primed][static_cast<std::size_t>(k - 1)]; }

  friend bool operator==(const TripleStats&, const TripleStats&) = default;

 private:
  int m_;
  std::size_t n_;
  std::vector<Count> counts_;  // [stat][k-1][v]
  std::array<std::vector<Count>, 2> family_sizes_;
};

const char* to_string(TripleStats::Stat s);

/// Throws UnsupportedM for m < 4 and NotMFree when g has a cycle of length <= m.
TripleStats triple_stats(const Digraph& g, int m);

/// sum_{i=k}^{m-3} p'_i(v) + sum_{i=1}^{k} q'_i(v)
Count s_exact(const TripleStats& stats, Vertex v, int k);
/// sum_{i=k}^{m-3} r_i(v) + sum_{i=1}^{k} q_i(v)
Count t_exact(const TripleStats& stats, Vertex v, int k);

struct RatioWitness {
  ExactRatio ratio;
  Vertex v = 0;
  int k = 0;
  Direction side = Direction::Out;
};

/// Minimum of p_k(v)/s_k(v) and r'_k(v)/t_k(v) over every (v, k) with a
/// positive denominator; ties go Out before In, then smaller v, then smaller k.
/// Throws NoAdmissibleRatio when every denominator vanishes.
RatioWitness min_alpha_beta(const TripleStats& stats);
RatioWitness min_alpha_beta(const Digraph& g, int m);

struct LemmaViolation {
  std::string check;
  Vertex v = 0;
  int k = 0;
  std::string detail;
  Count lhs = 0;
  Count rhs = 0;

  std::string str() const;
};

/// Each v_j lies at out-distance j-i from v_i and v_i at in-distance j-i to v_j.
std::optional<LemmaViolation> check_subpath_distances(const DistanceMatrix& dist,
                                                      const std::vector<Vertex>& path);
std::optional<LemmaViolation> check_subpath_distances(const Digraph& g, const std::vector<Vertex>& path);

/// sum p = sum q = sum r and sum p' = sum q' = sum r', for every k.
std::vector<LemmaViolation> check_triple_sums(const TripleStats& stats);

/// p_k and r'_k against their layer edge counts (equalities) and q_k, r_k,
/// p'_k, q'_k against their layer missing-edge counts (upper bounds).
std::vector<LemmaViolation> check_layer_bounds(const Digraph& g, const TripleStats& stats);

/// For a trimmed m-free graph with a cycle: the minimum exact ratio exists,
/// is at most 1/(m-2), and is at most the pooled ratio (sum p + sum r')/(sum s + sum t).
std::vector<LemmaViolation> check_ratio_bound(const TripleStats& stats);

}  // namespace mfas
