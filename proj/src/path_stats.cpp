#include "mfas/path_stats.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "mfas/errors.hpp"

namespace mfas {
namespace {

using Triple = std::array<Vertex, 3>;

std::vector<std::size_t> bfs_from(const Digraph& g, Vertex s) {
  std::vector<std::size_t> dist(g.size(), DistanceMatrix::unreachable);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.out(u)) {
      if (dist[w] == DistanceMatrix::unreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

void extend(const Digraph& g, const std::vector<std::size_t>& dist, std::vector<Vertex>& path, std::size_t max_len,
            std::vector<ShortestInducedPath>& out) {
  const Vertex last = path.back();
  const std::size_t len = path.size() - 1;
  for (Vertex w : g.out(last)) {
    if (dist[w] != len + 1 || g.has_edge(w, last)) continue;
    bool chordless = true;
    for (std::size_t i = 0; i + 1 < path.size() && chordless; ++i) {
      chordless = !g.adjacent(path[i], w);
    }
    if (!chordless) continue;
    path.push_back(w);
    out.push_back({path});
    if (len + 1 < max_len) extend(g, dist, path, max_len, out);
    path.pop_back();
  }
}

LemmaViolation violation(std::string check, Vertex v, int k, std::string detail, Count lhs, Count rhs) {
  return LemmaViolation{std::move(check), v, k, std::move(detail), lhs, rhs};
}

}  // namespace

std::vector<ShortestInducedPath> enumerate_sips(const Digraph& g, std::size_t max_len) {
  std::vector<ShortestInducedPath> result;
  if (max_len == 0) return result;
  std::vector<Vertex> path;
  for (Vertex s = 0; s < g.size(); ++s) {
    const auto dist = bfs_from(g, s);
    path.assign(1, s);
    extend(g, dist, path, max_len, result);
  }
  return result;
}

DistanceMatrix::DistanceMatrix(const Digraph& g) : n_(g.size()), d_(n_ * n_) {
  for (Vertex s = 0; s < n_; ++s) {
    const auto row = bfs_from(g, s);
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

TripleStats::TripleStats(int m, std::size_t n)
    : m_(m), n_(n), counts_(static_cast<std::size_t>(kStatCount) * static_cast<std::size_t>(std::max(m - 3, 0)) * n) {
  for (auto& sizes : family_sizes_) sizes.assign(static_cast<std::size_t>(std::max(m - 3, 0)), 0);
}

Count& TripleStats::at(Stat s, int k, Vertex v) {
  require_k_in_range(k, m_);
  if (v >= n_) throw VertexOutOfRange(v, n_);
  const auto ks = static_cast<std::size_t>(m_ - 3);
  return counts_[(static_cast<std::size_t>(s) * ks + static_cast<std::size_t>(k - 1)) * n_ + v];
}

Count TripleStats::at(Stat s, int k, Vertex v) const { return const_cast<TripleStats*>(this)->at(s, k, v); }

Count TripleStats::sum(Stat s, int k) const {
  Count total = 0;
  for (Vertex v = 0; v < n_; ++v) total += at(s, k, v);
  return total;
}

const char* to_string(TripleStats::Stat s) {
  static constexpr const char* names[] = {"p", "q", "r", "p'", "q'", "r'"};
  return names[s];
}

TripleStats triple_stats(const Digraph& g, int m) {
  if (m < 4) throw UnsupportedM(m);
  if (auto w = check_m_free(g, m)) throw NotMFree(m, *w);
  TripleStats stats(m, g.size());
  const auto paths = enumerate_sips(g, static_cast<std::size_t>(m - 1));
  for (int k = 1; k <= m - 3; ++k) {
    std::vector<Triple> plain, primed;
    for (const auto& p : paths) {
      if (p.length() != static_cast<std::size_t>(k + 2)) continue;
      const auto& vs = p.vertices;
      plain.push_back({vs.front(), vs[static_cast<std::size_t>(k) + 1], vs.back()});
      primed.push_back({vs.front(), vs[1], vs.back()});
    }
    for (auto* family : {&plain, &primed}) {
      std::sort(family->begin(), family->end());
      family->erase(std::unique(family->begin(), family->end()), family->end());
    }
    for (const Triple& t : plain) {
      ++stats.at(TripleStats::P, k, t[0]);
      ++stats.at(TripleStats::Q, k, t[1]);
      ++stats.at(TripleStats::R, k, t[2]);
    }
    for (const Triple& t : primed) {
      ++stats.at(TripleStats::PPrime, k, t[0]);
      ++stats.at(TripleStats::QPrime, k, t[1]);
      ++stats.at(TripleStats::RPrime, k, t[2]);
    }
    stats.family_size(false, k) = plain.size();
    stats.family_size(true, k) = primed.size();
  }
  return stats;
}

Count s_exact(const TripleStats& stats, Vertex v, int k) {
  const int m = stats.m();
  require_k_in_range(k, m);
  Count total = 0;
  for (int i = k; i <= m - 3; ++i) total += stats.at(TripleStats::PPrime, i, v);
  for (int i = 1; i <= k; ++i) total += stats.at(TripleStats::QPrime, i, v);
  return total;
}

Count t_exact(const TripleStats& stats, Vertex v, int k) {
  const int m = stats.m();
  require_k_in_range(k, m);
  Count total = 0;
  for (int i = k; i <= m - 3; ++i) total += stats.at(TripleStats::R, i, v);
  for (int i = 1; i <= k; ++i) total += stats.at(TripleStats::Q, i, v);
  return total;
}

RatioWitness min_alpha_beta(const TripleStats& stats) {
  std::optional<RatioWitness> best;
  for (Direction side : {Direction::Out, Direction::In}) {
    for (Vertex v = 0; v < stats.size(); ++v) {
      for (int k = 1; k <= stats.m() - 3; ++k) {
        const Count den = side == Direction::Out ? s_exact(stats, v, k) : t_exact(stats, v, k);
        if (den == 0) continue;
        const Count num = stats.at(side == Direction::Out ? TripleStats::P : TripleStats::RPrime, k, v);
        const ExactRatio r{num, den};
        if (!best || r < best->ratio) best = RatioWitness{r, v, k, side};
      }
    }
  }
  if (!best) throw NoAdmissibleRatio("every s_k(v) and t_k(v) is zero: graph is acyclic or not trimmed");
  return *best;
}

RatioWitness min_alpha_beta(const Digraph& g, int m) { return min_alpha_beta(triple_stats(g, m)); }

std::string LemmaViolation::str() const {
  std::ostringstream os;
  os << check << ": v=" << v << " k=" << k << " " << detail << " (" << lhs << " vs " << rhs << ")";
  return os.str();
}

std::optional<LemmaViolation> check_subpath_distances(const DistanceMatrix& dist, const std::vector<Vertex>& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      // in-distance of v_i to v_j is the same matrix entry read from the other end
      const std::size_t d = dist(path[i], path[j]);
      if (d != j - i) {
        std::ostringstream os;
        os << "dist(v" << i << ", v" << j << ") != " << (j - i);
        return violation("subpath-distance", path[i], static_cast<int>(j - i), os.str(), d, j - i);
      }
    }
  }
  return std::nullopt;
}

std::optional<LemmaViolation> check_subpath_distances(const Digraph& g, const std::vector<Vertex>& path) {
  return check_subpath_distances(DistanceMatrix(g), path);
}

std::vector<LemmaViolation> check_triple_sums(const TripleStats& stats) {
  std::vector<LemmaViolation> out;
  using S = TripleStats;
  for (int k = 1; k <= stats.m() - 3; ++k) {
    for (auto [first, rest] : {std::pair{S::P, std::array{S::Q, S::R}}, std::pair{S::PPrime, std::array{S::QPrime, S::RPrime}}}) {
      const Count base = stats.sum(first, k);
      for (S::Stat other : rest) {
        const Count sum = stats.sum(other, k);
        if (sum != base) {
          out.push_back(violation("triple-sum", 0, k,
                                  std::string("sum ") + to_string(first) + " != sum " + to_string(other), base, sum));
        }
      }
    }
  }
  return out;
}

std::vector<LemmaViolation> check_layer_bounds(const Digraph& g, const TripleStats& stats) {
  std::vector<LemmaViolation> out;
  const int m = stats.m();
  using S = TripleStats;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto fwd = out_layers(g, v, m - 1);
    const auto bwd = in_layers(g, v, m - 1);
    for (int k = 1; k <= m - 3; ++k) {
      auto equal = [&](S::Stat s, Count layer, const char* what) {
        if (stats.at(s, k, v) != layer) {
          out.push_back(violation("layer-equality", v, k, std::string(to_string(s)) + " != " + what,
                                  stats.at(s, k, v), layer));
        }
      };
      auto bounded = [&](S::Stat s, Count layer, const char* what) {
        if (stats.at(s, k, v) > layer) {
          out.push_back(violation("layer-bound", v, k, std::string(to_string(s)) + " > " + what,
                                  stats.at(s, k, v), layer));
        }
      };
      equal(S::P, cut_layer_edges(g, fwd, k), "|E(N+[k+1], N+[k+2])|");
      equal(S::RPrime, cut_layer_edges(g, bwd, k), "|E(N-[k+2], N-[k+1])|");
      bounded(S::Q, missing_between(g, bwd[k + 1], fwd[1]), "miss(N-[k+1], N+[1])");
      bounded(S::R, missing_between(g, bwd[1], bwd[k + 2]), "miss(N-[1], N-[k+2])");
      bounded(S::PPrime, missing_between(g, fwd[1], fwd[k + 2]), "miss(N+[1], N+[k+2])");
      bounded(S::QPrime, missing_between(g, fwd[k + 1], bwd[1]), "miss(N+[k+1], N-[1])");
    }
  }
  return out;
}

std::vector<LemmaViolation> check_ratio_bound(const TripleStats& stats) {
  std::vector<LemmaViolation> out;
  const int m = stats.m();
  RatioWitness best;
  try {
    best = min_alpha_beta(stats);
  } catch (const NoAdmissibleRatio&) {
    out.push_back(violation("ratio-bound", 0, 0, "no positive denominator", 0, 0));
    return out;
  }
  if (!best.ratio.within_bound(m)) {
    out.push_back(violation("ratio-bound", best.v, best.k, "(m-2)*num > den", static_cast<Count>(m - 2) * best.ratio.numerator,
                            best.ratio.denominator));
  }
  Count num = 0, den = 0;
  for (int k = 1; k <= m - 3; ++k) {
    num += stats.sum(TripleStats::P, k) + stats.sum(TripleStats::RPrime, k);
    for (Vertex v = 0; v < stats.size(); ++v) den += s_exact(stats, v, k) + t_exact(stats, v, k);
  }
  if (den != static_cast<Count>(m - 2) * num) {
    out.push_back(violation("ratio-bound", 0, 0, "sum(s+t) != (m-2)*sum(p+r')", den, static_cast<Count>(m - 2) * num));
  }
  if (den > 0 && best.ratio > ExactRatio{num, den}) {
    out.push_back(violation("ratio-bound", best.v, best.k, "min ratio above pooled ratio", best.ratio.numerator,
                            best.ratio.denominator));
  }
  return out;
}

}  // namespace mfas
