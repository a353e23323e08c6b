#include "mfas/solver.hpp"

#include <algorithm>
#include <thread>

#include "mfas/errors.hpp"

namespace mfas {
namespace {

std::vector<Candidate> candidates_at(const Digraph& g, Vertex v, int m) {
  const auto fwd = out_layers(g, v, m - 1);
  const auto bwd = in_layers(g, v, m - 1);
  std::vector<Candidate> result;
  result.reserve(static_cast<std::size_t>(2 * (m - 3)));
  for (Direction side : {Direction::Out, Direction::In}) {
    const auto& along = side == Direction::Out ? fwd : bwd;
    const auto& opposite = side == Direction::Out ? bwd : fwd;
    for (int k = 1; k <= m - 3; ++k) {
      result.push_back(Candidate{v, k, side, cut_layer_edges(g, along, k), surrogate_denominator(g, along, opposite, k, m)});
    }
  }
  return result;
}

std::vector<Vertex> to_labels(const Digraph& g, const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

class Recursion {
 public:
  Recursion(int m, const SolveOptions& options) : m_(m), options_(options) {}

  std::size_t run(const Digraph& g) {
    const std::size_t id = trace_.size();
    trace_.emplace_back();
    trace_[id].vertex_count = g.size();
    if (acyclic(g)) return id;

    auto trimmed = trim(g);
    if (!trimmed.removed.empty()) {
      trace_[id].kind = NodeKind::Trim;
      for (Vertex v : trimmed.removed) trace_[id].removed.push_back(g.label(v));
      const std::size_t child = run(trimmed.graph);
      trace_[id].children = {child};
      return id;
    }

    Candidate c = select_candidate(g, m_, options_.jobs);
    SplitResult parts = split(g, c, m_);
    const Digraph g1 = induced(g, parts.part1);
    const Digraph g2 = induced(g, parts.part2);

    TraceNode& node = trace_[id];
    node.kind = NodeKind::Split;
    node.missing = missing_between(g, parts.part1, parts.part2);
    node.gamma = gamma(g);
    node.gamma1 = gamma(g1);
    node.gamma2 = gamma(g2);
    if (parts.cut.size() != c.numerator) {
      throw InternalBoundViolation("cut size differs from the candidate numerator");
    }
    if (static_cast<WideCount>(m_ - 2) * parts.cut.size() > node.missing) {
      throw InternalBoundViolation("(m-2)|X3| exceeds the missing edges across the split");
    }
    if (node.gamma != node.gamma1 + node.gamma2 + node.missing) {
      throw InternalBoundViolation("gamma does not decompose across the split");
    }
    c.v = g.label(c.v);
    node.candidate = c;
    node.part1 = to_labels(g, parts.part1);
    node.part2 = to_labels(g, parts.part2);
    for (const Edge& e : parts.cut) node.cut.push_back(g.labeled(e));
    std::sort(node.cut.begin(), node.cut.end());
    edges_.insert(edges_.end(), node.cut.begin(), node.cut.end());

    const std::size_t first = run(g1);
    const std::size_t second = run(g2);
    trace_[id].children = {first, second};
    return id;
  }

  FasResult finish(Count gamma_input) && {
    std::sort(edges_.begin(), edges_.end());
    return FasResult{std::move(edges_), std::move(trace_), m_, gamma_input};
  }

 private:
  int m_;
  SolveOptions options_;
  std::vector<TraceNode> trace_;
  std::vector<Edge> edges_;
};

}  // namespace

bool is_admissible(const Candidate& c, int m) { return c.numerator == 0 || c.ratio().within_bound(m); }

bool precedes(const Candidate& a, const Candidate& b) {
  if (auto order = a.ratio() <=> b.ratio(); order != 0) return order < 0;
  if (a.side != b.side) return a.side == Direction::Out;
  if (a.v != b.v) return a.v < b.v;
  return a.k < b.k;
}

std::vector<Candidate> enumerate_candidates(const Digraph& g, int m, unsigned jobs) {
  if (m < 4) throw UnsupportedM(m);
  const std::size_t n = g.size();
  std::vector<std::vector<Candidate>> per_vertex(n);
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (Vertex v = 0; v < n; ++v) per_vertex[v] = candidates_at(g, v, m);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t v = w; v < n; v += workers) per_vertex[v] = candidates_at(g, static_cast<Vertex>(v), m);
      });
    }
  }
  std::vector<Candidate> all;
  for (auto& cs : per_vertex) all.insert(all.end(), cs.begin(), cs.end());
  return all;
}

Candidate select_candidate(const Digraph& g, int m, unsigned jobs) {
  const Candidate* best = nullptr;
  const auto all = enumerate_candidates(g, m, jobs);
  for (const Candidate& c : all) {
    if (is_admissible(c, m) && (best == nullptr || precedes(c, *best))) best = &c;
  }
  if (best == nullptr) throw NoAdmissibleCandidate("no (v, k, side) satisfies (m-2)*num <= den");
  return *best;
}

SplitResult split(const Digraph& g, const Candidate& c, int m) {
  require_k_in_range(c.k, m);
  const auto layers = layers_of(g, c.v, c.side, c.k + 1);
  SplitResult result;
  result.part1 = layers.merged(1, c.k + 1);
  std::vector<Vertex> all(g.size());
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  result.part2 = VertexSet(std::move(all)).minus(result.part1);
  result.cut = c.side == Direction::Out ? edges_between(g, result.part1, result.part2).edges
                                        : edges_between(g, result.part2, result.part1).edges;
  return result;
}

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Base: return "base";
    case NodeKind::Trim: return "trim";
    case NodeKind::Split: return "split";
  }
  return "?";
}

FasResult solve(const Digraph& g, int m, const SolveOptions& options) {
  if (m < 4) throw UnsupportedM(m);
  if (auto w = check_m_free(g, m)) throw NotMFree(m, *w);
  const Count gamma_input = gamma(g);
  Recursion recursion(m, options);
  recursion.run(g);
  FasResult result = std::move(recursion).finish(gamma_input);
  if (static_cast<WideCount>(m - 2) * result.edges.size() > gamma_input) {
    throw InternalBoundViolation("(m-2)|X| exceeds gamma(G)");
  }
  return result;
}

}  // namespace mfas
