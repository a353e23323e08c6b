#include "mfas/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>

#include "mfas/errors.hpp"

namespace mfas {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

enum : std::uint8_t { kInA = 1, kInB = 2 };

std::vector<std::uint8_t> mark_disjoint(const Digraph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<std::uint8_t> mark(g.size(), 0);
  for (Vertex v : a) {
    if (v >= g.size()) throw VertexOutOfRange(v, g.size());
    mark[v] = kInA;
  }
  for (Vertex v : b) {
    if (v >= g.size()) throw VertexOutOfRange(v, g.size());
    if (mark[v] == kInA) throw OverlappingSets(v);
    mark[v] = kInB;
  }
  return mark;
}

CycleWitness canonical_rotation(std::vector<Vertex> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return CycleWitness{std::move(cycle)};
}

}  // namespace

Digraph Digraph::build(std::size_t n, std::span<const Edge> edges) {
  std::vector<Vertex> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Vertex>(i);
  return build(n, edges, std::move(labels));
}

Digraph Digraph::build(std::size_t n, std::span<const Edge> edges, std::vector<Vertex> labels) {
  if (labels.size() != n) throw BadParameter("label count does not match vertex count");
  Digraph g;
  g.out_.resize(n);
  g.in_.resize(n);
  g.labels_ = std::move(labels);
  for (const Edge& e : edges) {
    if (e.from >= n) throw VertexOutOfRange(e.from, n);
    if (e.to >= n) throw VertexOutOfRange(e.to, n);
    if (e.from == e.to) throw LoopEdge(e.from);
    g.out_[e.from].push_back(e.to);
    g.in_[e.to].push_back(e.from);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& out = g.out_[v];
    std::sort(out.begin(), out.end());
    if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end()) {
      throw DuplicateEdge(Edge{static_cast<Vertex>(v), *dup});
    }
    std::sort(g.in_[v].begin(), g.in_[v].end());
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  const auto& out = out_[u];
  return std::binary_search(out.begin(), out.end(), v);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : out_[u]) result.push_back({u, v});
  }
  return result;
}

std::optional<Vertex> Digraph::find_label(Vertex label) const {
  for (Vertex v = 0; v < size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

Count gamma(const Digraph& g) {
  const Count n = g.size();
  Count adjacent_pairs = 0;
  for (const Edge& e : g.edges()) {
    // an antiparallel pair is one unordered pair; count it from its smaller tail
    if (e.from > e.to && g.has_edge(e.to, e.from)) continue;
    ++adjacent_pairs;
  }
  return n * (n - (n > 0 ? 1 : 0)) / 2 - adjacent_pairs;
}

EdgesBetween edges_between(const Digraph& g, const VertexSet& a, const VertexSet& b) {
  const auto mark = mark_disjoint(g, a, b);
  EdgesBetween result;
  for (Vertex u : a) {
    for (Vertex v : g.out(u)) {
      if (mark[v] == kInB) result.edges.push_back({u, v});
    }
  }
  result.count = result.edges.size();
  return result;
}

Count missing_between(const Digraph& g, const VertexSet& a, const VertexSet& b) {
  const auto mark = mark_disjoint(g, a, b);
  Count cross = 0;
  for (Vertex u : a) {
    for (Vertex v : g.out(u)) cross += mark[v] == kInB;
    for (Vertex v : g.in(u)) cross += mark[v] == kInB && !g.has_edge(u, v);
  }
  return static_cast<Count>(a.size()) * b.size() - cross;
}

Acyclicity is_acyclic(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> indeg(n);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    indeg[v] = g.in(v).size();
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    Vertex u = ready.top();
    ready.pop();
    order.push_back(u);
    for (Vertex w : g.out(u)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (order.size() == n) return order;

  // Every leftover vertex still has a leftover in-neighbour; walk backwards until a repeat.
  std::vector<std::size_t> seen_at(n, kUnreached);
  std::vector<Vertex> walk;
  Vertex x = 0;
  while (indeg[x] == 0) ++x;
  while (seen_at[x] == kUnreached) {
    seen_at[x] = walk.size();
    walk.push_back(x);
    for (Vertex p : g.in(x)) {
      if (indeg[p] != 0) {
        x = p;
        break;
      }
    }
  }
  std::vector<Vertex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[x]), walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return canonical_rotation(std::move(cycle));
}

std::optional<CycleWitness> girth(const Digraph& g) {
  const std::size_t n = g.size();
  std::size_t best = kUnreached;
  std::optional<CycleWitness> witness;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      // a cycle closed through anything deeper cannot beat `best`
      if (best != kUnreached && dist[u] + 2 >= best) break;
      for (Vertex w : g.out(u)) {
        if (dist[w] != kUnreached) continue;
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
    Vertex closer = 0;
    std::size_t local = kUnreached;
    for (Vertex u : g.in(s)) {
      if (dist[u] != kUnreached && dist[u] + 1 < local) {
        local = dist[u] + 1;
        closer = u;
      }
    }
    if (local < best) {
      best = local;
      std::vector<Vertex> cycle;
      for (Vertex x = closer; x != s; x = parent[x]) cycle.push_back(x);
      cycle.push_back(s);
      std::reverse(cycle.begin(), cycle.end());
      witness = CycleWitness{std::move(cycle)};
      if (best == 2) break;
    }
  }
  return witness;
}

std::optional<CycleWitness> check_m_free(const Digraph& g, int m) {
  auto shortest = girth(g);
  if (shortest && shortest->length() <= static_cast<std::size_t>(std::max(m, 0))) return shortest;
  return std::nullopt;
}

Digraph induced(const Digraph& g, const VertexSet& s) {
  const std::size_t n = g.size();
  std::vector<Vertex> index(n, std::numeric_limits<Vertex>::max());
  std::vector<Vertex> labels;
  labels.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n) throw VertexOutOfRange(s[i], n);
    index[s[i]] = static_cast<Vertex>(i);
    labels.push_back(g.label(s[i]));
  }
  std::vector<Edge> edges;
  for (Vertex u : s) {
    for (Vertex v : g.out(u)) {
      if (index[v] != std::numeric_limits<Vertex>::max()) edges.push_back({index[u], index[v]});
    }
  }
  return Digraph::build(s.size(), edges, std::move(labels));
}

Digraph remove_edges(const Digraph& g, std::span<const Edge> edges) {
  std::vector<Edge> drop(edges.begin(), edges.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Digraph::build(g.size(), kept, std::vector<Vertex>(g.labels().begin(), g.labels().end()));
}

TrimResult trim(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> indeg(n), outdeg(n);
  std::vector<bool> queued(n, false);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    indeg[v] = g.in(v).size();
    outdeg[v] = g.out(v).size();
    if (indeg[v] == 0 || outdeg[v] == 0) {
      queued[v] = true;
      queue.push_back(v);
    }
  }
  TrimResult result;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    result.removed.push_back(v);
    for (Vertex w : g.out(v)) {
      if (!queued[w] && --indeg[w] == 0) {
        queued[w] = true;
        queue.push_back(w);
      }
    }
    for (Vertex u : g.in(v)) {
      if (!queued[u] && --outdeg[u] == 0) {
        queued[u] = true;
        queue.push_back(u);
      }
    }
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v) {
    if (!queued[v]) kept.push_back(v);
  }
  result.graph = induced(g, VertexSet(std::move(kept)));
  return result;
}

bool is_cycle_of(const Digraph& g, const CycleWitness& w) {
  const auto& c = w.vertices;
  if (c.size() < 2) return false;
  std::vector<Vertex> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= g.size() || !g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

}  // namespace mfas
