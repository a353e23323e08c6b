#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mfas/types.hpp"

namespace mfas {

/// Simple loop-free digraph over dense ids [0, n).
///
/// Each vertex carries a label: the id it had in the graph the caller
/// originally built. induced() composes labels, so edges reported through
/// label() always refer to the outermost graph. Instances are immutable.
class Digraph {
 public:
  Digraph() = default;

  /// Throws LoopEdge, DuplicateEdge or VertexOutOfRange. Antiparallel pairs are allowed.
  static Digraph build(std::size_t n, std::span<const Edge> edges);
  /// Same, with an explicit label per vertex.
  static Digraph build(std::size_t n, std::span<const Edge> edges, std::vector<Vertex> labels);

  std::size_t size() const { return out_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  Vertex label(Vertex v) const { return labels_[v]; }
  std::span<const Vertex> labels() const { return labels_; }
  Edge labeled(Edge e) const { return {labels_[e.from], labels_[e.to]}; }
  /// Dense id carrying `label`, if any.
  std::optional<Vertex> find_label(Vertex label) const;

  bool operator==(const Digraph& other) const = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<Vertex> labels_;
  std::size_t edge_count_ = 0;
};

/// Unordered pairs of distinct vertices with no edge in either direction.
Count gamma(const Digraph& g);

struct EdgesBetween {
  Count count = 0;
  std::vector<Edge> edges;
};

/// E(A, B): edges from A into B. A and B must be disjoint.
EdgesBetween edges_between(const Digraph& g, const VertexSet& a, const VertexSet& b);

/// Pairs (a, b) in A x B with no edge either way; equals |A||B| - |E(A,B)| - |E(B,A)|
/// unless an antiparallel pair crosses. A and B must be disjoint.
Count missing_between(const Digraph& g, const VertexSet& a, const VertexSet& b);

/// Either a topological order or a directed cycle.
using Acyclicity = std::variant<std::vector<Vertex>, CycleWitness>;

/// Kahn's algorithm, smallest ready vertex first.
Acyclicity is_acyclic(const Digraph& g);

inline bool acyclic(const Digraph& g) {
  return std::holds_alternative<std::vector<Vertex>>(is_acyclic(g));
}

/// A shortest directed cycle, or nullopt for an acyclic graph.
std::optional<CycleWitness> girth(const Digraph& g);

/// nullopt when every directed cycle is longer than m, otherwise a cycle of length <= m.
std::optional<CycleWitness> check_m_free(const Digraph& g, int m);

/// Subgraph induced by `s`, re-indexed densely in the order of `s`.
Digraph induced(const Digraph& g, const VertexSet& s);

Digraph remove_edges(const Digraph& g, std::span<const Edge> edges);

struct TrimResult {
  Digraph graph;
  std::vector<Vertex> removed;  // ids of the input graph, in removal order
};

/// Repeatedly deletes vertices with no in-edges or no out-edges.
///
/// Candidates are processed first-in first-out, seeded in ascending id
/// order, so path 0->1->2 is removed as [0, 2, 1].
TrimResult trim(const Digraph& g);

bool is_cycle_of(const Digraph& g, const CycleWitness& w);

}  // namespace mfas
