#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mfas/digraph.hpp"
#include "mfas/layers.hpp"
#include "mfas/ratio.hpp"

namespace mfas {

/// One way to split the graph: cut after the (k+1)-th BFS layer of v along `side`.
struct Candidate {
  Vertex v = 0;
  int k = 1;
  Direction side = Direction::Out;
  Count numerator = 0;    // edges that the split removes
  Count denominator = 0;  // missing-edge surrogate

  ExactRatio ratio() const { return {numerator, denominator}; }
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Zero-numerator candidates are always admissible; otherwise (m-2)*num <= den.
bool is_admissible(const Candidate& c, int m);

/// Total order used to pick among admissible candidates: ratio, Out before In, v, k.
bool precedes(const Candidate& a, const Candidate& b);

/// All (v, k, side) candidates of a graph, ordered by v, then side, then k.
std::vector<Candidate> enumerate_candidates(const Digraph& g, int m, unsigned jobs = 1);

/// The admissible candidate that comes first under precedes().
/// Expects g trimmed, cyclic and m-free; throws NoAdmissibleCandidate otherwise.
Candidate select_candidate(const Digraph& g, int m, unsigned jobs = 1);

struct SplitResult {
  VertexSet part1;          // the first k+1 layers of v along the candidate side
  VertexSet part2;          // everything else, v included
  std::vector<Edge> cut;    // E(part1, part2) for Out, E(part2, part1) for In
};

SplitResult split(const Digraph& g, const Candidate& c, int m);

enum class NodeKind { Base, Trim, Split };

const char* to_string(NodeKind kind);

/// One step of the recursion. All vertex ids are labels of the input graph.
struct TraceNode {
  NodeKind kind = NodeKind::Base;
  std::size_t vertex_count = 0;

  // Trim
  std::vector<Vertex> removed;

  // Split
  Candidate candidate;
  std::vector<Vertex> part1;
  std::vector<Vertex> part2;
  std::vector<Edge> cut;
  Count missing = 0;
  Count gamma = 0;
  Count gamma1 = 0;
  Count gamma2 = 0;

  std::vector<std::size_t> children;

  friend bool operator==(const TraceNode&, const TraceNode&) = default;
};

struct FasResult {
  std::vector<Edge> edges;        // sorted, labels of the input graph
  std::vector<TraceNode> trace;   // pre-order; trace[0] is the root
  int m = 0;
  Count gamma_input = 0;

  friend bool operator==(const FasResult&, const FasResult&) = default;
};

struct SolveOptions {
  unsigned jobs = 1;
};

/// Feedback arc set X with (m-2)|X| <= gamma(g) for an m-free digraph, m >= 4.
///
/// Throws UnsupportedM, NotMFree, or InternalBoundViolation (a split step
/// failing its own inequality, which indicates a bug).
FasResult solve(const Digraph& g, int m, const SolveOptions& options = {});

/// Replays `result` against `g` from scratch; returns one message per failed check.
std::vector<std::string> verify_certificate(const Digraph& g, int m, const FasResult& result);

}  // namespace mfas
