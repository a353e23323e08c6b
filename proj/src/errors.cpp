#include "mfas/errors.hpp"

#include <sstream>

namespace mfas {
namespace {

std::string cycle_text(const CycleWitness& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) os << w.vertices[i] << " -> ";
  if (!w.vertices.empty()) os << w.vertices.front();
  return os.str();
}

}  // namespace

LoopEdge::LoopEdge(Vertex v) : Error("loop edge (" + std::to_string(v) + "," + std::to_string(v) + ")"), vertex(v) {}

DuplicateEdge::DuplicateEdge(Edge e)
    : Error("duplicate edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ")"), edge(e) {}

VertexOutOfRange::VertexOutOfRange(Vertex v, std::size_t n)
    : Error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")"), vertex(v) {}

OverlappingSets::OverlappingSets(Vertex shared)
    : Error("vertex sets overlap at " + std::to_string(shared)), vertex(shared) {}

KOutOfRange::KOutOfRange(int k, int m)
    : Error("k=" + std::to_string(k) + " outside [1," + std::to_string(m - 3) + "] for m=" + std::to_string(m)) {}

UnsupportedM::UnsupportedM(int m) : Error("unsupported m=" + std::to_string(m) + " (need m >= 4)") {}

NotMFree::NotMFree(int m_, CycleWitness w)
    : Error("graph is not " + std::to_string(m_) + "-free: cycle of length " + std::to_string(w.length()) + ": " +
            cycle_text(w)),
      m(m_),
      witness(std::move(w)) {}

TooLarge::TooLarge(std::size_t n_, std::size_t limit)
    : Error("graph too large for exact search: n=" + std::to_string(n_) + " > " + std::to_string(limit)), n(n_) {}

ParseError::ParseError(std::size_t line_, const std::string& what)
    : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}

}  // namespace mfas
