#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace mfas {

using Vertex = std::uint32_t;
using Count = std::uint64_t;
__extension__ typedef unsigned __int128 WideCount;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.from << ',' << e.to << ')';
}

/// A directed cycle v0 -> v1 -> ... -> v(l-1) -> v0, stored without repeating v0.
struct CycleWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Strictly increasing list of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  /// Sorts `ids`; throws std::invalid_argument on a repeated id.
  explicit VertexSet(std::vector<Vertex> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;

  std::span<const Vertex> ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }

  /// Elements of this set not in `other`.
  VertexSet minus(const VertexSet& other) const;
  VertexSet united(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace mfas
