#pragma once

#include <vector>

#include "mfas/digraph.hpp"
#include "mfas/types.hpp"

namespace mfas {

enum class Direction { Out, In };

const char* to_string(Direction d);

/// BFS distance classes from (Out) or to (In) a root.
///
/// layers[i] holds the vertices at exact distance i, so layers[0] = {root}
/// and layers has depth_cap + 1 entries; trailing entries may be empty.
struct LayerDecomposition {
  Vertex root = 0;
  Direction direction = Direction::Out;
  int depth_cap = 0;
  std::vector<VertexSet> layers;

  const VertexSet& operator[](int i) const { return layers[static_cast<std::size_t>(i)]; }
  /// Union of layers[first..last].
  VertexSet merged(int first, int last) const;
};

LayerDecomposition layers_of(const Digraph& g, Vertex v, Direction d, int depth_cap);
LayerDecomposition out_layers(const Digraph& g, Vertex v, int depth_cap);
LayerDecomposition in_layers(const Digraph& g, Vertex v, int depth_cap);

// The counts below assume an m-free graph and 1 <= k <= m-3 (else KOutOfRange).

/// |E(N+_{k+1}(v), N+_{k+2}(v))|
Count p_layer(const Digraph& g, Vertex v, int k, int m);
/// |E(N-_{k+2}(v), N-_{k+1}(v))|
Count rprime_layer(const Digraph& g, Vertex v, int k, int m);

/// sum_{i=k+2}^{m-1} miss(N+_1, N+_i) + sum_{i=2}^{k+1} miss(N+_i, N-_1)
Count s_surrogate(const Digraph& g, Vertex v, int k, int m);
/// sum_{i=k+2}^{m-1} miss(N-_1, N-_i) + sum_{i=2}^{k+1} miss(N-_i, N+_1)
Count t_surrogate(const Digraph& g, Vertex v, int k, int m);

/// Edges leaving the (k+1)-th layer towards the (k+2)-th along `d`:
/// the numerator of the split that cuts `d` after layer k+1.
Count cut_layer_edges(const Digraph& g, const LayerDecomposition& d, int k);

/// Missing-edge denominator for the split cutting `along` after layer k+1;
/// `opposite` is the decomposition of the same root in the other direction.
/// Both decompositions need depth_cap >= m - 1.
Count surrogate_denominator(const Digraph& g, const LayerDecomposition& along, const LayerDecomposition& opposite,
                            int k, int m);

void require_k_in_range(int k, int m);

}  // namespace mfas
