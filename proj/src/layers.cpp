#include "mfas/layers.hpp"

#include <algorithm>
#include <limits>

#include "mfas/errors.hpp"

namespace mfas {

const char* to_string(Direction d) { return d == Direction::Out ? "out" : "in"; }

VertexSet LayerDecomposition::merged(int first, int last) const {
  std::vector<Vertex> ids;
  for (int i = first; i <= last && i <= depth_cap; ++i) {
    const auto& layer = (*this)[i];
    ids.insert(ids.end(), layer.begin(), layer.end());
  }
  return VertexSet(std::move(ids));
}

LayerDecomposition layers_of(const Digraph& g, Vertex v, Direction d, int depth_cap) {
  if (v >= g.size()) throw VertexOutOfRange(v, g.size());
  if (depth_cap < 1) throw BadParameter("depth_cap must be >= 1");
  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> dist(g.size(), kUnreached);
  std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(depth_cap) + 1);
  dist[v] = 0;
  layers[0].push_back(v);
  for (int i = 0; i < depth_cap; ++i) {
    for (Vertex u : layers[static_cast<std::size_t>(i)]) {
      auto next = d == Direction::Out ? g.out(u) : g.in(u);
      for (Vertex w : next) {
        if (dist[w] != kUnreached) continue;
        dist[w] = i + 1;
        layers[static_cast<std::size_t>(i) + 1].push_back(w);
      }
    }
  }
  LayerDecomposition result{v, d, depth_cap, {}};
  result.layers.reserve(layers.size());
  for (auto& layer : layers) result.layers.emplace_back(std::move(layer));
  return result;
}

LayerDecomposition out_layers(const Digraph& g, Vertex v, int depth_cap) {
  return layers_of(g, v, Direction::Out, depth_cap);
}

LayerDecomposition in_layers(const Digraph& g, Vertex v, int depth_cap) {
  return layers_of(g, v, Direction::In, depth_cap);
}

void require_k_in_range(int k, int m) {
  if (k < 1 || k > m - 3) throw KOutOfRange(k, m);
}

Count cut_layer_edges(const Digraph& g, const LayerDecomposition& d, int k) {
  if (k + 2 > d.depth_cap) throw BadParameter("layer decomposition too shallow");
  const auto& near = d[k + 1];
  const auto& far = d[k + 2];
  return d.direction == Direction::Out ? edges_between(g, near, far).count : edges_between(g, far, near).count;
}

Count surrogate_denominator(const Digraph& g, const LayerDecomposition& along, const LayerDecomposition& opposite,
                            int k, int m) {
  if (along.depth_cap < m - 1 || opposite.depth_cap < 1) throw BadParameter("layer decomposition too shallow");
  Count total = 0;
  for (int i = k + 2; i <= m - 1; ++i) total += missing_between(g, along[1], along[i]);
  for (int i = 2; i <= k + 1; ++i) total += missing_between(g, along[i], opposite[1]);
  return total;
}

Count p_layer(const Digraph& g, Vertex v, int k, int m) {
  require_k_in_range(k, m);
  return cut_layer_edges(g, out_layers(g, v, k + 2), k);
}

Count rprime_layer(const Digraph& g, Vertex v, int k, int m) {
  require_k_in_range(k, m);
  return cut_layer_edges(g, in_layers(g, v, k + 2), k);
}

Count s_surrogate(const Digraph& g, Vertex v, int k, int m) {
  require_k_in_range(k, m);
  return surrogate_denominator(g, out_layers(g, v, m - 1), in_layers(g, v, m - 1), k, m);
}

Count t_surrogate(const Digraph& g, Vertex v, int k, int m) {
  require_k_in_range(k, m);
  return surrogate_denominator(g, in_layers(g, v, m - 1), out_layers(g, v, m - 1), k, m);
}

}  // namespace mfas
