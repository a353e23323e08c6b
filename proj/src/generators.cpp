#include "mfas/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mfas/errors.hpp"

namespace mfas {
namespace {

// Unbiased draw from [0, bound) by rejection on the raw 64-bit stream.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Probability Probability::parse(const std::string& text) {
  Probability p;
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      p.numerator = std::stoull(text, &used);
      if (used != text.size()) throw BadParameter("bad probability '" + text + "'");
    } else {
      p.numerator = std::stoull(text.substr(0, slash), &used);
      if (used != slash) throw BadParameter("bad probability '" + text + "'");
      p.denominator = std::stoull(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1) throw BadParameter("bad probability '" + text + "'");
    }
  } catch (const std::logic_error&) {
    throw BadParameter("bad probability '" + text + "'");
  }
  if (p.denominator == 0 || p.numerator > p.denominator) throw BadParameter("probability outside [0,1]: " + text);
  return p;
}

const char* to_string(Model model) {
  switch (model) {
    case Model::Cycle: return "cycle";
    case Model::Circulant: return "circulant";
    case Model::Blowup: return "blowup";
    case Model::ErRepair: return "er";
  }
  return "?";
}

Model parse_model(const std::string& name) {
  for (Model m : {Model::Cycle, Model::Circulant, Model::Blowup, Model::ErRepair}) {
    if (name == to_string(m)) return m;
  }
  throw BadParameter("unknown model '" + name + "'");
}

Digraph gen_cycle(std::size_t n) {
  if (n < 2) throw BadParameter("cycle needs n >= 2");
  return gen_circulant(n, {1});
}

Digraph gen_circulant(std::size_t n, const std::vector<std::size_t>& steps) {
  if (steps.empty()) throw BadStep("circulant needs at least one step");
  std::vector<std::size_t> sorted = steps;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw BadStep("repeated circulant step");
  if (sorted.front() < 1 || sorted.back() >= n) throw BadStep("circulant step outside [1, n-1]");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s : sorted) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + s) % n)});
  }
  return Digraph::build(n, edges);
}

Digraph gen_blowup(std::size_t base_len, const std::vector<std::size_t>& sizes, std::uint64_t seed) {
  if (base_len < 3) throw BadSizes("blow-up needs a base cycle of length >= 3");
  if (sizes.size() != base_len) throw BadSizes("blow-up needs one class size per base vertex");
  if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) throw BadSizes("blow-up class sizes must be positive");
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});

  std::vector<Vertex> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Vertex{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(relabel[i - 1], relabel[draw_below(rng, i)]);

  std::vector<std::size_t> first(base_len + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), first.begin() + 1);
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < base_len; ++c) {
    const std::size_t d = (c + 1) % base_len;
    for (std::size_t a = first[c]; a < first[c + 1]; ++a) {
      for (std::size_t b = first[d]; b < first[d + 1]; ++b) edges.push_back({relabel[a], relabel[b]});
    }
  }
  return Digraph::build(n, edges);
}

Digraph gen_er_repair(std::size_t n, Probability p, int m, std::uint64_t seed) {
  if (p.denominator == 0 || p.numerator > p.denominator) throw BadParameter("probability outside [0,1]");
  if (m < 4) throw UnsupportedM(m);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const WideCount draw = rng();
      if (draw * p.denominator < static_cast<WideCount>(p.numerator) << 64) edges.push_back({u, v});
    }
  }
  Digraph g = Digraph::build(n, edges);
  while (auto cycle = check_m_free(g, m)) {
    const auto& c = cycle->vertices;
    Edge smallest{c.back(), c.front()};
    for (std::size_t i = 0; i + 1 < c.size(); ++i) smallest = std::min(smallest, Edge{c[i], c[i + 1]});
    g = remove_edges(g, std::span<const Edge>(&smallest, 1));
  }
  return g;
}

Digraph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::Cycle: return gen_cycle(spec.n);
    case Model::Circulant: return gen_circulant(spec.n, spec.steps);
    case Model::Blowup: return gen_blowup(spec.n, spec.sizes, spec.seed);
    case Model::ErRepair: return gen_er_repair(spec.n, spec.p, spec.m, spec.seed);
  }
  throw BadParameter("unknown model");
}

}  // namespace mfas
