#include <doctest.h>

#include <random>

#include "mfas/errors.hpp"
#include "mfas/exact.hpp"
#include "oracles.hpp"

using namespace mfas;

namespace {

Digraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) edges.push_back({u, v});
    }
  }
  return Digraph::build(n, edges);
}

}  // namespace

TEST_CASE("exact values on small graphs") {
  CHECK(exact_fas_size(oracle::cycle(6)) == 1);
  CHECK(exact_fas_edges(oracle::cycle(6)) == std::vector<Edge>{{0, 1}});

  std::vector<Edge> two = oracle::cycle(3).edges();
  for (const Edge& e : oracle::cycle(3, 3).edges()) two.push_back(e);
  CHECK(exact_fas_size(Digraph::build(6, two)) == 2);

  CHECK(exact_fas_size(complete(3)) == 3);
  CHECK(brute_force_check(complete(4)) == 6);
  CHECK(exact_fas_size(complete(4)) == 6);
  CHECK(brute_force_check(oracle::cycle(5)) == 1);
  CHECK(exact_fas_size(Digraph::build(5, {})) == 0);
  CHECK(exact_fas_edges(Digraph::build(5, {})).empty());
  CHECK(exact_fas_size(Digraph::build(0, {})) == 0);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(exact_fas_size(Digraph::build(25, {})), TooLarge);
  CHECK_THROWS_AS(exact_fas_size(Digraph::build(10, {}), 9), TooLarge);
  CHECK_THROWS_AS(brute_force_check(Digraph::build(9, {})), TooLarge);
}

TEST_CASE("subset DP agrees with all orderings") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const Digraph g = oracle::random_digraph(1 + rng() % 8, 0.1 + 0.1 * (trial % 6), rng);
    CHECK(exact_fas_size(g) == brute_force_check(g));
  }
}

TEST_CASE("witness is a minimum feedback arc set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const Digraph g = oracle::random_digraph(2 + rng() % 10, 0.15 + 0.05 * (trial % 5), rng);
    const auto x = exact_fas_edges(g);
    CHECK(x.size() == exact_fas_size(g));
    CHECK(std::is_sorted(x.begin(), x.end()));
    CHECK(acyclic(remove_edges(g, x)));
    CHECK(oracle::breaks_all_cycles(g, x));
    for (const Edge& e : x) CHECK(g.has_edge(e.from, e.to));
  }
}

TEST_CASE("adding an edge never lowers the optimum") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 7;
    const Digraph g = oracle::random_digraph(n, 0.25, rng);
    const Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    auto edges = g.edges();
    edges.push_back({u, v});
    const Count before = exact_fas_size(g);
    const Count after = exact_fas_size(Digraph::build(n, edges));
    CHECK(before <= after);
    CHECK(after <= before + 1);
  }
}

TEST_CASE("witness uses input labels") {
  const Digraph g = induced(oracle::cycle(4, 2, 8), VertexSet{2, 3, 4, 5});
  CHECK(exact_fas_edges(g) == std::vector<Edge>{{2, 3}});
}
