#include <doctest.h>

#include <random>

#include "mfas/digraph.hpp"
#include "mfas/errors.hpp"
#include "oracles.hpp"

using namespace mfas;

TEST_CASE("build canonicalises adjacency") {
  const Digraph g = oracle::from_edges(3, {{1, 2}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(std::vector<Vertex>(g.out(0).begin(), g.out(0).end()) == std::vector<Vertex>{1});
  CHECK(std::vector<Vertex>(g.in(2).begin(), g.in(2).end()) == std::vector<Vertex>{1});
  CHECK(g.label(2) == 2);
}

TEST_CASE("build rejects loops, duplicates and bad ids") {
  CHECK_THROWS_AS(oracle::from_edges(2, {{0, 0}}), LoopEdge);
  CHECK_THROWS_AS(oracle::from_edges(2, {{0, 1}, {0, 1}}), DuplicateEdge);
  CHECK_THROWS_AS(oracle::from_edges(2, {{0, 2}}), VertexOutOfRange);
  // antiparallel pairs are legal content
  CHECK(oracle::from_edges(2, {{0, 1}, {1, 0}}).edge_count() == 2);
}

TEST_CASE("gamma") {
  CHECK(gamma(oracle::cycle(5)) == 5);
  CHECK(gamma(Digraph::build(4, {})) == 6);
  CHECK(gamma(oracle::cycle(6)) == 9);
  CHECK(gamma(Digraph::build(0, {})) == 0);
  CHECK(gamma(oracle::from_edges(3, {{0, 1}, {1, 0}})) == 2);
}

TEST_CASE("edges_between and missing_between") {
  const Digraph c6 = oracle::cycle(6);
  const VertexSet a{1, 2}, b{3, 4, 5, 0};
  auto ab = edges_between(c6, a, b);
  CHECK(ab.count == 1);
  CHECK(ab.edges == std::vector<Edge>{{2, 3}});
  auto ba = edges_between(c6, b, a);
  CHECK(ba.count == 1);
  CHECK(ba.edges == std::vector<Edge>{{0, 1}});
  CHECK(edges_between(c6, {}, b).count == 0);
  CHECK(missing_between(c6, a, b) == 6);
  CHECK(missing_between(oracle::from_edges(2, {{0, 1}}), {0}, {1}) == 0);
  CHECK(missing_between(Digraph::build(5, {}), {0, 1}, {2, 3, 4}) == 6);
  CHECK_THROWS_AS(edges_between(c6, {1, 2}, {2, 3}), OverlappingSets);
  CHECK_THROWS_AS(missing_between(c6, {1}, {1}), OverlappingSets);
}

TEST_CASE("missing_between is symmetric and matches brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph g = oracle::random_digraph(9, 0.3, rng);
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < g.size(); ++v) {
      switch (rng() % 3) {
        case 0: a.push_back(v); break;
        case 1: b.push_back(v); break;
        default: break;
      }
    }
    const VertexSet sa(a), sb(b);
    CHECK(missing_between(g, sa, sb) == missing_between(g, sb, sa));
    CHECK(missing_between(g, sa, sb) == oracle::brute_missing(g, a, b));
  }
}

TEST_CASE("gamma decomposes over every bipartition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph g = oracle::random_digraph(2 + rng() % 9, 0.35, rng);
    CHECK(gamma(g) == oracle::brute_gamma(g));
    std::vector<Vertex> one, two;
    for (Vertex v = 0; v < g.size(); ++v) (rng() & 1 ? one : two).push_back(v);
    const VertexSet s1(one), s2(two);
    CHECK(gamma(g) == gamma(induced(g, s1)) + gamma(induced(g, s2)) + missing_between(g, s1, s2));
  }
}

TEST_CASE("is_acyclic") {
  auto path = is_acyclic(oracle::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  REQUIRE(std::holds_alternative<std::vector<Vertex>>(path));
  CHECK(std::get<std::vector<Vertex>>(path) == std::vector<Vertex>{0, 1, 2, 3});

  const Digraph c6 = oracle::cycle(6);
  auto cyc = is_acyclic(c6);
  REQUIRE(std::holds_alternative<CycleWitness>(cyc));
  CHECK(std::get<CycleWitness>(cyc).length() == 6);
  CHECK(is_cycle_of(c6, std::get<CycleWitness>(cyc)));

  auto empty = is_acyclic(Digraph::build(0, {}));
  CHECK(std::get<std::vector<Vertex>>(empty).empty());
}

TEST_CASE("girth and check_m_free") {
  const Digraph c6 = oracle::cycle(6);
  REQUIRE(girth(c6));
  CHECK(girth(c6)->length() == 6);
  CHECK_FALSE(girth(oracle::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})));

  std::vector<Edge> circ;
  for (Vertex i = 0; i < 7; ++i) {
    circ.push_back({i, (i + 1) % 7});
    circ.push_back({i, (i + 2) % 7});
  }
  const Digraph c7_12 = Digraph::build(7, circ);
  CHECK(oracle::brute_girth(c7_12) == 4);
  CHECK(girth(c7_12)->length() == 4);
  CHECK(is_cycle_of(c7_12, *girth(c7_12)));

  CHECK_FALSE(check_m_free(c6, 4));
  REQUIRE(check_m_free(c6, 6));
  CHECK(check_m_free(c6, 6)->length() == 6);
  const auto tri = check_m_free(oracle::cycle(3), 4);
  REQUIRE(tri);
  CHECK(tri->length() == 3);
  CHECK(check_m_free(oracle::from_edges(2, {{0, 1}, {1, 0}}), 2)->length() == 2);
}

TEST_CASE("girth agrees with brute-force cycle enumeration and with is_acyclic") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const Digraph g = oracle::random_digraph(1 + rng() % 7, 0.15 + 0.05 * (trial % 6), rng);
    const auto w = girth(g);
    const std::size_t brute = oracle::brute_girth(g);
    if (brute == oracle::kInf) {
      CHECK_FALSE(w);
      CHECK(acyclic(g));
    } else {
      REQUIRE(w);
      CHECK(w->length() == brute);
      CHECK(is_cycle_of(g, *w));
      CHECK_FALSE(acyclic(g));
      CHECK(is_cycle_of(g, std::get<CycleWitness>(is_acyclic(g))));
    }
  }
}

TEST_CASE("induced composes labels") {
  const Digraph c6 = oracle::cycle(6);
  const Digraph h = induced(c6, {3, 4, 5, 0});
  CHECK(h.size() == 4);
  CHECK(h.edge_count() == 3);
  CHECK(gamma(h) == 3);
  std::vector<Edge> labelled;
  for (const Edge& e : h.edges()) labelled.push_back(h.labeled(e));
  std::sort(labelled.begin(), labelled.end());
  CHECK(labelled == std::vector<Edge>{{3, 4}, {4, 5}, {5, 0}});

  const Digraph inner = induced(h, {2, 3});  // h is ordered 0,3,4,5
  CHECK(inner.label(0) == 4);
  CHECK(inner.labeled(inner.edges().at(0)) == Edge{4, 5});

  CHECK(induced(c6, {0, 1, 2, 3, 4, 5}) == c6);
  CHECK(induced(c6, {}).size() == 0);
  CHECK_THROWS_AS(induced(c6, {6}), VertexOutOfRange);
}

TEST_CASE("trim") {
  auto path = trim(oracle::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(path.graph.size() == 0);
  CHECK(path.removed == std::vector<Vertex>{0, 2, 1});

  const Digraph c6 = oracle::cycle(6);
  auto same = trim(c6);
  CHECK(same.removed.empty());
  CHECK(same.graph == c6);

  std::vector<Edge> with_tail = c6.edges();
  with_tail.push_back({6, 0});
  auto pendant = trim(Digraph::build(7, with_tail));
  CHECK(pendant.removed == std::vector<Vertex>{6});
  CHECK(pendant.graph.size() == 6);
  CHECK(gamma(pendant.graph) == 9);
}

TEST_CASE("trim keeps exactly the edges on cycles") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const Digraph g = oracle::random_digraph(2 + rng() % 9, 0.12 + 0.03 * (trial % 5), rng);
    const auto t = trim(g);
    for (Vertex v = 0; v < t.graph.size(); ++v) {
      CHECK_FALSE(t.graph.in(v).empty());
      CHECK_FALSE(t.graph.out(v).empty());
    }
    CHECK(oracle::edges_on_cycles(g) == oracle::edges_on_cycles(t.graph));
    CHECK(oracle::brute_girth(g) == oracle::brute_girth(t.graph));
  }
}
