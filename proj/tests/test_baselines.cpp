#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rtr/baselines.hpp"
#include "rtr/metrics.hpp"

using namespace rtr;

TEST_CASE("greedy peel finds K4 next to a path") {
  fixture::EdgeList edges;
  fixture::add_clique(edges, 0, 4);
  for (Vertex v = 3; v < 9; ++v) edges.emplace_back(v, v + 1);
  Graph g = Graph::from_edges(10, edges);
  auto r = greedy_peel(g);
  CHECK(r.vertices == fixture::iota(0, 4));
  CHECK(r.average_degree == doctest::Approx(3.0));
}

TEST_CASE("greedy peel edge cases") {
  auto r = greedy_peel(Graph::from_edges(2, fixture::EdgeList{{0, 1}}));
  CHECK(r.vertices == std::vector<Vertex>{0, 1});
  CHECK(r.average_degree == 1.0);
  CHECK_THROWS_WITH_AS(greedy_peel(Graph::from_edges(3, fixture::EdgeList{})), "no edges", std::runtime_error);
}

TEST_CASE("greedy peel is within factor 2 of the densest subgraph (n <= 10)") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 4 + round % 7;
    auto edges = oracle::random_edges(n, 0.2 + 0.6 * (round % 5) / 4.0, rng);
    if (edges.empty()) continue;
    Graph g = Graph::from_edges(n, edges);
    auto r = greedy_peel(g);
    const double best = oracle::max_average_degree(oracle::to_matrix(g));
    CHECK(r.average_degree <= best + 1e-12);
    CHECK(2.0 * r.average_degree >= best - 1e-12);
    const double recomputed =
        2.0 * static_cast<double>(induced_edge_count(g, r.vertices)) / static_cast<double>(r.vertices.size());
    CHECK(r.average_degree == doctest::Approx(recomputed));
  }
}

TEST_CASE("iterated greedy") {
  SUBCASE("two disjoint K4 tie with their union, which is kept") {
    fixture::EdgeList edges;
    fixture::add_clique(edges, 0, 4);
    fixture::add_clique(edges, 4, 4);
    auto fam = iterated_greedy(Graph::from_edges(8, edges), 10);
    REQUIRE(fam.sets.size() == 1);
    CHECK(fam.sets[0] == fixture::iota(0, 8));
  }
  SUBCASE("edgeless graph gives nothing") {
    auto fam = iterated_greedy(Graph::from_edges(4, fixture::EdgeList{}), 5);
    CHECK(fam.sets.empty());
    CHECK(fam.unassigned == fixture::iota(0, 4));
  }
  SUBCASE("star K(1,9) is taken whole") {
    fixture::EdgeList edges;
    for (Vertex v = 1; v < 10; ++v) edges.emplace_back(0, v);
    auto fam = iterated_greedy(Graph::from_edges(10, edges), 5);
    REQUIRE(fam.sets.size() == 1);
    CHECK(fam.sets[0] == fixture::iota(0, 10));
  }
  SUBCASE("max_sets caps the output") {
    fixture::EdgeList edges;
    fixture::add_clique(edges, 0, 5);
    fixture::add_clique(edges, 5, 4);
    fixture::add_clique(edges, 9, 3);
    Graph g = Graph::from_edges(12, edges);
    auto fam = iterated_greedy(g, 2);
    REQUIRE(fam.sets.size() == 2);
    CHECK(fam.sets[0] == fixture::iota(0, 5));
    CHECK(fam.sets[1] == fixture::iota(5, 4));
    fam.check_partition(12);
    CHECK_THROWS_AS(iterated_greedy(g, 0), std::invalid_argument);
  }
}

TEST_CASE("core numbers") {
  SUBCASE("K4") {
    auto core = core_decomposition(fixture::clique(4));
    CHECK(core == std::vector<std::uint32_t>(4, 3));
  }
  SUBCASE("path") {
    auto core = core_decomposition(fixture::path(5));
    CHECK(core == std::vector<std::uint32_t>(5, 1));
  }
  SUBCASE("random graphs against the definition") {
    std::mt19937_64 rng(40);
    for (int round = 0; round < 20; ++round) {
      Graph g = Graph::from_edges(40, oracle::random_edges(40, 0.15, rng));
      auto core = core_decomposition(g);
      CHECK(core == oracle::core_numbers(oracle::to_matrix(g)));
    }
  }
  SUBCASE("relabelling permutes core numbers") {
    std::mt19937_64 rng(41);
    auto edges = oracle::random_edges(30, 0.2, rng);
    std::vector<Vertex> perm = fixture::iota(0, 30);
    std::shuffle(perm.begin(), perm.end(), rng);
    fixture::EdgeList moved;
    for (auto [u, v] : edges) moved.emplace_back(perm[u], perm[v]);
    auto a = core_decomposition(Graph::from_edges(30, edges));
    auto b = core_decomposition(Graph::from_edges(30, moved));
    for (Vertex v = 0; v < 30; ++v) CHECK(a[v] == b[perm[v]]);
  }
}

TEST_CASE("core components") {
  fixture::EdgeList edges;
  fixture::add_clique(edges, 0, 4);
  fixture::add_clique(edges, 6, 5);
  edges.emplace_back(3, 4);
  edges.emplace_back(4, 5);
  edges.emplace_back(5, 6);
  Graph g = Graph::from_edges(12, edges);
  auto core = core_decomposition(g);
  auto fam = core_components(g, core, 3);
  REQUIRE(fam.sets.size() == 2);
  CHECK(fam.sets[0] == fixture::iota(0, 4));
  CHECK(fam.sets[1] == fixture::iota(6, 5));
  fam.check_partition(12);
  auto low = core_components(g, core, 0);
  REQUIRE(low.sets.size() == 1);
  CHECK(low.sets[0] == fixture::iota(0, 11));
  CHECK(low.unassigned == std::vector<Vertex>{11});
}
