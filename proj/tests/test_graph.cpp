#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rtr/graph.hpp"

using namespace rtr;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

void check_structure(const Graph& g) {
  std::size_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nbrs = g.neighbors(v);
    total += nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      CHECK(nbrs[i] != v);
      if (i) CHECK(nbrs[i - 1] < nbrs[i]);
      CHECK(g.has_edge(nbrs[i], v));
      auto e = g.incident_edges(v)[i];
      auto [lo, hi] = g.endpoints(e);
      CHECK(lo < hi);
      CHECK(((lo == v && hi == nbrs[i]) || (hi == v && lo == nbrs[i])));
    }
  }
  CHECK(total == 2 * g.num_edges());
}

}  // namespace

TEST_CASE("load drops self-loops and merges duplicate and reversed edges") {
  Graph g = parse("0 1\n1 0\n2 2\n0 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 2));
  check_structure(g);
}

TEST_CASE("labels are remapped in first-appearance order") {
  Graph g = parse("# comment\n5 7\n\n7 9\n");
  REQUIRE(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.label(0) == 5);
  CHECK(g.label(1) == 7);
  CHECK(g.label(2) == 9);
  CHECK(g.vertex_of(9) == Vertex{2});
  CHECK_FALSE(g.vertex_of(6).has_value());
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("labels up to 2^64-1 and tabs, CRLF line endings") {
  Graph g = parse("18446744073709551615\t3\r\n3 4\r\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.label(0) == 18446744073709551615ULL);
}

TEST_CASE("loop-only vertices are dropped entirely") {
  Graph g = parse("4 4\n1 2\n");
  CHECK(g.num_vertices() == 2);
  CHECK_FALSE(g.vertex_of(4).has_value());
}

TEST_CASE("parse errors name the line") {
  try {
    parse("0 1\n# ok\n2 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("1\n"), ParseError);
  CHECK_THROWS_AS(parse("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse("-1 2\n"), ParseError);
}

TEST_CASE("empty input and self-loop-only input report no edges") {
  CHECK_THROWS_WITH_AS(parse(""), "no edges", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("# nothing\n3 3\n"), "no edges", std::runtime_error);
}

TEST_CASE("canonical edge list reloads to the same degree sequence") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    auto edges = oracle::random_edges(25, 0.2, rng);
    edges.emplace_back(3, 3);
    std::ostringstream text;
    for (auto [u, v] : edges) text << (u * 11 + 100) << ' ' << (v * 11 + 100) << '\n';
    Graph g = parse(text.str());
    check_structure(g);

    std::ostringstream canon;
    write_edge_list(g, canon);
    Graph h = parse(canon.str());
    REQUIRE(h.num_vertices() == g.num_vertices());
    REQUIRE(h.num_edges() == g.num_edges());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto w = h.vertex_of(g.label(v));
      REQUIRE(w.has_value());
      CHECK(h.degree(*w) == g.degree(v));
    }
    std::ostringstream again;
    write_edge_list(h, again);
    CHECK(again.str() == canon.str());
  }
}

TEST_CASE("induced_edge_count") {
  SUBCASE("K4 whole set") { CHECK(induced_edge_count(fixture::clique(4), fixture::iota(0, 4)) == 6); }
  SUBCASE("three consecutive vertices of a 5-cycle") {
    CHECK(induced_edge_count(fixture::cycle(5), std::vector<Vertex>{1, 2, 3}) == 2);
  }
  SUBCASE("V gives m, empty set gives 0") {
    Graph g = fixture::cycle(7);
    CHECK(induced_edge_count(g, fixture::iota(0, 7)) == g.num_edges());
    CHECK(induced_edge_count(g, std::vector<Vertex>{}) == 0);
  }
  SUBCASE("random G(12, 0.4) against pair enumeration") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 50; ++round) {
      auto edges = oracle::random_edges(12, 0.4, rng);
      Graph g = Graph::from_edges(12, edges);
      auto a = oracle::to_matrix(12, edges);
      std::vector<Vertex> all = fixture::iota(0, 12);
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<Vertex> s(all.begin(), all.begin() + 6);
      CHECK(induced_edge_count(g, s) == oracle::induced_edges(a, s));
    }
  }
  SUBCASE("out of range and duplicate vertices") {
    Graph g = fixture::clique(3);
    CHECK_THROWS_AS(induced_edge_count(g, std::vector<Vertex>{0, 3}), std::domain_error);
    CHECK_THROWS_AS(induced_edge_count(g, std::vector<Vertex>{1, 1}), std::domain_error);
  }
}

TEST_CASE("from_edges keeps isolated vertices") {
  Graph g = Graph::from_edges(5, fixture::EdgeList{{0, 1}});
  CHECK(g.num_vertices() == 5);
  CHECK(g.degree(4) == 0);
  CHECK(g.find_edge(0, 1) == EdgeId{0});
  CHECK_FALSE(g.find_edge(2, 3).has_value());
}
