#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rtr/extractor.hpp"
#include "rtr/postprocess.hpp"

using namespace rtr;

namespace {

// Set 0 = 0..9, set 1 = 10..16; vertex 17 is unassigned and linked to the
// first `a` vertices of set 0 and the first `b` of set 1.
struct TwoSets {
  Graph g;
  SetFamily fam;
};

TwoSets two_sets(Vertex a, Vertex b) {
  fixture::EdgeList edges;
  for (Vertex i = 0; i < a; ++i) edges.emplace_back(17, i);
  for (Vertex i = 0; i < b; ++i) edges.emplace_back(17, 10 + i);
  TwoSets t{Graph::from_edges(18, edges), {}};
  t.fam.sets = {fixture::iota(0, 10), fixture::iota(10, 7)};
  t.fam.fill_unassigned(18);
  return t;
}

}  // namespace

TEST_CASE("vertex joins the set holding k or more of its neighbors") {
  auto t = two_sets(10, 3);
  auto out = grow(t.g, t.fam, 10);
  auto expect = fixture::iota(0, 10);
  expect.push_back(17);
  CHECK(out.sets[0] == expect);
  CHECK(out.sets[1] == fixture::iota(10, 7));
  CHECK(out.unassigned.empty());
}

TEST_CASE("nine neighbors is not enough for k = 10") {
  auto t = two_sets(9, 3);
  auto out = grow(t.g, t.fam, 10);
  CHECK(out.sets == t.fam.sets);
  CHECK(out.unassigned == std::vector<Vertex>{17});
}

TEST_CASE("most neighbors wins; ties go to the earlier set") {
  SUBCASE("5 vs 7 with k = 2") {
    auto t = two_sets(5, 7);
    auto out = grow(t.g, t.fam, 2);
    CHECK(out.sets[1].back() == 17);
    CHECK(out.sets[0].size() == 10);
  }
  SUBCASE("3 vs 3") {
    auto t = two_sets(3, 3);
    auto out = grow(t.g, t.fam, 2);
    CHECK(out.sets[0].back() == 17);
    CHECK(out.sets[1].size() == 7);
  }
}

TEST_CASE("membership is frozen during a pass") {
  // 2 and 3 are unassigned. 2 sees {0, 1}; 3 sees {0, 2}.
  fixture::EdgeList edges{{0, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 2}};
  Graph g = Graph::from_edges(4, edges);
  SetFamily fam;
  fam.sets = {{0, 1}};
  fam.fill_unassigned(4);
  auto once = grow(g, fam, 2);
  CHECK(once.sets[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(once.unassigned == std::vector<Vertex>{3});
  auto fix = grow(g, fam, 2, {.until_fixpoint = true});
  CHECK(fix.sets[0] == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(fix.unassigned.empty());
}

TEST_CASE("k above the maximum degree is the identity; k = 0 is rejected") {
  auto t = two_sets(10, 7);
  auto out = grow(t.g, t.fam, t.g.max_degree() + 1);
  CHECK(out.sets == t.fam.sets);
  CHECK(out.unassigned == t.fam.unassigned);
  CHECK_THROWS_AS(grow(t.g, t.fam, 0), std::invalid_argument);
}

TEST_CASE("growing on extracted families: monotone, justified, still a partition") {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 60;
    auto edges = oracle::random_edges(n, 0.12, rng);
    for (Vertex b = 0; b < 4; ++b) fixture::add_clique(edges, b * 12, 7);
    Graph g = Graph::from_edges(n, edges);
    auto fam = run(g, {});
    for (std::uint32_t k : {1u, 2u, 3u}) {
      auto out = grow(g, fam, k);
      out.check_partition(n);
      REQUIRE(out.sets.size() == fam.sets.size());
      CHECK(out.unassigned.size() <= fam.unassigned.size());
      auto owner_before = fam.membership(n);
      for (std::size_t i = 0; i < out.sets.size(); ++i) {
        CHECK(std::includes(out.sets[i].begin(), out.sets[i].end(), fam.sets[i].begin(), fam.sets[i].end()));
        for (Vertex v : out.sets[i]) {
          if (owner_before[v] >= 0) continue;
          std::size_t inside = 0;
          for (Vertex w : g.neighbors(v)) inside += owner_before[w] == static_cast<std::int64_t>(i);
          CHECK(inside >= k);
        }
      }
    }
  }
}
