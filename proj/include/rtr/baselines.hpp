#pragma once

#include <cstdint>
#include <vector>

#include "rtr/family.hpp"
#include "rtr/graph.hpp"

namespace rtr {

struct PeelResult {
  std::vector<Vertex> vertices;  // ascending
  double average_degree = 0.0;   // 2 E(S) / |S|
};

/// Charikar's greedy peeling: repeatedly drop a vertex of least current
/// degree (lowest id on ties) and keep the intermediate vertex set with the
/// highest 2E/V, preferring the earliest (largest) one on ties.
/// Throws std::runtime_error("no edges") on an edgeless graph.
PeelResult greedy_peel(const Graph& g);

/// Runs greedy_peel on what is left after removing earlier answers, until
/// the remainder has no edges or max_sets sets were produced.
SetFamily iterated_greedy(const Graph& g, std::size_t max_sets);

/// Core number of every vertex by bucket peeling, O(n + m).
std::vector<std::uint32_t> core_decomposition(const Graph& g);

/// Connected components of the subgraph induced by vertices with core
/// number >= k, ordered by their smallest vertex. Other vertices are
/// unassigned.
SetFamily core_components(const Graph& g, std::span<const std::uint32_t> core, std::uint32_t k);

}  // namespace rtr
