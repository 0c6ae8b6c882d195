#include "rtr/postprocess.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rtr {

namespace {

// One frozen-membership pass; returns the number of vertices moved.
std::size_t grow_pass(const Graph& g, SetFamily& family, std::uint32_t k) {
  const auto owner = family.membership(g.num_vertices());
  std::vector<std::pair<Vertex, std::int64_t>> moves;
  std::vector<std::int64_t> hits;
  for (Vertex v : family.unassigned) {
    if (g.degree(v) < k) continue;
    hits.clear();
    for (Vertex w : g.neighbors(v)) {
      if (owner[w] >= 0) hits.push_back(owner[w]);
    }
    if (hits.size() < k) continue;
    std::sort(hits.begin(), hits.end());
    std::int64_t best_set = -1;
    std::size_t best_count = 0;
    for (std::size_t i = 0; i < hits.size();) {
      std::size_t j = i;
      while (j < hits.size() && hits[j] == hits[i]) ++j;
      if (j - i > best_count) {
        best_count = j - i;
        best_set = hits[i];
      }
      i = j;
    }
    if (best_count >= k) moves.emplace_back(v, best_set);
  }

  for (auto [v, s] : moves) family.sets[static_cast<std::size_t>(s)].push_back(v);
  for (auto& s : family.sets) std::sort(s.begin(), s.end());
  if (!moves.empty()) family.fill_unassigned(g.num_vertices());
  return moves.size();
}

}  // namespace

SetFamily grow(const Graph& g, const SetFamily& family, std::uint32_t k, GrowOptions options) {
  if (k == 0) throw std::invalid_argument("grow threshold k must be >= 1");
  SetFamily out = family;
  while (grow_pass(g, out, k) != 0 && options.until_fixpoint) {
  }
  return out;
}

}  // namespace rtr
