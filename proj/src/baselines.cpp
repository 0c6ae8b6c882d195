#include "rtr/baselines.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace rtr {

namespace {

// Greedy peel restricted to vertices with alive[v] != 0.
PeelResult peel_subset(const Graph& g, const std::vector<std::uint8_t>& alive) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> deg(n, 0);
  std::set<std::pair<std::uint32_t, Vertex>> queue;
  std::uint64_t edges2 = 0;  // twice the live edge count
  std::uint64_t count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Vertex w : g.neighbors(v)) deg[v] += alive[w];
    edges2 += deg[v];
    ++count;
    queue.emplace(deg[v], v);
  }
  if (edges2 == 0) throw std::runtime_error("no edges");

  std::vector<std::uint8_t> in(alive);
  std::vector<Vertex> order;
  order.reserve(count);
  std::uint64_t best_edges2 = edges2, best_count = count;
  std::size_t best_removed = 0;
  while (queue.size() > 1) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    in[v] = 0;
    order.push_back(v);
    edges2 -= 2ULL * d;
    --count;
    for (Vertex w : g.neighbors(v)) {
      if (!in[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
    // edges2 / count > best_edges2 / best_count
    if (edges2 * best_count > best_edges2 * count) {
      best_edges2 = edges2;
      best_count = count;
      best_removed = order.size();
    }
  }

  std::vector<std::uint8_t> dropped(n, 0);
  for (std::size_t i = 0; i < best_removed; ++i) dropped[order[i]] = 1;
  PeelResult result;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v] && !dropped[v]) result.vertices.push_back(v);
  }
  result.average_degree = static_cast<double>(best_edges2) / static_cast<double>(best_count);
  return result;
}

}  // namespace

PeelResult greedy_peel(const Graph& g) {
  return peel_subset(g, std::vector<std::uint8_t>(g.num_vertices(), 1));
}

SetFamily iterated_greedy(const Graph& g, std::size_t max_sets) {
  if (max_sets == 0) throw std::invalid_argument("max_sets must be >= 1");
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> alive(n, 1);
  std::uint64_t live_edges = g.num_edges();
  SetFamily family;
  while (family.sets.size() < max_sets && live_edges > 0) {
    PeelResult best = peel_subset(g, alive);
    if (best.average_degree <= 0.0) break;
    for (Vertex v : best.vertices) {
      for (Vertex w : g.neighbors(v)) {
        // Edges inside the set are seen from both ends, others once.
        if (alive[w]) live_edges -= (w > v || !std::binary_search(best.vertices.begin(), best.vertices.end(), w));
      }
    }
    for (Vertex v : best.vertices) alive[v] = 0;
    family.sets.push_back(std::move(best.vertices));
  }
  family.fill_unassigned(n);
  return family;
}

std::vector<std::uint32_t> core_decomposition(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling.
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> deg(n);
  std::uint32_t dmax = 0;
  for (Vertex v = 0; v < n; ++v) dmax = std::max(dmax, deg[v] = g.degree(v));

  std::vector<std::size_t> bin(static_cast<std::size_t>(dmax) + 1, 0);
  for (Vertex v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t k = b;
    b = start;
    start += k;
  }
  std::vector<Vertex> vert(n);
  std::vector<std::size_t> pos(n);
  for (Vertex v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = dmax; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = vert[i];
    for (Vertex u : g.neighbors(v)) {
      if (deg[u] <= deg[v]) continue;
      const std::uint32_t du = deg[u];
      const std::size_t pu = pos[u];
      const std::size_t pw = bin[du];
      const Vertex w = vert[pw];
      if (u != w) {
        std::swap(vert[pu], vert[pw]);
        pos[u] = pw;
        pos[w] = pu;
      }
      ++bin[du];
      --deg[u];
    }
  }
  return deg;
}

SetFamily core_components(const Graph& g, std::span<const std::uint32_t> core, std::uint32_t k) {
  const std::size_t n = g.num_vertices();
  if (core.size() != n) throw std::invalid_argument("core numbers do not match graph");
  std::vector<std::uint8_t> seen(n, 0);
  SetFamily family;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || core[s] < k || g.degree(s) == 0) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w] && core[w] >= k) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    family.sets.push_back(std::move(comp));
  }
  family.fill_unassigned(n);
  return family;
}

}  // namespace rtr
