#include "rtr/triangles.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace rtr {

std::uint64_t EdgeTriangleCounts::total_triangles() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : per_edge) sum += c;
  return sum / 3;
}

namespace {

struct OrientedGraph {
  std::vector<std::uint64_t> offsets;
  std::vector<Vertex> heads;
  std::vector<EdgeId> edges;
};

// Keeps only arcs pointing to a higher (degree, id) rank; lists stay sorted by id.
OrientedGraph orient_by_degree(const Graph& g) {
  const std::size_t n = g.num_vertices();
  auto before = [&](Vertex a, Vertex b) {
    auto da = g.degree(a), db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  OrientedGraph out;
  out.offsets.assign(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    std::uint64_t k = 0;
    for (Vertex v : g.neighbors(u)) k += before(u, v);
    out.offsets[u + 1] = out.offsets[u] + k;
  }
  out.heads.resize(out.offsets[n]);
  out.edges.resize(out.offsets[n]);
  for (Vertex u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    auto ids = g.incident_edges(u);
    std::uint64_t w = out.offsets[u];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!before(u, nbrs[i])) continue;
      out.heads[w] = nbrs[i];
      out.edges[w] = ids[i];
      ++w;
    }
  }
  return out;
}

template <class Bump>
void count_from(const OrientedGraph& og, Vertex u, Bump&& bump) {
  const std::uint64_t ub = og.offsets[u], ue = og.offsets[u + 1];
  for (std::uint64_t i = ub; i < ue; ++i) {
    const Vertex v = og.heads[i];
    const EdgeId uv = og.edges[i];
    std::uint64_t a = ub, b = og.offsets[v];
    const std::uint64_t be = og.offsets[v + 1];
    while (a < ue && b < be) {
      if (og.heads[a] < og.heads[b]) {
        ++a;
      } else if (og.heads[b] < og.heads[a]) {
        ++b;
      } else {
        bump(uv);
        bump(og.edges[a]);
        bump(og.edges[b]);
        ++a;
        ++b;
      }
    }
  }
}

}  // namespace

EdgeTriangleCounts count_all_edge_triangles(const Graph& g, unsigned threads) {
  EdgeTriangleCounts counts;
  counts.per_edge.assign(g.num_edges(), 0);
  const OrientedGraph og = orient_by_degree(g);
  const Vertex n = static_cast<Vertex>(g.num_vertices());

  if (threads <= 1 || n < 1024) {
    auto bump = [&](EdgeId e) { ++counts.per_edge[e]; };
    for (Vertex u = 0; u < n; ++u) count_from(og, u, bump);
    return counts;
  }

  constexpr Vertex kChunk = 256;
  std::atomic<Vertex> next{0};
  auto worker = [&] {
    auto bump = [&](EdgeId e) {
      std::atomic_ref<std::uint32_t>(counts.per_edge[e]).fetch_add(1, std::memory_order_relaxed);
    };
    for (;;) {
      Vertex begin = next.fetch_add(kChunk, std::memory_order_relaxed);
      if (begin >= n) break;
      Vertex end = std::min<Vertex>(n, begin + kChunk);
      for (Vertex u = begin; u < end; ++u) count_from(og, u, bump);
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return counts;
}

}  // namespace rtr
