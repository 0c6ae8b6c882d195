#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rtr/graph.hpp"
#include "rtr/triangles.hpp"

namespace rtr {

/// The shrinking subgraph H that extraction works on.
///
/// H starts as a copy of the input graph's edge set and only ever loses
/// edges. For every live edge it keeps the exact number of triangles in H;
/// triangle lists themselves are not stored but recomputed by intersecting
/// live neighborhoods. An edge (u,v) is "bad" when its count drops below
/// epsilon * (d_u + d_v) with d the degree in the ORIGINAL graph; bad edges
/// wait in a queue until clean() deletes them.
///
/// A vertex is live while it has at least one live edge. Seeds are served in
/// (original degree, id) order, which never changes, so the min-queue is a
/// presorted array with a cursor that skips dead vertices.
///
/// Single writer. Const members are safe to call concurrently.
class WorkingSubgraph {
 public:
  WorkingSubgraph(const Graph& g, EdgeTriangleCounts counts, double epsilon);
  WorkingSubgraph(const Graph& g, double epsilon, unsigned threads = 1)
      : WorkingSubgraph(g, count_all_edge_triangles(g, threads), epsilon) {}

  const Graph& graph() const noexcept { return *g_; }
  double epsilon() const noexcept { return epsilon_; }

  bool is_live(EdgeId e) const noexcept { return live_edge_[e] != 0; }
  bool is_live_vertex(Vertex v) const noexcept { return live_degree_[v] != 0; }
  std::uint32_t live_degree(Vertex v) const noexcept { return live_degree_[v]; }
  std::size_t live_vertex_count() const noexcept { return live_vertices_; }
  std::size_t live_edge_count() const noexcept { return live_edges_; }
  bool empty() const noexcept { return live_vertices_ == 0; }

  /// Live neighbors of v in no particular order.
  std::span<const Vertex> live_neighbors(Vertex v) const noexcept {
    return {slot_vertex_.data() + g_->offset(v), live_degree_[v]};
  }
  std::span<const EdgeId> live_edges(Vertex v) const noexcept {
    return {slot_edge_.data() + g_->offset(v), live_degree_[v]};
  }

  std::uint32_t triangle_count(EdgeId e) const noexcept { return count_[e]; }
  bool violates(EdgeId e) const noexcept;

  /// Third vertices of the triangles on a live edge, ascending. Throws
  /// std::logic_error if e is not live.
  std::vector<Vertex> triangles_of_edge(EdgeId e) const;

  /// Calls f(w, e_uw, e_vw) for every triangle (u, v, w) of live edge e,
  /// where (u, v) = graph().endpoints(e).
  template <class F>
  void for_each_triangle(EdgeId e, F&& f) const;

  /// Removes a live edge and updates the counts of the edges it shared
  /// triangles with, queueing any that become bad.
  void delete_edge(EdgeId e);

  /// Deletes bad edges until none remain; returns how many were deleted.
  std::size_t clean();

  /// Deletes every live edge incident to the given vertices.
  void remove_vertices(std::span<const Vertex> vs);

  /// Live vertex of least original degree, lowest id on ties.
  std::optional<Vertex> min_degree_vertex();

  std::size_t pending_bad_edges() const noexcept { return bad_queue_.size(); }

 private:
  void unlink(Vertex x, EdgeId e);
  void decrement(EdgeId e);

  const Graph* g_;
  double epsilon_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint8_t> live_edge_;
  std::vector<std::uint8_t> queued_;
  std::vector<EdgeId> bad_queue_;

  // Live adjacency: vertex v owns the graph's CSR range for v; the first
  // live_degree_[v] slots of it hold its live neighbors.
  std::vector<Vertex> slot_vertex_;
  std::vector<EdgeId> slot_edge_;
  std::vector<std::uint32_t> slot_of_lo_;  // edge -> slot index within lo's range
  std::vector<std::uint32_t> slot_of_hi_;
  std::vector<std::uint32_t> live_degree_;
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;

  std::vector<Vertex> seed_order_;
  std::size_t seed_cursor_ = 0;
};

struct CleanAudit {
  std::size_t live_edges = 0;
  std::size_t violations = 0;  // live edges below epsilon * (d_u + d_v)
  std::size_t mismatches = 0;  // maintained count differs from the recount
};

/// Full rescan of H: recounts every live edge's triangles by intersecting
/// sorted live neighborhoods, without reading the maintained counts.
CleanAudit audit_clean(const WorkingSubgraph& h);

template <class F>
void WorkingSubgraph::for_each_triangle(EdgeId e, F&& f) const {
  auto [u, v] = g_->endpoints(e);
  // Walk the smaller live list, probe the other endpoint in the base graph.
  const bool swap = live_degree_[u] > live_degree_[v];
  const Vertex a = swap ? v : u;
  const Vertex b = swap ? u : v;
  auto nbrs = live_neighbors(a);
  auto ids = live_edges(a);
  [[maybe_unused]] std::uint32_t found = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const Vertex w = nbrs[i];
    if (w == b) continue;
    auto bw = g_->find_edge(b, w);
    if (!bw || !live_edge_[*bw]) continue;
    ++found;
    if (swap) f(w, *bw, ids[i]);
    else f(w, ids[i], *bw);
  }
#ifndef NDEBUG
  if (found != count_[e]) throw std::logic_error("triangle count out of sync with H");
#endif
}

}  // namespace rtr
