#include "rtr/working_subgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtr {

WorkingSubgraph::WorkingSubgraph(const Graph& g, EdgeTriangleCounts counts, double epsilon)
    : g_(&g), epsilon_(epsilon), count_(std::move(counts.per_edge)) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (count_.size() != m) throw std::invalid_argument("triangle counts do not match graph");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");

  live_edge_.assign(m, 1);
  queued_.assign(m, 0);
  live_edges_ = m;

  const std::size_t slots = 2 * m;
  slot_vertex_.resize(slots);
  slot_edge_.resize(slots);
  slot_of_lo_.resize(m);
  slot_of_hi_.resize(m);
  live_degree_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    auto ids = g.incident_edges(v);
    const std::uint64_t base = g.offset(v);
    for (std::uint32_t i = 0; i < nbrs.size(); ++i) {
      slot_vertex_[base + i] = nbrs[i];
      slot_edge_[base + i] = ids[i];
      if (v == g.edge_lo(ids[i])) slot_of_lo_[ids[i]] = i;
      else slot_of_hi_[ids[i]] = i;
    }
    live_degree_[v] = g.degree(v);
    if (live_degree_[v] != 0) ++live_vertices_;
  }

  // Counting sort by original degree; ids stay ascending within a bucket.
  const std::uint32_t dmax = g.max_degree();
  std::vector<std::size_t> bucket(static_cast<std::size_t>(dmax) + 2, 0);
  for (Vertex v = 0; v < n; ++v) ++bucket[g.degree(v) + 1];
  for (std::size_t d = 1; d < bucket.size(); ++d) bucket[d] += bucket[d - 1];
  seed_order_.resize(n);
  for (Vertex v = 0; v < n; ++v) seed_order_[bucket[g.degree(v)]++] = v;

  for (EdgeId e = 0; e < m; ++e) {
    if (violates(e)) {
      queued_[e] = 1;
      bad_queue_.push_back(e);
    }
  }
}

bool WorkingSubgraph::violates(EdgeId e) const noexcept {
  const double bound = epsilon_ * static_cast<double>(g_->degree(g_->edge_lo(e)) + g_->degree(g_->edge_hi(e)));
  return static_cast<double>(count_[e]) < bound;
}

std::vector<Vertex> WorkingSubgraph::triangles_of_edge(EdgeId e) const {
  if (e >= live_edge_.size() || !live_edge_[e]) throw std::logic_error("edge is not live in H");
  std::vector<Vertex> out;
  out.reserve(count_[e]);
  for_each_triangle(e, [&](Vertex w, EdgeId, EdgeId) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

void WorkingSubgraph::decrement(EdgeId e) {
  --count_[e];
  if (!queued_[e] && violates(e)) {
    queued_[e] = 1;
    bad_queue_.push_back(e);
  }
}

void WorkingSubgraph::unlink(Vertex x, EdgeId e) {
  const std::uint64_t base = g_->offset(x);
  const bool x_is_lo = g_->edge_lo(e) == x;
  const std::uint32_t pos = x_is_lo ? slot_of_lo_[e] : slot_of_hi_[e];
  const std::uint32_t last = --live_degree_[x];
  if (pos != last) {
    const EdgeId moved = slot_edge_[base + last];
    slot_vertex_[base + pos] = slot_vertex_[base + last];
    slot_edge_[base + pos] = moved;
    if (g_->edge_lo(moved) == x) slot_of_lo_[moved] = pos;
    else slot_of_hi_[moved] = pos;
  }
  if (last == 0) --live_vertices_;
}

void WorkingSubgraph::delete_edge(EdgeId e) {
  if (!live_edge_[e]) throw std::logic_error("edge is not live in H");
  for_each_triangle(e, [&](Vertex, EdgeId uw, EdgeId vw) {
    decrement(uw);
    decrement(vw);
  });
  count_[e] = 0;
  live_edge_[e] = 0;
  --live_edges_;
  unlink(g_->edge_lo(e), e);
  unlink(g_->edge_hi(e), e);
}

std::size_t WorkingSubgraph::clean() {
  std::size_t deleted = 0;
  while (!bad_queue_.empty()) {
    const EdgeId e = bad_queue_.back();
    bad_queue_.pop_back();
    queued_[e] = 0;
    if (!live_edge_[e]) continue;
    delete_edge(e);
    ++deleted;
  }
  return deleted;
}

void WorkingSubgraph::remove_vertices(std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    while (live_degree_[v] != 0) delete_edge(slot_edge_[g_->offset(v) + live_degree_[v] - 1]);
  }
}

std::optional<Vertex> WorkingSubgraph::min_degree_vertex() {
  while (seed_cursor_ < seed_order_.size() && !live_degree_[seed_order_[seed_cursor_]]) ++seed_cursor_;
  if (seed_cursor_ == seed_order_.size()) return std::nullopt;
  return seed_order_[seed_cursor_];
}

CleanAudit audit_clean(const WorkingSubgraph& h) {
  const Graph& g = h.graph();
  CleanAudit audit;
  std::vector<std::vector<Vertex>> sorted(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto live = h.live_neighbors(v);
    sorted[v].assign(live.begin(), live.end());
    std::sort(sorted[v].begin(), sorted[v].end());
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!h.is_live(e)) continue;
    ++audit.live_edges;
    const auto& a = sorted[g.edge_lo(e)];
    const auto& b = sorted[g.edge_hi(e)];
    std::size_t common = 0;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] < b[j]) ++i;
      else if (b[j] < a[i]) ++j;
      else ++common, ++i, ++j;
    }
    const double bound = h.epsilon() * static_cast<double>(g.degree(g.edge_lo(e)) + g.degree(g.edge_hi(e)));
    if (static_cast<double>(common) < bound) ++audit.violations;
    if (common != h.triangle_count(e)) ++audit.mismatches;
  }
  return audit;
}

}  // namespace rtr
