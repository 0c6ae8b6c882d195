#pragma once

#include <cstdint>
#include <vector>

#include "rtr/graph.hpp"

namespace rtr {

/// Triangle multiplicity of every edge, indexed by EdgeId.
struct EdgeTriangleCounts {
  std::vector<std::uint32_t> per_edge;

  std::uint32_t operator[](EdgeId e) const noexcept { return per_edge[e]; }
  std::size_t size() const noexcept { return per_edge.size(); }

  /// Each triangle sits on three edges.
  std::uint64_t total_triangles() const noexcept;
};

/// Exact per-edge counts by intersecting degree-ordered out-neighborhoods
/// (each triangle is found once, from its lowest-ranked vertex). Rank is
/// (degree, id). With threads > 1 the vertex range is split across workers
/// and counts are accumulated atomically; the result does not depend on the
/// worker count.
EdgeTriangleCounts count_all_edge_triangles(const Graph& g, unsigned threads = 1);

}  // namespace rtr
