#pragma once

#include <cstdint>
#include <vector>

#include "rtr/graph.hpp"

namespace rtr {

/// Ordered collection of vertex sets plus the vertices in none of them.
///
/// Families produced by the extractor and the baselines are disjoint and
/// total (sets together with `unassigned` partition V). Families read from
/// external set files may overlap; metrics count distinct vertices.
struct SetFamily {
  std::vector<std::vector<Vertex>> sets;
  std::vector<Vertex> unassigned;

  std::size_t size() const noexcept { return sets.size(); }

  /// Set index per vertex, -1 for unassigned. Requires disjoint sets.
  std::vector<std::int64_t> membership(std::size_t n) const;

  /// Throws std::logic_error unless sets are nonempty, pairwise disjoint,
  /// and together with `unassigned` cover exactly 0..n-1.
  void check_partition(std::size_t n) const;

  /// Recomputes `unassigned` as the vertices in no set, ascending.
  void fill_unassigned(std::size_t n);
};

}  // namespace rtr
