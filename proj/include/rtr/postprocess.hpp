#pragma once

#include <cstdint>

#include "rtr/family.hpp"
#include "rtr/graph.hpp"

namespace rtr {

struct GrowOptions {
  /// Repeat the pass until nothing moves instead of a single pass.
  bool until_fixpoint = false;
};

/// Growing pass: each unassigned vertex with at least k neighbors in some
/// set joins the set holding most of its neighbors (earliest set on ties).
/// Membership is frozen at the start of a pass, so the outcome does not
/// depend on the order vertices are visited. Sets stay sorted ascending.
/// Throws std::invalid_argument for k == 0.
SetFamily grow(const Graph& g, const SetFamily& family, std::uint32_t k, GrowOptions options = {});

}  // namespace rtr
