#pragma once

#include <cstdint>

#include "rtr/extractor.hpp"
#include "rtr/family.hpp"
#include "rtr/graph.hpp"
#include "rtr/postprocess.hpp"

namespace rtr {

struct PipelineResult {
  SetFamily extracted;  // straight out of run()
  SetFamily grown;      // after growing; equals `extracted` when grow_k == 0
  std::uint64_t triangles = 0;  // in g
};

/// run() followed by grow() with params.grow_k.
PipelineResult extract_and_grow(const Graph& g, const ExtractionParams& params, unsigned threads = 1,
                                GrowOptions grow_options = {});

}  // namespace rtr
