#include "rtr/pipeline.hpp"

#include <utility>

#include "rtr/triangles.hpp"

namespace rtr {

PipelineResult extract_and_grow(const Graph& g, const ExtractionParams& params, unsigned threads,
                                GrowOptions grow_options) {
  PipelineResult result;
  params.validate();
  auto counts = count_all_edge_triangles(g, threads);
  result.triangles = counts.total_triangles();
  result.extracted = run(g, std::move(counts), params);
  result.grown = params.grow_k == 0 ? result.extracted : grow(g, result.extracted, params.grow_k, grow_options);
  return result;
}

}  // namespace rtr
