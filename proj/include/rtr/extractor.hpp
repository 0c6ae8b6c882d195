#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "rtr/family.hpp"
#include "rtr/graph.hpp"
#include "rtr/working_subgraph.hpp"

namespace rtr {

enum class TwoHopMode { greedy_sweep, beta_threshold };

/// Which edges count when the sweep scores candidate prefixes.
enum class SweepDensity { h_edges, g_edges };

struct ExtractionParams {
  double epsilon = 0.1;
  /// Growing threshold; 0 disables growing.
  std::uint32_t grow_k = 10;
  TwoHopMode two_hop_mode = TwoHopMode::greedy_sweep;
  double beta = 0.0;
  SweepDensity sweep_density = SweepDensity::h_edges;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Optional callbacks into run(), used by tests and diagnostics.
struct RunHooks {
  /// After every clean() fixpoint, before the next extraction.
  std::function<void(const WorkingSubgraph&)> after_clean;
  /// After T is chosen, while H still contains it.
  std::function<void(const WorkingSubgraph&, Vertex seed, std::span<const Vertex> set)> before_remove;
};

/// Scores two-hop candidates against a seed neighborhood.
///
/// Candidates are live vertices outside {v} ∪ N that close at least one
/// triangle of H with two vertices of N; t_u counts those triangles. In
/// sweep mode candidates are ranked by t_u (descending, then id) and the
/// prefix whose union with {v} ∪ N has the highest edge density wins; on an
/// exact density tie the longer prefix is kept. In beta mode every candidate
/// with t_u > beta * d_v^2 is returned.
std::vector<Vertex> two_hop_select(const WorkingSubgraph& h, Vertex v, std::span<const Vertex> neighborhood,
                                   const ExtractionParams& params);

/// Picks the seed, builds T and removes it from H. H must be clean and
/// non-empty (std::logic_error otherwise). Returns T in ascending order.
std::vector<Vertex> extract_one(WorkingSubgraph& h, const ExtractionParams& params);

/// Alternates clean() and extract_one() until H is empty. Growing is not
/// applied. Sets come back in extraction order, each sorted ascending.
SetFamily run(const Graph& g, const ExtractionParams& params, unsigned threads = 1,
              const RunHooks& hooks = {});

/// Same, starting from precomputed per-edge triangle counts of g.
SetFamily run(const Graph& g, EdgeTriangleCounts counts, const ExtractionParams& params,
              const RunHooks& hooks = {});

}  // namespace rtr
