#include "rtr/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rtr {

void ExtractionParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be >= 0");
}

namespace {

// Stamp-marked per-vertex scratch so each extraction costs only its local work.
struct Scratch {
  std::vector<std::uint32_t> core_stamp;
  std::vector<std::uint32_t> set_stamp;
  std::vector<std::uint32_t> tally_stamp;
  std::vector<std::uint32_t> tally;
  std::uint32_t stamp = 0;

  void prepare(std::size_t n) {
    if (core_stamp.size() != n) {
      core_stamp.assign(n, 0);
      set_stamp.assign(n, 0);
      tally_stamp.assign(n, 0);
      tally.assign(n, 0);
      stamp = 0;
    }
    if (++stamp == 0) {
      std::fill(core_stamp.begin(), core_stamp.end(), 0);
      std::fill(set_stamp.begin(), set_stamp.end(), 0);
      std::fill(tally_stamp.begin(), tally_stamp.end(), 0);
      stamp = 1;
    }
  }
};

Scratch& scratch_for(std::size_t n) {
  thread_local Scratch s;
  s.prepare(n);
  return s;
}

std::uint64_t pairs_of(std::uint64_t k) { return k * (k - 1) / 2; }

// a_edges / a_pairs >= b_edges / b_pairs, exactly.
bool density_at_least(std::uint64_t a_edges, std::uint64_t a_pairs, std::uint64_t b_edges, std::uint64_t b_pairs) {
  using wide = unsigned __int128;
  return static_cast<wide>(a_edges) * b_pairs >= static_cast<wide>(b_edges) * a_pairs;
}

}  // namespace

std::vector<Vertex> two_hop_select(const WorkingSubgraph& h, Vertex v, std::span<const Vertex> neighborhood,
                                   const ExtractionParams& params) {
  const Graph& g = h.graph();
  Scratch& sc = scratch_for(g.num_vertices());
  const std::uint32_t stamp = sc.stamp;

  sc.core_stamp[v] = stamp;
  for (Vertex a : neighborhood) sc.core_stamp[a] = stamp;

  std::vector<Vertex> candidates;
  std::uint64_t edges_inside_n = 0;
  for (Vertex a : neighborhood) {
    auto nbrs = h.live_neighbors(a);
    auto ids = h.live_edges(a);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex b = nbrs[i];
      if (b <= a || b == v || sc.core_stamp[b] != stamp) continue;
      ++edges_inside_n;
      h.for_each_triangle(ids[i], [&](Vertex w, EdgeId, EdgeId) {
        if (sc.core_stamp[w] == stamp) return;
        if (sc.tally_stamp[w] != stamp) {
          sc.tally_stamp[w] = stamp;
          sc.tally[w] = 0;
          candidates.push_back(w);
        }
        ++sc.tally[w];
      });
    }
  }

  std::vector<Vertex> chosen;
  if (params.two_hop_mode == TwoHopMode::beta_threshold) {
    const double dv = g.degree(v);
    const double bound = params.beta * dv * dv;
    for (Vertex u : candidates) {
      if (static_cast<double>(sc.tally[u]) > bound) chosen.push_back(u);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  std::sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
    return sc.tally[a] != sc.tally[b] ? sc.tally[a] > sc.tally[b] : a < b;
  });

  const bool use_g = params.sweep_density == SweepDensity::g_edges;
  std::uint64_t size = 1 + neighborhood.size();
  std::uint64_t edges = 0;
  sc.set_stamp[v] = stamp;
  for (Vertex a : neighborhood) sc.set_stamp[a] = stamp;
  if (use_g) {
    for (Vertex a : neighborhood) {
      for (Vertex b : g.neighbors(a)) edges += (b > a || b == v) && sc.set_stamp[b] == stamp;
    }
  } else {
    edges = neighborhood.size() + edges_inside_n;
  }

  std::uint64_t best_edges = edges;
  std::uint64_t best_pairs = pairs_of(size);
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Vertex u = candidates[i];
    std::uint64_t added = 0;
    if (use_g) {
      for (Vertex x : g.neighbors(u)) added += sc.set_stamp[x] == stamp;
    } else {
      for (Vertex x : h.live_neighbors(u)) added += sc.set_stamp[x] == stamp;
    }
    sc.set_stamp[u] = stamp;
    edges += added;
    ++size;
    if (density_at_least(edges, pairs_of(size), best_edges, best_pairs)) {
      best_edges = edges;
      best_pairs = pairs_of(size);
      best_len = i + 1;
    }
  }
  chosen.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(best_len));
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

std::vector<Vertex> extract_with_hooks(WorkingSubgraph& h, const ExtractionParams& params, const RunHooks& hooks) {
  if (h.pending_bad_edges() != 0) throw std::logic_error("extract_one requires a clean H");
  auto seed = h.min_degree_vertex();
  if (!seed) throw std::logic_error("extract_one called on empty H");
  const Vertex v = *seed;

  auto live = h.live_neighbors(v);
  std::vector<Vertex> neighborhood(live.begin(), live.end());
  std::sort(neighborhood.begin(), neighborhood.end());
  std::vector<Vertex> extra = two_hop_select(h, v, neighborhood, params);

  std::vector<Vertex> set;
  set.reserve(1 + neighborhood.size() + extra.size());
  set.push_back(v);
  set.insert(set.end(), neighborhood.begin(), neighborhood.end());
  set.insert(set.end(), extra.begin(), extra.end());
  std::sort(set.begin(), set.end());

  if (hooks.before_remove) hooks.before_remove(h, v, set);
  h.remove_vertices(set);
  return set;
}

}  // namespace

std::vector<Vertex> extract_one(WorkingSubgraph& h, const ExtractionParams& params) {
  return extract_with_hooks(h, params, {});
}

SetFamily run(const Graph& g, const ExtractionParams& params, unsigned threads, const RunHooks& hooks) {
  params.validate();
  return run(g, count_all_edge_triangles(g, threads), params, hooks);
}

SetFamily run(const Graph& g, EdgeTriangleCounts counts, const ExtractionParams& params, const RunHooks& hooks) {
  params.validate();
  WorkingSubgraph h(g, std::move(counts), params.epsilon);
  SetFamily family;
  for (;;) {
    h.clean();
#ifndef NDEBUG
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (h.is_live(e) && h.violates(e)) throw std::logic_error("clean left a bad edge behind");
    }
#endif
    if (hooks.after_clean) hooks.after_clean(h);
    if (h.empty()) break;
    family.sets.push_back(extract_with_hooks(h, params, hooks));
  }
  family.fill_unassigned(g.num_vertices());
  family.check_partition(g.num_vertices());
  return family;
}

}  // namespace rtr
