#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "rtr/family.hpp"
#include "rtr/graph.hpp"

namespace rtr {

/// Edge and triangle counts of the subgraph of g induced by a vertex set.
struct InducedCounts {
  std::size_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t triangles = 0;
};

/// Throws std::domain_error for out-of-range or repeated vertices.
InducedCounts induced_counts(const Graph& g, std::span<const Vertex> s);

/// E(S) / C(|S|, 2). Requires |S| >= 2.
double edge_density(const Graph& g, std::span<const Vertex> s);

/// Triangles inside S / C(|S|, 3). Requires |S| >= 3.
double triangle_density(const Graph& g, std::span<const Vertex> s);

/// Largest alpha for which S is alpha-regularly triangle-rich:
/// min(triangle density, min over v in S of min(d_v/|S|, |S|/d_v)), with d
/// the degree in g. Requires |S| >= 3.
double rtr_alpha(const Graph& g, std::span<const Vertex> s);

/// Percentage of V lying in sets with |T| >= min_size and edge density
/// >= gamma. Sets smaller than two vertices have density 0. Vertices are
/// counted once even if external sets overlap.
double coverage(const Graph& g, const SetFamily& family, double gamma, std::size_t min_size);

struct SetRecord {
  std::size_t index = 0;  // position in the family (extraction order)
  std::size_t size = 0;
  std::uint64_t edges = 0;
  std::optional<double> edge_density;      // |T| >= 2
  std::optional<double> triangle_density;  // |T| >= 3
  std::optional<double> alpha;             // |T| >= 3
};

struct CoveragePoint {
  double gamma = 0.0;
  std::size_t min_size = 0;
  double percent = 0.0;
};

struct FamilyReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t num_sets = 0;
  std::size_t unassigned = 0;
  /// Sorted by size descending, family order on ties.
  std::vector<SetRecord> records;
  std::vector<CoveragePoint> coverage;
  std::size_t mean_density_min_size = 10;
  /// Absent when no set reaches mean_density_min_size.
  std::optional<double> mean_edge_density;
  /// Leading entries of `records`, at most 20.
  std::vector<SetRecord> largest;
};

struct ReportOptions {
  std::vector<double> gammas{0.5, 0.8};
  std::size_t min_size = 5;
  std::size_t mean_density_min_size = 10;
  std::size_t largest_count = 20;
};

FamilyReport family_report(const Graph& g, const SetFamily& family, const ReportOptions& options = {});

/// Percentages rounded to two decimals, densities at full precision.
void write_report_json(const FamilyReport& report, std::ostream& out);
/// Header "set,size,edges,edge_density,triangle_density,alpha"; one row per
/// set in family order; undefined densities are left empty.
void write_report_csv(const FamilyReport& report, std::ostream& out);

double round_percent(double percent);

}  // namespace rtr
