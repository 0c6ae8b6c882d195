#include "rtr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace rtr {

namespace {

std::vector<Vertex> sorted_members(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  if (!members.empty() && members.back() >= g.num_vertices())
    throw std::domain_error("vertex " + std::to_string(members.back()) + " outside graph");
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::domain_error("vertex set contains duplicates");
  return members;
}

double choose2(std::size_t k) { return static_cast<double>(k) * static_cast<double>(k - 1) / 2.0; }
double choose3(std::size_t k) { return choose2(k) * static_cast<double>(k - 2) / 3.0; }

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double degree_balance(const Graph& g, std::span<const Vertex> s) {
  const double size = static_cast<double>(s.size());
  double worst = 1.0;
  for (Vertex v : s) {
    const double d = g.degree(v);
    worst = std::min(worst, d == 0.0 ? 0.0 : std::min(d / size, size / d));
  }
  return worst;
}

}  // namespace

InducedCounts induced_counts(const Graph& g, std::span<const Vertex> s) {
  const std::vector<Vertex> members = sorted_members(g, s);
  const std::size_t k = members.size();

  // Local adjacency over positions in `members`; ascending because both the
  // neighbor lists and `members` are.
  std::vector<std::vector<std::uint32_t>> local(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex w : g.neighbors(members[i])) {
      auto it = std::lower_bound(members.begin(), members.end(), w);
      if (it != members.end() && *it == w) local[i].push_back(static_cast<std::uint32_t>(it - members.begin()));
    }
  }

  InducedCounts out;
  out.vertices = k;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& ai = local[i];
    auto hi = std::upper_bound(ai.begin(), ai.end(), static_cast<std::uint32_t>(i));
    for (auto jt = hi; jt != ai.end(); ++jt) {
      ++out.edges;
      const auto& aj = local[*jt];
      // Count common neighbors above j.
      auto a = std::upper_bound(ai.begin(), ai.end(), *jt);
      auto b = std::upper_bound(aj.begin(), aj.end(), *jt);
      while (a != ai.end() && b != aj.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else ++out.triangles, ++a, ++b;
      }
    }
  }
  return out;
}

double edge_density(const Graph& g, std::span<const Vertex> s) {
  if (s.size() < 2) throw std::domain_error("edge density needs at least 2 vertices");
  return static_cast<double>(induced_counts(g, s).edges) / choose2(s.size());
}

double triangle_density(const Graph& g, std::span<const Vertex> s) {
  if (s.size() < 3) throw std::domain_error("triangle density needs at least 3 vertices");
  return static_cast<double>(induced_counts(g, s).triangles) / choose3(s.size());
}

double rtr_alpha(const Graph& g, std::span<const Vertex> s) {
  const double tri = triangle_density(g, s);
  return clamp01(std::min(tri, degree_balance(g, s)));
}

double coverage(const Graph& g, const SetFamily& family, double gamma, std::size_t min_size) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0.0;
  std::vector<std::uint8_t> covered(n, 0);
  std::size_t total = 0;
  for (const auto& s : family.sets) {
    if (s.size() < min_size) continue;
    const double density = s.size() < 2 ? 0.0 : edge_density(g, s);
    if (density < gamma) continue;
    for (Vertex v : s) {
      if (!covered[v]) {
        covered[v] = 1;
        ++total;
      }
    }
  }
  return 100.0 * static_cast<double>(total) / static_cast<double>(n);
}

FamilyReport family_report(const Graph& g, const SetFamily& family, const ReportOptions& options) {
  FamilyReport report;
  report.n = g.num_vertices();
  report.m = g.num_edges();
  report.num_sets = family.sets.size();
  report.unassigned = family.unassigned.size();
  report.mean_density_min_size = options.mean_density_min_size;

  std::vector<SetRecord> in_order;
  in_order.reserve(family.sets.size());
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    const auto& s = family.sets[i];
    const InducedCounts c = induced_counts(g, s);
    SetRecord r;
    r.index = i;
    r.size = s.size();
    r.edges = c.edges;
    if (r.size >= 2) r.edge_density = static_cast<double>(c.edges) / choose2(r.size);
    if (r.size >= 3) {
      r.triangle_density = static_cast<double>(c.triangles) / choose3(r.size);
      r.alpha = clamp01(std::min(*r.triangle_density, degree_balance(g, s)));
    }
    in_order.push_back(r);
  }

  std::vector<std::uint8_t> covered(report.n, 0);
  for (double gamma : options.gammas) {
    std::fill(covered.begin(), covered.end(), 0);
    std::size_t total = 0;
    for (const auto& r : in_order) {
      if (r.size < options.min_size || r.edge_density.value_or(0.0) < gamma) continue;
      for (Vertex v : family.sets[r.index]) {
        if (!covered[v]) covered[v] = 1, ++total;
      }
    }
    const double pct = report.n == 0 ? 0.0 : 100.0 * static_cast<double>(total) / static_cast<double>(report.n);
    report.coverage.push_back({gamma, options.min_size, pct});
  }

  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& r : in_order) {
    if (r.size >= options.mean_density_min_size && r.edge_density) {
      sum += *r.edge_density;
      ++count;
    }
  }
  if (count > 0) report.mean_edge_density = sum / static_cast<double>(count);

  report.records = in_order;
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const SetRecord& a, const SetRecord& b) { return a.size > b.size; });
  const std::size_t keep = std::min(options.largest_count, report.records.size());
  report.largest.assign(report.records.begin(), report.records.begin() + static_cast<std::ptrdiff_t>(keep));
  return report;
}

double round_percent(double percent) { return std::round(percent * 100.0) / 100.0; }

namespace {

nlohmann::ordered_json optional_json(const std::optional<double>& x) {
  return x ? nlohmann::ordered_json(*x) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json record_json(const SetRecord& r) {
  return {{"set", r.index},
          {"size", r.size},
          {"edges", r.edges},
          {"edge_density", optional_json(r.edge_density)},
          {"triangle_density", optional_json(r.triangle_density)},
          {"alpha", optional_json(r.alpha)}};
}

}  // namespace

void write_report_json(const FamilyReport& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["num_sets"] = report.num_sets;
  j["unassigned"] = report.unassigned;
  auto cov = nlohmann::ordered_json::array();
  for (const auto& c : report.coverage)
    cov.push_back({{"gamma", c.gamma}, {"min_size", c.min_size}, {"percent", round_percent(c.percent)}});
  j["coverage"] = cov;
  j["mean_density_min_size"] = report.mean_density_min_size;
  j["mean_edge_density"] = optional_json(report.mean_edge_density);
  auto largest = nlohmann::ordered_json::array();
  for (const auto& r : report.largest) largest.push_back(record_json(r));
  j["largest"] = largest;
  auto sets = nlohmann::ordered_json::array();
  for (const auto& r : report.records) sets.push_back(record_json(r));
  j["sets"] = sets;
  out << j.dump(2) << '\n';
}

void write_report_csv(const FamilyReport& report, std::ostream& out) {
  std::vector<const SetRecord*> rows;
  rows.reserve(report.records.size());
  for (const auto& r : report.records) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [](const SetRecord* a, const SetRecord* b) { return a->index < b->index; });

  auto cell = [&](const std::optional<double>& x) {
    if (!x) return std::string{};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *x);
    return std::string{buf};
  };
  out << "set,size,edges,edge_density,triangle_density,alpha\n";
  for (const SetRecord* r : rows) {
    out << r->index << ',' << r->size << ',' << r->edges << ',' << cell(r->edge_density) << ','
        << cell(r->triangle_density) << ',' << cell(r->alpha) << '\n';
  }
}

}  // namespace rtr
