#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rtr {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Label = std::uint64_t;

/// Thrown by the edge-list and set-file readers; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable simple undirected graph in CSR form.
///
/// Vertices are 0..n-1. Every neighbor list is strictly increasing, and each
/// undirected edge has one id in 0..m-1 with endpoints stored as (lo, hi),
/// lo < hi. The original external labels are kept so results can be written
/// back in the input's vocabulary.
class Graph {
 public:
  Graph() = default;

  /// Builds from internal-id pairs; labels become the ids themselves.
  /// Self-loops are dropped and duplicates merged. Ids must be < n.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Builds from labelled pairs. Labels are remapped to 0..n-1 in order of
  /// first appearance among non-loop edges; loop-only labels are dropped.
  static Graph from_labelled_edges(std::span<const std::pair<Label, Label>> edges);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edge_lo_.size(); }

  std::uint32_t degree(Vertex v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  /// Start of v's range in the flat adjacency arrays.
  std::uint64_t offset(Vertex v) const noexcept { return offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const noexcept {
    return {edge_ids_.data() + offsets_[v], degree(v)};
  }

  Vertex edge_lo(EdgeId e) const noexcept { return edge_lo_[e]; }
  Vertex edge_hi(EdgeId e) const noexcept { return edge_hi_[e]; }
  std::pair<Vertex, Vertex> endpoints(EdgeId e) const noexcept { return {edge_lo_[e], edge_hi_[e]}; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept { return find_edge(u, v).has_value(); }

  Label label(Vertex v) const noexcept { return labels_[v]; }
  std::span<const Label> labels() const noexcept { return labels_; }
  std::optional<Vertex> vertex_of(Label label) const;

  std::uint32_t max_degree() const noexcept;

 private:
  static Graph build(std::vector<Label> labels, std::vector<std::pair<Vertex, Vertex>> pairs);

  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<EdgeId> edge_ids_;
  std::vector<Vertex> edge_lo_;
  std::vector<Vertex> edge_hi_;
  std::vector<Label> labels_;
  std::unordered_map<Label, Vertex> label_index_;
};

/// Reads SNAP-style text: one "u v" pair per line, '#' comment lines.
/// Throws ParseError for malformed tokens and std::runtime_error("no edges")
/// when nothing survives self-loop removal.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Writes each edge once as "lo hi" over original labels, smaller label
/// first, sorted lexicographically.
void write_edge_list(const Graph& g, std::ostream& out);

/// Edges with both endpoints in s. Throws std::domain_error for ids >= n or
/// repeated vertices.
std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> s);

}  // namespace rtr
