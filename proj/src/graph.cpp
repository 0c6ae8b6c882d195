#include "rtr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>

namespace rtr {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint exceeds vertex count");
    if (u != v) pairs.emplace_back(u, v);
  }
  return build(std::move(labels), std::move(pairs));
}

Graph Graph::from_labelled_edges(std::span<const std::pair<Label, Label>> edges) {
  std::unordered_map<Label, Vertex> ids;
  std::vector<Label> labels;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  auto intern = [&](Label x) {
    auto [it, fresh] = ids.try_emplace(x, static_cast<Vertex>(labels.size()));
    if (fresh) labels.push_back(x);
    return it->second;
  };
  for (auto [a, b] : edges) {
    if (a == b) continue;
    Vertex u = intern(a);
    Vertex v = intern(b);
    pairs.emplace_back(u, v);
  }
  return build(std::move(labels), std::move(pairs));
}

Graph Graph::build(std::vector<Label> labels, std::vector<std::pair<Vertex, Vertex>> pairs) {
  const std::size_t n = labels.size();
  Graph g;
  g.labels_ = std::move(labels);

  std::vector<std::uint64_t> raw_offsets(n + 1, 0);
  for (auto [u, v] : pairs) {
    ++raw_offsets[u + 1];
    ++raw_offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) raw_offsets[i + 1] += raw_offsets[i];
  std::vector<Vertex> raw(raw_offsets[n]);
  {
    std::vector<std::uint64_t> cursor(raw_offsets.begin(), raw_offsets.end() - 1);
    for (auto [u, v] : pairs) {
      raw[cursor[u]++] = v;
      raw[cursor[v]++] = u;
    }
  }
  pairs.clear();
  pairs.shrink_to_fit();

  // Sort and dedup in place, compacting towards the front.
  g.offsets_.assign(n + 1, 0);
  std::uint64_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(raw_offsets[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(raw_offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    auto out = raw.begin() + static_cast<std::ptrdiff_t>(write);
    out = std::move(first, last, out);
    write = static_cast<std::uint64_t>(out - raw.begin());
    g.offsets_[v + 1] = write;
  }
  raw.resize(write);
  raw.shrink_to_fit();
  g.neighbors_ = std::move(raw);

  const std::size_t m = write / 2;
  g.edge_ids_.assign(write, 0);
  g.edge_lo_.reserve(m);
  g.edge_hi_.reserve(m);
  for (Vertex u = 0; u < n; ++u) {
    for (std::uint64_t i = g.offsets_[u]; i < g.offsets_[u + 1]; ++i) {
      Vertex v = g.neighbors_[i];
      if (v < u) continue;
      g.edge_ids_[i] = static_cast<EdgeId>(g.edge_lo_.size());
      g.edge_lo_.push_back(u);
      g.edge_hi_.push_back(v);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (std::uint64_t i = g.offsets_[u]; i < g.offsets_[u + 1]; ++i) {
      Vertex v = g.neighbors_[i];
      if (v > u) continue;
      auto nv = g.neighbors(v);
      auto pos = std::lower_bound(nv.begin(), nv.end(), u) - nv.begin();
      g.edge_ids_[i] = g.edge_ids_[g.offsets_[v] + static_cast<std::uint64_t>(pos)];
    }
  }

  g.label_index_.reserve(n);
  for (Vertex v = 0; v < n; ++v) g.label_index_.emplace(g.labels_[v], v);
  return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const noexcept {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nu = neighbors(u);
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return std::nullopt;
  return edge_ids_[offsets_[u] + static_cast<std::uint64_t>(it - nu.begin())];
}

std::optional<Vertex> Graph::vertex_of(Label label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Graph::max_degree() const noexcept {
  std::uint32_t best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<std::pair<Label, Label>> edges;
  edges.reserve(text.size() / 12);

  const char* p = text.data();
  const char* end = p + text.size();
  std::size_t line = 0;
  while (p < end) {
    ++line;
    const char* eol = static_cast<const char*>(std::memchr(p, '\n', static_cast<std::size_t>(end - p)));
    if (!eol) eol = end;
    const char* q = p;
    while (q < eol && is_space(*q)) ++q;
    if (q < eol && *q != '#') {
      Label tok[2];
      for (int k = 0; k < 2; ++k) {
        while (q < eol && is_space(*q)) ++q;
        auto [ptr, ec] = std::from_chars(q, eol, tok[k]);
        if (ec != std::errc{} || (ptr < eol && !is_space(*ptr))) {
          const char* stop = q;
          while (stop < eol && !is_space(*stop)) ++stop;
          std::string bad(q, stop);
          throw ParseError(line, bad.empty() ? "expected two vertex labels"
                                             : "malformed vertex label '" + bad + "'");
        }
        q = ptr;
      }
      while (q < eol && is_space(*q)) ++q;
      if (q != eol) throw ParseError(line, "unexpected trailing token");
      edges.emplace_back(tok[0], tok[1]);
    }
    p = eol + 1;
  }

  Graph g = Graph::from_labelled_edges(edges);
  if (g.num_edges() == 0) throw std::runtime_error("no edges");
  return g;
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  std::vector<std::pair<Label, Label>> rows;
  rows.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Label a = g.label(g.edge_lo(e));
    Label b = g.label(g.edge_hi(e));
    rows.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(rows.begin(), rows.end());
  for (auto [a, b] : rows) out << a << ' ' << b << '\n';
}

std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  if (!members.empty() && members.back() >= g.num_vertices())
    throw std::domain_error("vertex " + std::to_string(members.back()) + " outside graph");
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::domain_error("vertex set contains duplicates");

  std::size_t count = 0;
  for (Vertex u : members) {
    for (Vertex v : g.neighbors(u)) {
      if (v > u && std::binary_search(members.begin(), members.end(), v)) ++count;
    }
  }
  return count;
}

}  // namespace rtr
