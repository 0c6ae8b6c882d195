#pragma once

#include <utility>
#include <vector>

#include "rtr/graph.hpp"

namespace fixture {

using EdgeList = std::vector<std::pair<rtr::Vertex, rtr::Vertex>>;

inline void add_clique(EdgeList& edges, rtr::Vertex first, rtr::Vertex size) {
  for (rtr::Vertex i = 0; i < size; ++i)
    for (rtr::Vertex j = i + 1; j < size; ++j) edges.emplace_back(first + i, first + j);
}

inline rtr::Graph clique(rtr::Vertex size) {
  EdgeList edges;
  add_clique(edges, 0, size);
  return rtr::Graph::from_edges(size, edges);
}

inline rtr::Graph cycle(rtr::Vertex size) {
  EdgeList edges;
  for (rtr::Vertex i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
  return rtr::Graph::from_edges(size, edges);
}

inline rtr::Graph path(rtr::Vertex size) {
  EdgeList edges;
  for (rtr::Vertex i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
  return rtr::Graph::from_edges(size, edges);
}

/// Complete multipartite graph; part p holds vertices p*part_size .. +part_size-1.
inline rtr::Graph complete_multipartite(rtr::Vertex parts, rtr::Vertex part_size) {
  EdgeList edges;
  const rtr::Vertex n = parts * part_size;
  for (rtr::Vertex u = 0; u < n; ++u)
    for (rtr::Vertex v = u + 1; v < n; ++v)
      if (u / part_size != v / part_size) edges.emplace_back(u, v);
  return rtr::Graph::from_edges(n, edges);
}

inline std::vector<rtr::Vertex> iota(rtr::Vertex first, rtr::Vertex count) {
  std::vector<rtr::Vertex> out;
  for (rtr::Vertex i = 0; i < count; ++i) out.push_back(first + i);
  return out;
}

}  // namespace fixture
