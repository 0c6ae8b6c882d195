#include "rtr/family.hpp"

#include <stdexcept>
#include <string>

namespace rtr {

std::vector<std::int64_t> SetFamily::membership(std::size_t n) const {
  std::vector<std::int64_t> owner(n, -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex v : sets[i]) owner[v] = static_cast<std::int64_t>(i);
  }
  return owner;
}

void SetFamily::check_partition(std::size_t n) const {
  std::vector<std::uint8_t> seen(n, 0);
  auto mark = [&](Vertex v) {
    if (v >= n) throw std::logic_error("vertex " + std::to_string(v) + " outside graph");
    if (seen[v]) throw std::logic_error("vertex " + std::to_string(v) + " appears twice");
    seen[v] = 1;
  };
  for (const auto& s : sets) {
    if (s.empty()) throw std::logic_error("empty set in family");
    for (Vertex v : s) mark(v);
  }
  for (Vertex v : unassigned) mark(v);
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) throw std::logic_error("vertex " + std::to_string(v) + " missing from family");
  }
}

void SetFamily::fill_unassigned(std::size_t n) {
  std::vector<std::uint8_t> seen(n, 0);
  for (const auto& s : sets) {
    for (Vertex v : s) seen[v] = 1;
  }
  unassigned.clear();
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) unassigned.push_back(static_cast<Vertex>(v));
  }
}

}  // namespace rtr
