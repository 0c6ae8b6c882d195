#include "rtr/set_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rtr {

void write_sets(const Graph& g, const SetFamily& family, std::ostream& out,
                const std::vector<std::pair<std::string, std::string>>& header) {
  for (const auto& [key, value] : header) out << "# " << key << '=' << value << '\n';
  for (const auto& s : family.sets) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ' ';
      out << g.label(s[i]);
    }
    out << '\n';
  }
}

SetFamily read_sets(const Graph& g, std::istream& in) {
  SetFamily family;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string tok;
    std::vector<Vertex> set;
    bool first = true;
    while (tokens >> tok) {
      if (first && tok.front() == '#') break;
      first = false;
      Label label = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), label);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(lineno, "malformed vertex label '" + tok + "'");
      auto v = g.vertex_of(label);
      if (!v) throw std::runtime_error("unknown vertex label " + tok + " (line " + std::to_string(lineno) + ")");
      set.push_back(*v);
    }
    if (set.empty()) continue;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    family.sets.push_back(std::move(set));
  }
  family.fill_unassigned(g.num_vertices());
  return family;
}

SetFamily read_sets_file(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_sets(g, in);
}

}  // namespace rtr
