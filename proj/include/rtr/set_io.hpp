#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rtr/family.hpp"
#include "rtr/graph.hpp"

namespace rtr {

/// Sets file: optional "# key=value" header lines, then one set per line as
/// space-separated original labels, in family order. Unassigned vertices
/// are not written.
void write_sets(const Graph& g, const SetFamily& family, std::ostream& out,
                const std::vector<std::pair<std::string, std::string>>& header = {});

/// Reads a sets file against g. Blank and '#' lines are skipped. Sets may
/// overlap (external tools such as truss hierarchies emit overlapping sets);
/// `unassigned` holds vertices in no set. Throws ParseError on malformed
/// tokens and std::runtime_error("unknown vertex label N") for labels not in g.
SetFamily read_sets(const Graph& g, std::istream& in);
SetFamily read_sets_file(const Graph& g, const std::string& path);

}  // namespace rtr
