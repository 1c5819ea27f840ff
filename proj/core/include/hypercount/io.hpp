#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypercount/hypergraph.hpp"

namespace hypercount {

// Parsed ".hg" file: hypergraph plus the original string labels and any
// vertex colors. Vertices are densely re-numbered in first-seen order.
struct HgFile {
  Hypergraph hg;
  std::vector<std::string> labels;               // dense id -> token
  std::unordered_map<int, int> colors;           // dense id -> color
};

// Format: UTF-8 lines; '#' starts a comment; "e tok1 ... tokA" declares a
// hyperedge of arity A >= 2; "c tok color" assigns an integer color.
// Duplicate edges are silently deduplicated; arity-1 edge lines, repeated
// tokens within one edge, and unknown directives are input errors.
HgFile load_hg(std::istream& in, const std::string& origin = "<stream>");
HgFile load_hg_file(const std::string& path);

void save_hg(const HgFile& file, std::ostream& out);
void save_hg_file(const HgFile& file, const std::string& path);

// Default labels "v0".."v{n-1}" for structures built in memory.
HgFile to_hg_file(const Hypergraph& hg);
HgFile to_hg_file(const ColoredHypergraph& chg);

// Requires every vertex to carry a color; input error otherwise.
ColoredHypergraph to_colored(const HgFile& file);

}  // namespace hypercount
