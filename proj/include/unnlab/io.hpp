#ifndef UNNLAB_IO_HPP
#define UNNLAB_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "unnlab/constructions.hpp"
#include "unnlab/graph.hpp"

namespace unnlab {

// Edge-list text format, the interchange format for every tool here:
//   # comment lines start with '#'
//   n <node-count>          first non-comment line
//   u v                     one edge per line, 0-based
// Duplicate and reversed pairs are rejected. The writer emits edges
// sorted by (min, max); for bipartite graphs it prepends a
// "# bipartite n1=<k>" header.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path); // "-" means stdin

void write_edge_list(std::ostream& out, const Graph& g,
                     std::optional<int> bipartite_n1 = std::nullopt);
void write_edge_list_file(const std::string& path, const Graph& g,
                          std::optional<int> bipartite_n1 = std::nullopt); // "-" = stdout

// Signing file: one "u v s" line per base edge, s in {+1, -1}; must
// cover the base's edge set exactly. '#' comments allowed.
Signing read_signing(std::istream& in, const Graph& base);
Signing read_signing_file(const std::string& path, const Graph& base);

// Graphviz export for visual inspection.
void write_dot(std::ostream& out, const Graph& g);

} // namespace unnlab

#endif
