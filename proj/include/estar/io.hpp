#ifndef ESTAR_IO_HPP
#define ESTAR_IO_HPP

#include <iosfwd>
#include <string>

#include "estar/graph.hpp"

namespace estar {

/// Edge-list text format shared by all tools: first line "n m", then m lines
/// "u v" with 0-based vertex ids. '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

/// Undirected DOT, vertices printed with their labels.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace estar

#endif
