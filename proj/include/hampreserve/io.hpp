#ifndef HAMPRESERVE_IO_HPP
#define HAMPRESERVE_IO_HPP

#include <iosfwd>
#include <string>

#include "hampreserve/graph.hpp"

namespace hp {

// Parse errors carry a 1-based line number in the message.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads either the edge-list format ("n m" then m lines "u v", 0-indexed,
/// '#' comments) or DIMACS undirected ("p edge n m" + "e u v", 1-indexed,
/// 'c' comments). The format is detected from the first non-comment line.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Edge-list format; `header` (if nonempty) is emitted as a '#' comment.
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::string& header = "");
void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::string& header = "");

}  // namespace hp

#endif
