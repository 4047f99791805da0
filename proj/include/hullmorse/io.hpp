#pragma once

// Graph text formats: "n m" edge lists and graph6.

#include <istream>
#include <string>
#include <vector>

#include "hullmorse/graph.hpp"

namespace hullmorse {

enum class GraphFormat { kEdgeList, kGraph6 };

GraphFormat parse_graph_format(const std::string& name);  // "edgelist" or "g6"

/// First line "n m", then m lines "u v" with 0 <= u < v < n.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

/// One graph6 string (no header, no newline). Vertices 0..n-1.
Graph parse_graph6(const std::string& line);
/// Requires the vertex set to be 0..universe-1.
std::string to_graph6(const Graph& g);

/// Reads one edge list, or every nonblank graph6 line.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);

}  // namespace hullmorse
