#pragma once

#include <string>
#include <string_view>

#include "frank/graph.hpp"

namespace frank {

enum class GraphFormat { graph6, edge_list };

/// Decodes one line of graph6. A trailing newline and the optional
/// ">>graph6<<" header are accepted. Edge ids follow the graph6 bit order:
/// (0,1), (0,2), (1,2), (0,3), ... i.e. column-major over the upper triangle.
Graph parse_graph6(std::string_view text);

/// Encodes `g` as graph6 (no header, no newline). Edge ids are not encoded,
/// so parse_graph6(to_graph6(g)) renumbers edges into graph6 order.
std::string to_graph6(const Graph& g);

/// "n m" followed by m lines "u v". Edge ids follow line order; pairs are
/// normalized to u < v.
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);

}  // namespace frank
