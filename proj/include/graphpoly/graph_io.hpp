#pragma once

#include "graphpoly/graph.hpp"

#include <string>
#include <vector>

namespace graphpoly {

// A graph together with two disjoint vertex sets: C (vertices known to be
// coloured) and U (vertices known to be uncoloured). Both may be empty.
struct LabelledGraph {
    Multigraph graph;
    std::vector<int> coloured;   // sorted
    std::vector<int> uncoloured; // sorted, disjoint from coloured
};

// Edge-list format: '#' starts a comment, first data line is "n m", then m
// lines "u v"; optional trailing "C: ..." and "U: ..." lines list labelled
// vertices. Throws ParseError on malformed input.
LabelledGraph parse_edge_list(const std::string& text);

// One line of graph6 (simple graphs, n <= 62 supported here).
Multigraph parse_graph6(const std::string& line);

// Dispatches between the two formats: a first data line containing a space
// is read as an edge list, anything else as graph6.
LabelledGraph parse_graph_text(const std::string& text);

std::string to_edge_list(const Multigraph& g);

LabelledGraph read_graph_file(const std::string& path);

} // namespace graphpoly
