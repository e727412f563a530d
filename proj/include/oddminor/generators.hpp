#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

// A generated graph with its coordinate side map.
struct Generated {
    Graph graph;
    std::vector<std::pair<int, int>> coord;  // (row, column); (0,0) for the named extras x, y
    std::vector<Edge> tagged;                // parity-breaking / crossing edges
    std::map<std::string, Vertex> named;     // "x", "y" when present

    // -1 when no vertex has that coordinate
    Vertex at(int row, int col) const;
};

Generated grid(int n, int m);
// k >= 2 accepted here; generate() enforces the public k >= 3 rule
Generated elementary_wall(int k);
Generated spb_grid(int k);
Generated single_crossing_grid(int k);
Generated parity_crossing_grid(int i, int k);

// family names: grid, wall, spb, cross, pcross
Generated generate(const std::string& family, const std::vector<int>& params);

}  // namespace oddminor
