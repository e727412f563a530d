#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;  // each sorted
    std::vector<std::pair<int, int>> tree;  // edges between node ids
    int root = -1;

    int size() const { return static_cast<int>(bags.size()); }
    std::vector<std::vector<int>> adjacency() const;
};

struct Violation {
    int condition = 0;  // 0: not a tree, 1: vertex uncovered, 2: edge uncovered, 3: disconnected occurrence
    std::vector<int> witness;
    std::string message;
};

std::optional<Violation> validate_decomposition(const Graph& g, const TreeDecomposition& t);

struct Metrics {
    int width = -1;
    int adhesion = 0;
};

Metrics metrics(const TreeDecomposition& t);

// Blocks are maximal 2-connected subgraphs, bridges, or isolated vertices.
struct Blocks {
    std::vector<std::vector<Vertex>> vertices;  // sorted; blocks sorted lexicographically
    std::vector<std::vector<int>> edges;        // edge ids per block
    std::vector<char> is_cut;
    std::vector<int> block_of_edge;
};

Blocks biconnected_components(const Graph& g);

// connected input only; bags are the blocks
TreeDecomposition block_cut_decomposition(const Graph& g);
// any input; components are joined by empty-adhesion edges
TreeDecomposition block_cut_forest(const Graph& g);

// no odd cycle of g meets x twice
bool is_globally_bipartite(const Graph& g, const std::vector<Vertex>& x, bool verify = false);
// brute-force oracle by cycle enumeration; keep |V| small
bool globally_bipartite_by_cycles(const Graph& g, const std::vector<Vertex>& x);

enum class BlindClass { B, P, BP };

std::optional<BlindClass> parse_blind_class(const std::string& s);
std::string blind_class_name(BlindClass a);

bool in_blind_class(const Graph& g, const std::vector<Vertex>& bag, BlindClass a);
int blind_width(const Graph& g, const TreeDecomposition& t, BlindClass a);
// exhaustive minimum over all tree-decompositions; |V| <= 8
int blind_width_oracle(const Graph& g, BlindClass a);

// single bag holding every vertex
TreeDecomposition trivial_decomposition(const Graph& g);

}  // namespace oddminor
