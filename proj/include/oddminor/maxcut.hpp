#pragma once

#include <string>
#include <vector>

#include "oddminor/decomposition.hpp"
#include "oddminor/treewidth.hpp"

namespace oddminor {

struct CutTraceEntry {
    std::vector<Vertex> vertices;
    std::string solver;  // "bipartite", "treewidth", "brute"
    int width = -1;
    Weight weight = 0;
    bool flipped = false;
};

struct CutSolution {
    std::vector<int> side;       // 0 or 1 per vertex
    std::vector<int> cut_edges;  // sorted edge ids
    Weight weight = 0;
    std::vector<CutTraceEntry> trace;
};

// f is a list of edge ids; true iff f is the boundary of some vertex set
bool is_cut(const Graph& g, const std::vector<int>& f);
// fills cut_edges and weight from side
CutSolution cut_from_side(const Graph& g, std::vector<int> side);

// |V| <= 20; lexicographically least side vector among optima
CutSolution brute_maxcut(const Graph& g);
CutSolution bipartite_maxcut(const Graph& g);

struct CutTwOptions {
    int max_width = 20;
};

CutSolution tw_maxcut(const Graph& g, const TreeDecomposition& t, const CutTwOptions& opt = {});

struct BlindCutOptions {
    int cutoff = 12;
    int exact_limit = 32;
    int brute_limit = 20;
};

CutSolution blind_maxcut(const Graph& g, const BlindCutOptions& opt = {});

}  // namespace oddminor
