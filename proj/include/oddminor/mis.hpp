#pragma once

#include <string>
#include <vector>

#include "oddminor/decomposition.hpp"
#include "oddminor/treewidth.hpp"

namespace oddminor {

// One line per block of the block DP.
struct MisTraceEntry {
    int block = -1;
    std::vector<Vertex> vertices;
    Vertex attach = -1;       // v_t, the vertex shared with the parent (root: v_r)
    std::string solver;       // "bipartite" or "treewidth"
    int width = -1;           // decomposition width for the treewidth solver
    Weight in = 0;            // in_t
    Weight out = 0;           // out_t
};

struct MisSolution {
    std::vector<Vertex> vertices;  // sorted
    Weight weight = 0;
    Weight cover_weight = -1;      // bipartite solver only
    std::vector<MisTraceEntry> trace;
};

bool is_independent(const Graph& g, const std::vector<Vertex>& s);
Weight set_weight(const Graph& g, const std::vector<Vertex>& s);

// exhaustive, |V| <= 22; lexicographically least optimal set
MisSolution brute_mwis(const Graph& g);

// weights from g.vertex_weight; NotBipartite otherwise
MisSolution bipartite_mwis(const Graph& g);

struct TwOptions {
    int max_width = 20;
    bool canonical = true;  // lexicographically least optimum (one extra solve per vertex)
};

MisSolution tw_mwis(const Graph& g, const TreeDecomposition& t, const TwOptions& opt = {});

struct BlindOptions {
    int cutoff = 12;          // treewidth threshold for non-bipartite blocks
    int exact_limit = 32;     // blocks up to this size get an exact treewidth attempt
};

MisSolution blind_mwis(const Graph& g, const BlindOptions& opt = {});

}  // namespace oddminor
