#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oddminor/decomposition.hpp"
#include "oddminor/walls.hpp"

namespace oddminor {

// branch[v] is the host vertex set of pattern vertex v; edge_images[e] = (a, b) with a in
// branch[pattern.edge(e).u] and b in branch[pattern.edge(e).v]; witness colours (1/2) every
// branch vertex. family/params/index only describe the pattern for reports.
struct OddExpansion {
    Graph pattern;
    std::vector<std::vector<Vertex>> branch;
    std::vector<std::pair<Vertex, Vertex>> edge_images;
    std::map<Vertex, int> witness;
    std::string family;
    std::vector<int> params;
};

// condition codes: 0 shape, 1 branch sets empty or overlapping, 2 branch set disconnected,
// 3 witness not proper on any spanning tree of a branch set, 4 bad edge image,
// 5 edge image not monochromatic, 6 witness missing or not 1/2
std::optional<Violation> verify_odd_expansion(const Graph& g, const OddExpansion& e);
// the same checks without the witness (conditions 0, 1, 2, 4)
std::optional<Violation> validate_expansion(const Graph& g, const OddExpansion& e);
// a witness if one exists: trees flip colour, images keep it; canonical form
std::optional<std::map<Vertex, int>> derive_witness(const Graph& g, const OddExpansion& e);
// flips whole parts of the inflated copy so its lowest vertex has colour 1
std::map<Vertex, int> canonical_witness(const Graph& g, const OddExpansion& e, std::map<Vertex, int> witness);
// pattern bipartiteness audit; on a bipartite host every verified expansion must pass it
bool pattern_is_bipartite(const OddExpansion& e);

// A subgraph named by host ids.
struct HostSubgraph {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Edge> edges;       // sorted
};
HostSubgraph host_subgraph(const Graph& h);  // vertices with at least one edge
HostSubgraph wall_subgraph(const Wall& w);
HostSubgraph union_of(const HostSubgraph& a, const std::vector<std::vector<Vertex>>& paths);
// the subgraph as a graph of its own, vertex i = vertices[i]
Subgraph as_graph(const HostSubgraph& h);

struct EarCertificate {
    std::vector<Vertex> path;
    HostSubgraph host;
};

// condition codes: 0 not a path of g, 1 ends not distinct vertices of h, 2 interior meets h,
// 3 uses an edge of h, 4 h not bipartite, 5 h plus the path still bipartite
std::optional<Violation> validate_odd_ear(const Graph& g, const HostSubgraph& h, const std::vector<Vertex>& path);
EarCertificate find_odd_ear(const Graph& g, const HostSubgraph& h);

// plain expansion of a bipartite pattern in a bipartite host; witness from the bipartitions
OddExpansion oddify_bipartite_expansion(const Graph& g, OddExpansion e);

// clean wall of order >= inside_out_min_order(k) + 2 plus an odd ear ending on its perimeter
OddExpansion build_odd_spb_expansion(const Graph& g, const Wall& w, const EarCertificate& p, int k);

struct BlockStatus {
    std::vector<Vertex> vertices;
    std::string status;  // bipartite, planar, treewidth, undecided
    int width = -1;
    std::string note;
};

struct StructureReport {
    std::vector<BlockStatus> blocks;
    TreeDecomposition decomposition;  // block decompositions glued along the block-cut forest
};

struct DetectOptions {
    int cutoff = 8;         // treewidth bound under which a block counts as small
    int extra_order = 4;    // wall orders tried above the minimum
    int exact_limit = 32;   // exact treewidth for blocks up to this size
    int copy_limit = 64;    // blocks up to this size are searched for a plain copy of the pattern
    long long copy_budget = 200'000;
    FindWallOptions wall;
    int threads = 1;
};

std::variant<OddExpansion, StructureReport> detect_spb(const Graph& g, int k, const DetectOptions& opt = {});

struct CrossWall {
    Wall wall;
    std::vector<Vertex> ear1;  // s1 .. t1
    std::vector<Vertex> ear2;  // s2 .. t2
};

// condition codes: 0 wall invalid, 1 wall not clean, 2 ear not a wall ear, 3 ears meet,
// 4 ends are not the corners in the order s1, s2, t1, t2
std::optional<Violation> validate_cross_wall(const Graph& g, const CrossWall& cw);
// hint: an expansion of single_crossing_grid(m) in g; clean cross-wall of order r
CrossWall find_cross_wall(const Graph& g, const OddExpansion& hint, int r);
// identity expansion of a generated pattern inside itself
OddExpansion identity_expansion(const Generated& pattern, const std::string& family, const std::vector<int>& params);

// i in params[0] of the result (family "pcross", params {i, k})
OddExpansion build_odd_spc_expansion(const Graph& g, const CrossWall& cw, int k);

struct BlindDecision {
    enum class Kind { Decomposition, Expansion, Undecided } kind = Kind::Undecided;
    StructureReport report;
    std::optional<OddExpansion> expansion;
    std::vector<Vertex> blocking;  // the undecided block
};

BlindDecision decide_blind_structure(const Graph& g, int k, BlindClass a, const DetectOptions& opt = {});

// lift an expansion found in a subgraph back to host ids
OddExpansion lift_expansion(const OddExpansion& e, const std::vector<Vertex>& to_host);

}  // namespace oddminor
