#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "oddminor/decomposition.hpp"
#include "oddminor/generators.hpp"

namespace oddminor {

// A k-wall inside a host graph: one host vertex per vertex of elementary_wall(k) and one
// host path per edge of elementary_wall(k), running from branch[e.u] to branch[e.v].
struct Wall {
    int order = 0;
    std::vector<Vertex> branch;
    std::vector<std::vector<Vertex>> paths;
};

// cached elementary_wall(k)
const Generated& elementary(int k);

std::vector<Vertex> wall_vertices(const Wall& w);          // sorted
std::vector<Vertex> wall_branch_vertices(const Wall& w);   // degree-3 images, sorted
std::vector<Vertex> wall_corners(const Wall& w);           // top-left, top-right, bottom-right, bottom-left
std::vector<Vertex> wall_perimeter(const Wall& w);         // cyclic, starting at the top-left corner
std::vector<Vertex> wall_row(const Wall& w, int i);        // sorted host vertices, 1-based
std::vector<Vertex> wall_column(const Wall& w, int j);     // sorted host vertices, 1-based
// even order only: the brick between rows k and k+1 around the middle columns, cyclic
// from its top-left branch vertex; its six branch vertices are in the second vector
std::vector<Vertex> central_brick(const Wall& w, std::vector<Vertex>* branch_six = nullptr);
// the wall as a graph of its own (host ids kept in to_host)
Subgraph wall_graph(const Wall& w);

std::optional<Violation> validate_wall(const Graph& g, const Wall& w);
bool is_clean(const Wall& w);
// 1/2 colour per entry of wall_vertices(w), branch images coloured alike; empty when not clean
std::vector<int> wall_colouring(const Wall& w);

// h-subwall using rows row0..row0+h-1 and wall columns col0..col0+h-1 (1-based)
Wall subwall(const Wall& w, int row0, int col0, int h);
// the wall itself as a certificate over its own elementary graph
Wall identity_wall(int k);

// host made of elementary_wall(k) with edge e replaced by a path of lengths[e] edges;
// elementary vertices keep their ids, subdivision vertices follow in edge order
struct WallFixture {
    Graph graph;
    Wall wall;
};
WallFixture subdivided_wall(int k, const std::vector<int>& lengths);

struct FindWallOptions {
    long long budget = 10'000'000;
    int pass_through = 2;  // high-degree vertices a path may run through
    int restarts = 8;      // shuffled attempts sharing the budget
    unsigned long long seed = 1;
    bool clean = false;  // only accept walls whose subgraph is bipartite
};

// slides each corner along its two paths onto the colour of the branch vertices when the
// wall is bipartite and such a spot exists; find_wall and find_clean_subwall apply it
Wall settle_corners(const Wall& w);

// nullopt = not found by the search (not a treewidth certificate); BudgetExhausted otherwise
std::optional<Wall> find_wall(const Graph& g, int k, const FindWallOptions& opt = {});
std::optional<Wall> find_clean_subwall(const Wall& w, int k);

// smallest wall order the inside-out router handles for a 2k-wall; OrderTooSmall for unknown k
int inside_out_min_order(int k);
// 2k-wall whose central brick is the perimeter of w, no corner of w on a brick branch vertex;
// accept, when given, may reject a layout and ask for the next one
Wall inside_out(const Wall& w, int k, const std::function<bool(const Wall&)>& accept = nullptr);

}  // namespace oddminor
