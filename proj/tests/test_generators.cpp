#include "doctest.h"
#include "helpers.hpp"

#include "oddminor/generators.hpp"

using namespace oddminor;

namespace {

Graph without(const Graph& g, const std::vector<Edge>& drop) {
    std::vector<int> keep;
    for (int i = 0; i < g.m(); ++i)
        if (std::find(drop.begin(), drop.end(), g.edge(i)) == drop.end()) keep.push_back(i);
    return edge_subgraph(g, keep);
}

}  // namespace

TEST_CASE("generator golden counts") {
    auto g = grid(2, 3);
    CHECK(g.graph.n() == 6);
    CHECK(g.graph.m() == 7);
    auto s = spb_grid(2);
    CHECK(s.graph.n() == 16);
    CHECK(s.graph.m() == 25);
    auto u = single_crossing_grid(3);
    CHECK(u.graph.n() == 36);
    CHECK(u.graph.m() == 62);
    auto c = parity_crossing_grid(3, 3);
    CHECK(c.graph.n() == 38);
    CHECK(c.graph.m() == 65);
    // frozen after the first verified construction
    auto w3 = elementary_wall(3);
    CHECK(w3.graph.n() == 16);
    CHECK(w3.graph.m() == 19);
    auto w4 = elementary_wall(4);
    CHECK(w4.graph.n() == 30);
    CHECK(w4.graph.m() == 38);
    auto w6 = elementary_wall(6);
    CHECK(w6.graph.n() == 70);
    CHECK(w6.graph.m() == 94);
}

TEST_CASE("generator parameter errors") {
    CHECK_THROWS_AS(grid(0, 3), Error);
    CHECK_THROWS_AS(spb_grid(1), Error);
    CHECK_THROWS_AS(parity_crossing_grid(4, 3), Error);
    CHECK_THROWS_AS(generate("wall", {2}), Error);
    CHECK_THROWS_AS(generate("nope", {2}), Error);
    CHECK(generate("wall", {3}).graph.n() == 16);
}

TEST_CASE("grids are bipartite and planar") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m) {
            Graph g = grid(n, m).graph;
            CHECK(is_bipartite(g));
            CHECK(is_planar(g).planar);
        }
}

TEST_CASE("spb grid parity edge is the only parity break") {
    for (int k = 2; k <= 4; ++k) {
        auto s = spb_grid(k);
        CHECK_FALSE(is_bipartite(s.graph));
        REQUIRE(s.tagged.size() == 1);
        CHECK(is_bipartite(without(s.graph, s.tagged)));
        CHECK(s.tagged[0] == make_edge(s.at(k, k), s.at(k + 1, k + 1)));
    }
}

TEST_CASE("every vertex pair of spb_grid(2) lies on a common odd cycle") {
    Graph g = spb_grid(2).graph;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            auto c = th::odd_cycle_through(g, u, v);
            REQUIRE(c.size() % 2 == 1);
            CHECK(std::set<Vertex>(c.begin(), c.end()).size() == c.size());
            CHECK(std::count(c.begin(), c.end(), v) == 1);
            for (size_t i = 0; i < c.size(); ++i) CHECK(g.has_edge(c[i], c[(i + 1) % c.size()]));
        }
    // no odd cycle at all once the parity edge is gone
    CHECK(th::odd_cycle_through(grid(4, 4).graph, 0, 5).empty());
}

TEST_CASE("elementary walls are subcubic and bipartite") {
    for (int k = 3; k <= 7; ++k) {
        Graph w = elementary_wall(k).graph;
        int maxdeg = 0;
        for (int v = 0; v < w.n(); ++v) maxdeg = std::max(maxdeg, w.degree(v));
        CHECK(maxdeg == 3);
        CHECK(is_bipartite(w));
        CHECK(is_connected(w));
    }
    // the 2-wall is a single brick
    Graph w2 = elementary_wall(2).graph;
    CHECK(w2.n() == 6);
    CHECK(w2.m() == 6);
}

TEST_CASE("parity crossing grids are non-bipartite and carry x, y") {
    for (int i = 1; i <= 3; ++i)
        for (int k = 3; k <= 4; ++k) {
            auto c = parity_crossing_grid(i, k);
            CHECK_FALSE(is_bipartite(c.graph));
            CHECK(c.named.count("x") == (i >= 2 ? 1u : 0u));
            CHECK(c.named.count("y") == (i == 3 ? 1u : 0u));
        }
    auto c3 = parity_crossing_grid(3, 3);
    Vertex x = c3.named.at("x");
    CHECK(c3.graph.has_edge(x, c3.at(4, 4)));
    CHECK(c3.graph.label(x) == "x");
}
