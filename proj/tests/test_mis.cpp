#include "doctest.h"
#include "helpers.hpp"

#include "oddminor/generators.hpp"
#include "oddminor/mis.hpp"

using namespace oddminor;

namespace {

// plain 2^n scan, independent of brute_mwis
Weight scan_mwis(const Graph& g) {
    const int n = g.n();
    Weight best = 0;
    for (unsigned m = 0; m < (1u << n); ++m) {
        bool ok = true;
        for (auto& e : g.edges())
            if ((m >> e.u & 1) && (m >> e.v & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Weight w = 0;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1) w += g.vertex_weight(v);
        best = std::max(best, w);
    }
    return best;
}

Graph weighted(Graph g, std::vector<Weight> w) {
    g.set_vertex_weights(std::move(w));
    return g;
}

Graph c6_triangle_at_vertex() { return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}, {7, 0}}); }
Graph c6_triangle_on_edge() { return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {1, 6}}); }

}  // namespace

TEST_CASE("brute_mwis examples") {
    CHECK(brute_mwis(Graph()).weight == 0);
    CHECK(brute_mwis(Graph()).vertices.empty());
    CHECK(brute_mwis(weighted(Graph(1, {}), {7})).weight == 7);
    CHECK(brute_mwis(th::cycle(5)).weight == 2);
    // lexicographic tie-break
    CHECK(brute_mwis(th::cycle(5)).vertices == std::vector<Vertex>{0, 2});
    CHECK_THROWS_AS(brute_mwis(Graph(23, {})), Error);
}

TEST_CASE("bipartite_mwis examples and duality") {
    auto p = bipartite_mwis(th::path(3));
    CHECK(p.weight == 2);
    CHECK(p.vertices == std::vector<Vertex>{0, 2});
    Graph star = weighted(Graph(4, {{0, 1}, {0, 2}, {0, 3}}), {5, 1, 1, 1});
    auto s = bipartite_mwis(star);
    CHECK(s.weight == 5);
    CHECK(s.vertices == std::vector<Vertex>{0});
    try {
        bipartite_mwis(th::cycle(3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotBipartite);
    }
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int a = 1 + trial % 8, b = 1 + (trial / 8) % 8;
        Graph g = th::random_bipartite(rng, a, b, 0.35);
        g.set_vertex_weights(th::random_weights(rng, g.n(), 9));
        auto r = bipartite_mwis(g);
        CHECK(is_independent(g, r.vertices));
        CHECK(set_weight(g, r.vertices) == r.weight);
        CHECK(r.weight == scan_mwis(g));
        CHECK(r.weight + r.cover_weight == g.total_vertex_weight());
    }
}

TEST_CASE("tw_mwis examples") {
    Graph c5 = th::cycle(5);
    TreeDecomposition t;
    t.bags = {{0, 1, 4}, {1, 3, 4}, {1, 2, 3}};
    t.tree = {{0, 1}, {1, 2}};
    t.root = 0;
    auto r = tw_mwis(c5, t);
    CHECK(r.weight == 2);
    CHECK(r.vertices == std::vector<Vertex>{0, 2});

    Graph g33 = grid(3, 3).graph;
    auto r33 = tw_mwis(g33, heuristic_decomposition(g33, Heuristic::MinFill));
    CHECK(r33.weight == 5);
    CHECK(r33.weight == scan_mwis(g33));
    CHECK(r33.vertices == brute_mwis(g33).vertices);

    try {
        tw_mwis(th::complete(6), trivial_decomposition(th::complete(6)), TwOptions{3, true});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WidthTooLarge);
    }
}

TEST_CASE("tw_mwis matches brute force, including the tie-break") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 16;
        Graph g = th::random_graph(rng, n, 0.1 + 0.03 * (trial % 8));
        g.set_vertex_weights(th::random_weights(rng, n, trial % 3 == 0 ? 1 : 6));
        auto td = heuristic_decomposition(g, trial % 2 ? Heuristic::MinFill : Heuristic::MinDegree);
        auto r = tw_mwis(g, td);
        auto b = brute_mwis(g);
        CHECK(r.weight == b.weight);
        CHECK(r.vertices == b.vertices);
        CHECK(is_independent(g, r.vertices));
        auto fast = tw_mwis(g, td, TwOptions{20, false});
        CHECK(fast.weight == b.weight);
        CHECK(set_weight(g, fast.vertices) == fast.weight);
        CHECK(is_independent(g, fast.vertices));
    }
}

TEST_CASE("blind_mwis examples") {
    auto bt = blind_mwis(th::bowtie());
    CHECK(bt.weight == 2);
    CHECK(std::count(bt.vertices.begin(), bt.vertices.end(), 0) == 0);

    Graph gv = c6_triangle_at_vertex();
    CHECK(scan_mwis(gv) == 4);
    CHECK(blind_mwis(gv).weight == 4);
    Graph ge = c6_triangle_on_edge();
    CHECK(scan_mwis(ge) == 3);
    CHECK(blind_mwis(ge).weight == 3);

    CHECK(blind_mwis(Graph()).weight == 0);
    CHECK(blind_mwis(weighted(Graph(1, {}), {7})).weight == 7);
    // disconnected input: sum over components
    Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    CHECK(blind_mwis(two).weight == 3);

    try {
        blind_mwis(th::complete(8), BlindOptions{3, 32});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BlindWidthExceeded);
    }
}

TEST_CASE("blind_mwis on glued-block graphs against both oracles") {
    std::mt19937_64 rng(47);
    int small = 0, large = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto gl = th::random_glued(rng, trial % 2 ? 22 : 40, 20, 10);
        Graph g = gl.g;
        g.set_vertex_weights(th::random_weights(rng, g.n(), 7));
        auto r = blind_mwis(g);
        CHECK(is_independent(g, r.vertices));
        CHECK(set_weight(g, r.vertices) == r.weight);
        if (g.n() <= 22) {
            ++small;
            CHECK(r.weight == brute_mwis(g).weight);
        } else {
            ++large;
            auto td = heuristic_decomposition(g, Heuristic::MinFill);
            if (metrics(td).width <= 20) CHECK(r.weight == tw_mwis(g, td, TwOptions{20, false}).weight);
        }
    }
    CHECK(small > 50);
    CHECK(large > 20);
}

TEST_CASE("block table entries bound the subtree optima") {
    // C6 - triangle - C5 chain; the trace lists in/out per block
    Graph g(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}, {7, 0}, {7, 8}, {8, 9},
                 {9, 10}, {10, 11}, {11, 7}});
    auto r = blind_mwis(g);
    CHECK(r.weight == scan_mwis(g));
    for (auto& e : r.trace) {
        CHECK(e.in >= 0);
        CHECK(e.out >= e.in);
    }
    // leaf block {7..11} attached at 7: in = MWIS of the C5 minus N[7], out = minus 7
    bool seen = false;
    for (auto& e : r.trace)
        if (e.vertices == std::vector<Vertex>{7, 8, 9, 10, 11}) {
            seen = true;
            CHECK(e.attach == 7);
            CHECK(e.in == 1);
            CHECK(e.out == 2);
        }
    CHECK(seen);
}
