#include "doctest.h"
#include "helpers.hpp"

#include "oddminor/generators.hpp"

using namespace oddminor;

namespace {

// every simple cycle, each reported once per direction
void for_each_cycle(const Graph& g, const std::function<void(const std::vector<Vertex>&)>& f) {
    std::vector<Vertex> path;
    std::vector<char> on(g.n(), 0);
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex v) {
        for (Vertex w : g.neighbors(v)) {
            if (w == s && path.size() >= 3) f(path);
            if (w <= s || on[w]) continue;
            on[w] = 1;
            path.push_back(w);
            dfs(s, w);
            path.pop_back();
            on[w] = 0;
        }
    };
    for (Vertex s = 0; s < g.n(); ++s) {
        path = {s};
        on[s] = 1;
        dfs(s, s);
        on[s] = 0;
    }
}

bool has_odd_cycle_brute(const Graph& g) {
    bool odd = false;
    for_each_cycle(g, [&](const std::vector<Vertex>& c) { odd |= c.size() % 2 == 1; });
    return odd;
}

// all simple paths a -> b as vertex lists
std::vector<std::vector<Vertex>> all_paths(const Graph& g, Vertex a, Vertex b) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> p{a};
    std::vector<char> on(g.n(), 0);
    on[a] = 1;
    std::function<void(Vertex)> dfs = [&](Vertex v) {
        if (v == b) {
            out.push_back(p);
            return;
        }
        for (Vertex w : g.neighbors(v)) {
            if (on[w]) continue;
            on[w] = 1;
            p.push_back(w);
            dfs(w);
            p.pop_back();
            on[w] = 0;
        }
    };
    dfs(a);
    return out;
}

bool separates(const Graph& g, Vertex cut, const std::vector<Vertex>& s, const std::vector<Vertex>& t) {
    std::vector<char> blocked(g.n(), 0);
    blocked[cut] = 1;
    for (Vertex a : s)
        for (Vertex b : t) {
            if (a == cut || b == cut) continue;
            if (!bfs_path(g, a, b, &blocked).empty()) return false;
        }
    return true;
}

bool valid_path(const Graph& g, const std::vector<Vertex>& p) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    std::set<Vertex> s(p.begin(), p.end());
    return s.size() == p.size();
}

}  // namespace

TEST_CASE("build_graph: edge lists, dedup and loops") {
    Graph p = build_graph({{1, 2}, {2, 3}});
    CHECK(p.n() == 3);
    CHECK(p.m() == 2);
    CHECK(p.label(0) == "1");
    Graph d = build_graph({{1, 2}, {2, 1}});
    CHECK(d.m() == 1);
    CHECK_THROWS_AS(build_graph({{1, 1}}), Error);
    try {
        build_graph({{1, 1}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LoopEdge);
    }
    try {
        build_graph({{0, 1}}, std::vector<Weight>{-3});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NegativeWeight);
    }
    try {
        build_graph({{0, 1}, {1, 0}}, std::nullopt, BuildOptions{true});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateEdge);
    }
    Graph w = build_graph({{0, 1}, {1, 2}}, std::vector<Weight>{4, 9});
    CHECK(w.edge_weight(w.edge_index(1, 2)) == 9);
    CHECK(w.total_edge_weight() == 13);
}

TEST_CASE("checked arithmetic reports overflow") {
    CHECK_THROWS_AS(checked_add(std::numeric_limits<long long>::max(), 1), Error);
    CHECK(checked_add(2, 3) == 5);
}

TEST_CASE("bipartition_or_odd_cycle examples") {
    auto c6 = bipartition_or_odd_cycle(th::cycle(6));
    REQUIRE(std::holds_alternative<TwoColouring>(c6));
    auto& col = std::get<TwoColouring>(c6).colour;
    for (int i = 0; i < 6; ++i) CHECK(col[i] != col[(i + 1) % 6]);

    auto c5 = bipartition_or_odd_cycle(th::cycle(5));
    REQUIRE(std::holds_alternative<OddCycle>(c5));
    CHECK(std::get<OddCycle>(c5).cycle.size() == 5);
    CHECK(is_odd_cycle(th::cycle(5), std::get<OddCycle>(c5)));

    Graph k4 = th::complete(4);
    auto r = bipartition_or_odd_cycle(k4);
    REQUIRE(std::holds_alternative<OddCycle>(r));
    auto cyc = std::get<OddCycle>(r).cycle;
    CHECK(cyc.size() == 3);
    // the cycle must be one of the enumerated triangles
    std::set<std::set<int>> triangles;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) triangles.insert({a, b, c});
    CHECK(triangles.count(std::set<int>(cyc.begin(), cyc.end())) == 1);
}

TEST_CASE("bipartition agrees with cycle enumeration on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 12;
        Graph g = th::random_graph(rng, n, 0.12 + 0.02 * (trial % 10));
        auto r = bipartition_or_odd_cycle(g);
        bool colour = std::holds_alternative<TwoColouring>(r);
        CHECK(colour == !has_odd_cycle_brute(g));
        if (colour)
            CHECK(is_proper_colouring(g, std::get<TwoColouring>(r)));
        else
            CHECK(is_odd_cycle(g, std::get<OddCycle>(r)));
    }
}

TEST_CASE("torso examples") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    Subgraph t = torso(star, {1, 2, 3});
    CHECK(t.graph.n() == 3);
    CHECK(t.graph.m() == 3);

    Graph c4 = th::cycle(4);
    Subgraph t2 = torso(c4, {0, 2});
    CHECK(t2.graph.n() == 2);
    CHECK(t2.graph.m() == 1);
    CHECK(t2.to_host == std::vector<Vertex>{0, 2});

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = th::random_graph(rng, 9, 0.3);
        std::vector<Vertex> all(g.n());
        std::iota(all.begin(), all.end(), 0);
        Subgraph s = torso(g, all);
        CHECK(s.graph.edges() == g.edges());
    }
}

TEST_CASE("planarity with certificates") {
    auto k4 = is_planar(th::complete(4));
    CHECK(k4.planar);
    CHECK(check_embedding(th::complete(4), k4.rotation));

    Graph k5 = th::complete(5);
    auto r5 = is_planar(k5);
    CHECK_FALSE(r5.planar);
    CHECK(check_kuratowski(k5, r5.kuratowski));

    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    auto r33 = is_planar(k33);
    CHECK_FALSE(r33.planar);
    CHECK(check_kuratowski(k33, r33.kuratowski));

    Graph g44 = grid(4, 4).graph;
    auto rg = is_planar(g44);
    CHECK(rg.planar);
    CHECK(check_embedding(g44, rg.rotation));
}

TEST_CASE("planarity respects the Euler bound and certificates on random graphs") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + trial % 10;
        Graph g = th::random_graph(rng, n, 0.15 + 0.05 * (trial % 12));
        auto r = is_planar(g);
        if (g.m() > 3 * g.n() - 6) CHECK_FALSE(r.planar);
        if (r.planar)
            CHECK(check_embedding(g, r.rotation));
        else
            CHECK(check_kuratowski(g, r.kuratowski));
    }
}

TEST_CASE("two_disjoint_paths examples") {
    Graph c4 = th::cycle(4);
    auto r = two_disjoint_paths(c4, {0}, {2});
    REQUIRE(std::holds_alternative<PathPair>(r));
    auto pp = std::get<PathPair>(r);
    CHECK(pp.first.front() == 0);
    CHECK(pp.first.back() == 2);
    CHECK(pp.second.front() == 0);
    CHECK(pp.second.back() == 2);
    CHECK(pp.first[1] != pp.second[1]);

    Graph p3 = th::path(3);
    auto r2 = two_disjoint_paths(p3, {0}, {2});
    REQUIRE(std::holds_alternative<NoPaths>(r2));
    CHECK(std::get<NoPaths>(r2).cut == std::optional<Vertex>(1));

    Graph k4 = th::complete(4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            // brute force: two paths with disjoint interiors exist
            auto paths = all_paths(k4, a, b);
            bool exists = false;
            for (size_t i = 0; i < paths.size() && !exists; ++i)
                for (size_t j = i + 1; j < paths.size() && !exists; ++j) {
                    std::set<int> in1(paths[i].begin() + 1, paths[i].end() - 1);
                    bool ok = true;
                    for (size_t q = 1; q + 1 < paths[j].size(); ++q) ok &= !in1.count(paths[j][q]);
                    exists |= ok;
                }
            CHECK(exists);
            auto res = two_disjoint_paths(k4, {a}, {b});
            REQUIRE(std::holds_alternative<PathPair>(res));
            auto q = std::get<PathPair>(res);
            CHECK(valid_path(k4, q.first));
            CHECK(valid_path(k4, q.second));
            CHECK(q.first != q.second);
        }
}

TEST_CASE("two_disjoint_paths: paths are disjoint or the cut separates") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = th::random_connected(rng, 10, 0.12);
        std::vector<Vertex> s, t;
        std::uniform_int_distribution<int> d(0, 9);
        int ns = 2 + trial % 2, nt = 2 + (trial / 2) % 2;
        std::set<int> used;
        while (static_cast<int>(s.size()) < ns) {
            int v = d(rng);
            if (used.insert(v).second) s.push_back(v);
        }
        while (static_cast<int>(t.size()) < nt) {
            int v = d(rng);
            if (used.insert(v).second) t.push_back(v);
        }
        auto r = two_disjoint_paths(g, s, t);
        if (auto* pp = std::get_if<PathPair>(&r)) {
            CHECK(valid_path(g, pp->first));
            CHECK(valid_path(g, pp->second));
            std::set<int> a(pp->first.begin(), pp->first.end());
            for (Vertex v : pp->second) CHECK(a.count(v) == 0);
            for (auto* p : {&pp->first, &pp->second}) {
                CHECK(std::count(s.begin(), s.end(), p->front()) == 1);
                CHECK(std::count(t.begin(), t.end(), p->back()) == 1);
            }
        } else {
            auto np = std::get<NoPaths>(r);
            REQUIRE(np.cut.has_value());
            CHECK(separates(g, *np.cut, s, t));
        }
    }
}
