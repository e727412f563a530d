#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"

#include <set>

#include "oddminor/odd.hpp"

using namespace oddminor;

namespace {

// all witnesses by enumeration; conditions checked from scratch
bool witness_ok(const Graph& g, const OddExpansion& e, const std::map<Vertex, int>& c) {
    for (auto& b : e.branch) {
        // bichromatic edges must connect the set
        std::map<Vertex, Vertex> rep;
        for (Vertex x : b) rep[x] = x;
        std::function<Vertex(Vertex)> f = [&](Vertex x) { return rep[x] == x ? x : rep[x] = f(rep[x]); };
        for (Vertex x : b)
            for (Vertex y : b)
                if (x < y && g.has_edge(x, y) && c.at(x) != c.at(y)) rep[f(x)] = f(y);
        for (Vertex x : b)
            if (f(x) != f(b[0])) return false;
    }
    for (auto [a, b] : e.edge_images)
        if (c.at(a) != c.at(b)) return false;
    return true;
}

std::optional<std::map<Vertex, int>> brute_witness(const Graph& g, const OddExpansion& e) {
    std::vector<Vertex> vs;
    for (auto& b : e.branch) vs.insert(vs.end(), b.begin(), b.end());
    for (unsigned m = 0; m < (1u << vs.size()); ++m) {
        std::map<Vertex, int> c;
        for (size_t i = 0; i < vs.size(); ++i) c[vs[i]] = 1 + (m >> i & 1);
        if (witness_ok(g, e, c)) return c;
    }
    return std::nullopt;
}

// random expansion: grow connected sets in a random connected graph, keep some quotient edges
OddExpansion random_expansion(std::mt19937_64& rng, const Graph& g, int parts) {
    std::vector<int> own(g.n(), -1);
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    OddExpansion e;
    for (int p = 0; p < parts && p < g.n(); ++p) own[order[p]] = p;
    bool grew = true;
    while (grew) {
        grew = false;
        for (Vertex v : order) {
            if (own[v] >= 0) continue;
            for (Vertex y : g.neighbors(v))
                if (own[y] >= 0 && rng() % 2) {
                    own[v] = own[y];
                    grew = true;
                    break;
                }
        }
    }
    int np = std::min(parts, g.n());
    e.branch.assign(np, {});
    for (Vertex v = 0; v < g.n(); ++v)
        if (own[v] >= 0) e.branch[own[v]].push_back(v);
    std::map<std::pair<int, int>, std::pair<Vertex, Vertex>> q;
    for (auto& ed : g.edges()) {
        int a = own[ed.u], b = own[ed.v];
        if (a < 0 || b < 0 || a == b) continue;
        if (a > b) q[{b, a}] = {ed.v, ed.u};
        else q[{a, b}] = {ed.u, ed.v};
    }
    std::vector<std::pair<Vertex, Vertex>> pes;
    for (auto& [k, img] : q)
        if (rng() % 4) pes.push_back(k);
    e.pattern = Graph(np, pes);
    for (auto& ed : e.pattern.edges()) e.edge_images.push_back(q.at({ed.u, ed.v}));
    return e;
}

bool induces_trees(const Graph& g, const OddExpansion& e) {
    for (auto& b : e.branch) {
        int m = 0;
        for (Vertex x : b)
            for (Vertex y : b)
                if (x < y && g.has_edge(x, y)) ++m;
        if (m != static_cast<int>(b.size()) - 1) return false;
    }
    return true;
}

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Io;  // nothing thrown
}

}  // namespace

TEST_CASE("verify_odd_expansion examples") {
    Graph p2 = th::path(2);
    OddExpansion e;
    e.pattern = th::path(2);
    e.branch = {{0}, {1}};
    e.edge_images = {{0, 1}};
    e.witness = {{0, 2}, {1, 2}};
    CHECK_FALSE(verify_odd_expansion(p2, e).has_value());
    e.witness[1] = 1;
    CHECK(verify_odd_expansion(p2, e)->condition == 5);

    // branch tree {0,1}, witness flipped inside it
    Graph p3 = th::path(3);
    OddExpansion t;
    t.pattern = th::path(2);
    t.branch = {{0, 1}, {2}};
    t.edge_images = {{1, 2}};
    t.witness = {{0, 1}, {1, 2}, {2, 2}};
    CHECK_FALSE(verify_odd_expansion(p3, t).has_value());
    t.witness[0] = 2;
    CHECK(verify_odd_expansion(p3, t)->condition == 3);

    // triangle in C5
    Graph c5 = th::cycle(5);
    OddExpansion k3;
    k3.pattern = th::cycle(3);
    k3.branch = {{0}, {1}, {2, 3, 4}};
    for (auto& ed : k3.pattern.edges()) {
        if (ed.u == 0 && ed.v == 1) k3.edge_images.push_back({0, 1});
        if (ed.u == 0 && ed.v == 2) k3.edge_images.push_back({0, 4});
        if (ed.u == 1 && ed.v == 2) k3.edge_images.push_back({1, 2});
    }
    int valid = 0;
    for (unsigned m = 0; m < 32; ++m) {
        for (Vertex v = 0; v < 5; ++v) k3.witness[v] = 1 + (m >> v & 1);
        bool ok = !verify_odd_expansion(c5, k3);
        CHECK(ok == witness_ok(c5, k3, k3.witness));
        valid += ok;
    }
    CHECK(valid > 0);
    auto w = derive_witness(c5, k3);
    REQUIRE(w.has_value());
    k3.witness = *w;
    CHECK_FALSE(verify_odd_expansion(c5, k3).has_value());
    CHECK(w->at(0) == 1);

    // shape problems
    OddExpansion s = e;
    s.branch.pop_back();
    CHECK(verify_odd_expansion(p2, s)->condition == 0);
    s = e;
    s.branch = {{0}, {0}};
    CHECK(verify_odd_expansion(p2, s)->condition == 1);
    s = t;
    s.branch = {{0, 2}, {1}};
    s.edge_images = {{0, 1}};
    CHECK(verify_odd_expansion(p3, s)->condition == 2);
    s = e;
    s.witness.erase(0);
    CHECK(verify_odd_expansion(p2, s)->condition == 6);
}

TEST_CASE("derive_witness against witness enumeration") {
    std::mt19937_64 rng(71);
    int tree_cases = 0, found = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = th::random_connected(rng, 3 + trial % 8, 0.35);
        auto e = random_expansion(rng, g, 2 + trial % 4);
        REQUIRE_FALSE(validate_expansion(g, e).has_value());
        auto d = derive_witness(g, e);
        auto b = brute_witness(g, e);
        if (d) {
            OddExpansion c = e;
            c.witness = *d;
            CHECK_FALSE(verify_odd_expansion(g, c).has_value());
            CHECK(b.has_value());
            ++found;
        }
        if (induces_trees(g, e)) {
            ++tree_cases;
            CHECK(d.has_value() == b.has_value());
        }
        if (!b) CHECK_FALSE(d.has_value());
    }
    CHECK(tree_cases > 100);
    CHECK(found > 50);
}

TEST_CASE("bipartite hosts only carry bipartite patterns") {
    std::mt19937_64 rng(73);
    int verified = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = th::random_bipartite(rng, 2 + trial % 4, 2 + trial % 3, 0.6, true);
        auto e = random_expansion(rng, g, 3 + trial % 3);
        if (auto b = brute_witness(g, e)) {
            e.witness = *b;
            REQUIRE_FALSE(verify_odd_expansion(g, e).has_value());
            CHECK(pattern_is_bipartite(e));
            ++verified;
        }
    }
    CHECK(verified > 100);
}

TEST_CASE("canonical witness puts colour 1 on the lowest vertex") {
    Graph c6 = th::cycle(6);
    OddExpansion e = identity_expansion(Generated{c6, {}, {}, {}}, "cycle", {6});
    auto w = derive_witness(c6, e);
    REQUIRE(w.has_value());
    CHECK(w->at(0) == 1);
    std::map<Vertex, int> flipped = *w;
    for (auto& [x, c] : flipped) c = 3 - c;
    CHECK(canonical_witness(c6, e, flipped) == *w);
}

TEST_CASE("find_odd_ear examples") {
    // C4 a,b,c,d plus e on a and b
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
    HostSubgraph h = host_subgraph(th::cycle(4));
    auto ear = find_odd_ear(g, h);
    auto p = ear.path;
    if (p.front() > p.back()) std::reverse(p.begin(), p.end());
    CHECK(p == std::vector<Vertex>{0, 4, 1});
    CHECK_FALSE(validate_odd_ear(g, h, ear.path).has_value());

    // a chord across C6 between antipodes keeps it bipartite
    Graph anti(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    CHECK(is_bipartite(anti));
    CHECK(kind_of([&] { find_odd_ear(anti, host_subgraph(th::cycle(6))); }) == ErrorKind::PreconditionViolated);
    // a chord between vertices at distance two is the odd ear
    Graph near(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}});
    auto e2 = find_odd_ear(near, host_subgraph(th::cycle(6)));
    auto q = e2.path;
    std::sort(q.begin(), q.end());
    CHECK(q == std::vector<Vertex>{0, 2});

    // odd cycle touching h in one vertex: two disjoint paths back
    Graph far(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 4}, {6, 7}, {7, 2}, {5, 8}, {8, 1}});
    auto e3 = find_odd_ear(far, host_subgraph(th::cycle(4)));
    CHECK_FALSE(validate_odd_ear(far, host_subgraph(th::cycle(4)), e3.path).has_value());

    // preconditions
    CHECK(kind_of([&] { find_odd_ear(th::cycle(5), host_subgraph(th::path(3))); }) == ErrorKind::PreconditionViolated);
    CHECK(kind_of([&] { find_odd_ear(th::complete(4), host_subgraph(th::cycle(3))); }) == ErrorKind::PreconditionViolated);
    CHECK(kind_of([&] { find_odd_ear(th::bowtie(), host_subgraph(Graph(5, {{0, 1}, {1, 2}, {2, 0}}))); }) ==
          ErrorKind::PreconditionViolated);
}

TEST_CASE("find_odd_ear on a planted wall") {
    for (auto [i, j] : {std::pair{0, 7}, std::pair{3, 20}, std::pair{5, 6}}) {
        auto pl = fx::planted_spb(4, i, j);
        HostSubgraph h = wall_subgraph(pl.wall);
        auto ear = find_odd_ear(pl.graph, h);
        CHECK_FALSE(validate_odd_ear(pl.graph, h, ear.path).has_value());
    }
}

TEST_CASE("find_odd_ear invariant replay on random fixtures") {
    std::mt19937_64 rng(75);
    int done = 0;
    while (done < 200) {
        auto f = fx::random_ear_fixture(rng);
        if (!f) continue;
        ++done;
        auto ear = find_odd_ear(f->g, f->h);
        auto v = validate_odd_ear(f->g, f->h, ear.path);
        CHECK_FALSE(v.has_value());
        // union non-bipartite, checked directly
        CHECK_FALSE(is_bipartite(as_graph(union_of(f->h, {ear.path})).graph));
    }
}

TEST_CASE("oddify_bipartite_expansion examples") {
    // P2 inside P4, one branch set an edge
    OddExpansion e;
    e.pattern = th::path(2);
    e.branch = {{0, 1}, {2, 3}};
    e.edge_images = {{1, 2}};
    auto r = oddify_bipartite_expansion(th::path(4), e);
    CHECK_FALSE(verify_odd_expansion(th::path(4), r).has_value());

    // C4 inside grid(3,3) along the outer ring
    Generated g33 = grid(3, 3);
    OddExpansion c4;
    c4.pattern = th::cycle(4);
    c4.branch = {{g33.at(1, 1), g33.at(1, 2)}, {g33.at(1, 3), g33.at(2, 3)}, {g33.at(3, 3), g33.at(3, 2)},
                 {g33.at(3, 1), g33.at(2, 1)}};
    for (auto& b : c4.branch) std::sort(b.begin(), b.end());
    for (auto& ed : c4.pattern.edges()) {
        Vertex a = -1, b = -1;
        for (Vertex x : c4.branch[ed.u])
            for (Vertex y : c4.branch[ed.v])
                if (g33.graph.has_edge(x, y)) a = x, b = y;
        c4.edge_images.push_back({a, b});
    }
    auto rc = oddify_bipartite_expansion(g33.graph, c4);
    CHECK_FALSE(verify_odd_expansion(g33.graph, rc).has_value());
    CHECK(pattern_is_bipartite(rc));

    // identity on C6: single-vertex branch sets and monochromatic images force one colour
    Graph c6 = th::cycle(6);
    auto id = oddify_bipartite_expansion(c6, identity_expansion(Generated{c6, {}, {}, {}}, "cycle", {6}));
    for (Vertex v = 0; v < 6; ++v) CHECK(id.witness.at(v) == 1);

    CHECK(kind_of([&] { oddify_bipartite_expansion(th::cycle(5), e); }) == ErrorKind::NotBipartite);
    OddExpansion k3 = identity_expansion(Generated{th::cycle(3), {}, {}, {}}, "cycle", {3});
    CHECK(kind_of([&] { oddify_bipartite_expansion(th::complete(4), k3); }) == ErrorKind::NotBipartite);
}

TEST_CASE("even subdivisions contract to odd expansions") {
    std::mt19937_64 rng(77);
    for (const Graph& h : {th::cycle(4), grid(2, 3).graph}) {
        for (int trial = 0; trial < 20; ++trial) {
            // every edge subdivided an even number of times
            std::vector<std::pair<Vertex, Vertex>> es;
            int n = h.n();
            OddExpansion e;
            e.pattern = h;
            e.branch.assign(h.n(), {});
            for (Vertex v = 0; v < h.n(); ++v) e.branch[v].push_back(v);
            for (auto& ed : h.edges()) {
                int inner = 2 * static_cast<int>(rng() % 3);
                std::vector<Vertex> p{ed.u};
                for (int i = 0; i < inner; ++i) p.push_back(n++);
                p.push_back(ed.v);
                for (size_t i = 1; i < p.size(); ++i) es.push_back({p[i - 1], p[i]});
                // interior goes to the first end, the last edge is the image
                for (size_t i = 1; i + 1 < p.size(); ++i) e.branch[ed.u].push_back(p[i]);
                e.edge_images.push_back({p[p.size() - 2], p.back()});
            }
            for (auto& b : e.branch) std::sort(b.begin(), b.end());
            Graph g(n, es);
            REQUIRE(is_bipartite(g));
            auto r = oddify_bipartite_expansion(g, e);
            CHECK_FALSE(verify_odd_expansion(g, r).has_value());
        }
    }
}

TEST_CASE("mutated certificates are rejected") {
    std::mt19937_64 rng(79);
    std::vector<std::pair<Graph, OddExpansion>> base;
    Generated s2 = spb_grid(2);
    OddExpansion se = identity_expansion(s2, "spb", {2});
    se.witness = *derive_witness(s2.graph, se);
    base.push_back({s2.graph, se});
    auto pl = fx::planted_spb(11, 2, 9);
    auto ear = find_odd_ear(pl.graph, wall_subgraph(pl.wall));
    auto ex = build_odd_spb_expansion(pl.graph, pl.wall, ear, 2);
    base.push_back({pl.graph, ex});
    for (auto& [g, e] : base) REQUIRE_FALSE(verify_odd_expansion(g, e).has_value());
    for (int trial = 0; trial < 200; ++trial) {
        auto& [g, e0] = base[trial % base.size()];
        OddExpansion e = e0;
        fx::mutate(rng, g, e, trial % 5);
        CHECK(verify_odd_expansion(g, e).has_value());
    }
}

TEST_CASE("build_odd_spb_expansion on planted walls") {
    for (auto [i, j, extra] : {std::array{0, 5, 0}, std::array{3, 30, 1}, std::array{10, 11, 0}, std::array{40, 2, 2}}) {
        auto pl = fx::planted_spb(11, i, j, extra);
        HostSubgraph h = wall_subgraph(pl.wall);
        EarCertificate ear{pl.ear, h};
        REQUIRE_FALSE(validate_odd_ear(pl.graph, h, pl.ear).has_value());
        auto ex = build_odd_spb_expansion(pl.graph, pl.wall, ear, 2);
        CHECK_FALSE(verify_odd_expansion(pl.graph, ex).has_value());
        CHECK(ex.pattern.edges() == spb_grid(2).graph.edges());
        // local: only wall and ear vertices
        std::set<Vertex> allowed(h.vertices.begin(), h.vertices.end());
        allowed.insert(pl.ear.begin(), pl.ear.end());
        for (auto& b : ex.branch)
            for (Vertex x : b) CHECK(allowed.count(x));
        // the wall alone is bipartite, so the ear interior has to be used
        bool uses = false;
        for (auto& b : ex.branch)
            for (Vertex x : b) uses |= std::find(pl.ear.begin() + 1, pl.ear.end() - 1, x) != pl.ear.end() - 1;
        CHECK(uses);
    }
}

TEST_CASE("build_odd_spb_expansion preconditions") {
    auto pl = fx::planted_spb(11, 0, 5);
    HostSubgraph h = wall_subgraph(pl.wall);
    // even ear: same ends, one more edge
    std::vector<Vertex> ep;
    Graph ge = fx::with_path(pl.graph, pl.ear.front(), pl.ear.back(), static_cast<int>(pl.ear.size()), &ep);
    CHECK(kind_of([&] { build_odd_spb_expansion(ge, pl.wall, EarCertificate{ep, h}, 2); }) ==
          ErrorKind::PreconditionViolated);
    // ear into the middle of the wall
    auto vs = wall_vertices(pl.wall);
    auto per = wall_perimeter(pl.wall);
    Vertex mid = pl.wall.branch[elementary(11).at(6, 11)];
    std::vector<Vertex> ip;
    Graph gi = fx::with_path(pl.graph, per[0], mid, 3, &ip);
    CHECK(kind_of([&] { build_odd_spb_expansion(gi, pl.wall, EarCertificate{ip, h}, 2); }) == ErrorKind::EarNotOnPerimeter);
    // unclean wall
    auto lengths = std::vector<int>(elementary(11).graph.m(), 2);
    lengths[40] = 3;
    auto uw = subdivided_wall(11, lengths);
    auto uper = wall_perimeter(uw.wall);
    std::vector<Vertex> up;
    Graph gu = fx::with_path(uw.graph, uper[0], uper[5], 3, &up);
    CHECK(kind_of([&] { build_odd_spb_expansion(gu, uw.wall, EarCertificate{up, wall_subgraph(uw.wall)}, 2); }) ==
          ErrorKind::NotClean);
    // order below the threshold
    auto small = fx::planted_spb(10, 0, 5);
    CHECK(kind_of([&] {
              build_odd_spb_expansion(small.graph, small.wall, EarCertificate{small.ear, wall_subgraph(small.wall)}, 2);
          }) == ErrorKind::OrderTooSmall);
}

TEST_CASE("detect_spb examples") {
    auto pl = fx::planted_spb(11, 2, 17);
    auto r = detect_spb(pl.graph, 2);
    REQUIRE(std::holds_alternative<OddExpansion>(r));
    CHECK_FALSE(verify_odd_expansion(pl.graph, std::get<OddExpansion>(r)).has_value());

    auto c6 = detect_spb(th::cycle(6), 2);
    REQUIRE(std::holds_alternative<StructureReport>(c6));
    auto& rep = std::get<StructureReport>(c6);
    REQUIRE(rep.blocks.size() == 1);
    CHECK(rep.blocks[0].status == "bipartite");
    CHECK_FALSE(validate_decomposition(th::cycle(6), rep.decomposition).has_value());
    CHECK(blind_width(th::cycle(6), rep.decomposition, BlindClass::B) == 0);

    std::mt19937_64 rng(81);
    Graph tree = th::random_tree(rng, 12);
    auto tr = std::get<StructureReport>(detect_spb(tree, 2));
    CHECK(tr.blocks.size() == 11);
    for (auto& b : tr.blocks) CHECK(b.status == "bipartite");
    CHECK_FALSE(validate_decomposition(tree, tr.decomposition).has_value());

    auto k5 = std::get<StructureReport>(detect_spb(th::complete(5), 2));
    REQUIRE(k5.blocks.size() == 1);
    CHECK(k5.blocks[0].status == "treewidth");
    CHECK(k5.blocks[0].width == 4);

    // threads give the same answer
    DetectOptions o;
    o.threads = 3;
    auto r3 = detect_spb(pl.graph, 2, o);
    REQUIRE(std::holds_alternative<OddExpansion>(r3));
    CHECK(std::get<OddExpansion>(r3).branch == std::get<OddExpansion>(r).branch);
}

TEST_CASE("detect_spb finds plain copies in small blocks") {
    for (int k : {2, 3}) {
        Generated s = spb_grid(k);
        auto r = detect_spb(s.graph, k);
        REQUIRE(std::holds_alternative<OddExpansion>(r));
        auto& e = std::get<OddExpansion>(r);
        CHECK_FALSE(verify_odd_expansion(s.graph, e).has_value());
        CHECK(e.pattern.edges() == s.graph.edges());
        CHECK(e.params == std::vector<int>{k});
    }
    // relabelled copy plus a pendant triangle
    std::mt19937_64 rng(14);
    Generated s = spb_grid(2);
    std::vector<int> p(16);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto& e : s.graph.edges()) es.push_back({p[e.u], p[e.v]});
    es.insert(es.end(), {{3, 16}, {16, 17}, {17, 3}});
    Graph g(18, es);
    auto r = detect_spb(g, 2);
    REQUIRE(std::holds_alternative<OddExpansion>(r));
    CHECK_FALSE(verify_odd_expansion(g, std::get<OddExpansion>(r)).has_value());
    // without the parity edge the copy is gone (the grid is bipartite)
    Graph plain = grid(4, 4).graph;
    CHECK(std::holds_alternative<StructureReport>(detect_spb(plain, 2)));
}

TEST_CASE("decide_blind_structure examples") {
    // C6 and K4 sharing vertex 0
    Graph g(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {0, 7}, {0, 8}, {6, 7}, {6, 8}, {7, 8}});
    DetectOptions o;
    o.cutoff = 3;
    auto d = decide_blind_structure(g, 2, BlindClass::B, o);
    CHECK(d.kind == BlindDecision::Kind::Decomposition);
    CHECK_FALSE(validate_decomposition(g, d.report.decomposition).has_value());
    CHECK(blind_width(g, d.report.decomposition, BlindClass::B) <= 4);

    auto pl = fx::planted_spb(11, 2, 17);
    auto dp = decide_blind_structure(pl.graph, 2, BlindClass::B);
    REQUIRE(dp.kind == BlindDecision::Kind::Expansion);
    CHECK_FALSE(verify_odd_expansion(pl.graph, *dp.expansion).has_value());

    // a big planar non-bipartite block
    Generated gr = grid(12, 12);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto& e : gr.graph.edges()) es.push_back({e.u, e.v});
    es.push_back({gr.at(1, 1), gr.at(2, 2)});
    Graph big(gr.graph.n(), es);
    auto db = decide_blind_structure(big, 2, BlindClass::BP);
    CHECK(db.kind == BlindDecision::Kind::Decomposition);
    REQUIRE(db.report.blocks.size() == 1);
    CHECK(db.report.blocks[0].status == "planar");
    CHECK(blind_width(big, db.report.decomposition, BlindClass::BP) == 0);

    // K8 block with a tight cutoff and no wall: undecided, block named
    DetectOptions tight;
    tight.cutoff = 2;
    auto du = decide_blind_structure(th::complete(8), 2, BlindClass::B, tight);
    CHECK(du.kind == BlindDecision::Kind::Undecided);
    CHECK(du.blocking.size() == 8);
}

TEST_CASE("find_cross_wall on single-crossing grids") {
    Generated u = single_crossing_grid(8);
    auto hint = identity_expansion(u, "cross", {8});
    auto cw = find_cross_wall(u.graph, hint, 3);
    CHECK_FALSE(validate_cross_wall(u.graph, cw).has_value());
    CHECK(cw.wall.order == 3);
    CHECK(is_clean(cw.wall));
    std::set<Vertex> a(cw.ear1.begin(), cw.ear1.end());
    for (Vertex v : cw.ear2) CHECK_FALSE(a.count(v));
    CHECK(kind_of([&] { find_cross_wall(u.graph, hint, 4); }) == ErrorKind::OrderTooSmall);
    // a hint through larger branch sets: every grid vertex gets a pendant twin
    Generated u5 = single_crossing_grid(6);
    std::vector<std::pair<Vertex, Vertex>> es;
    const int n = u5.graph.n();
    OddExpansion h2;
    h2.pattern = u5.graph;
    for (Vertex v = 0; v < n; ++v) {
        es.push_back({v, v + n});
        h2.branch.push_back({v, v + n});
    }
    for (auto& e : u5.graph.edges()) {
        es.push_back({e.u + n, e.v + n});
        h2.edge_images.push_back({e.u + n, e.v + n});
    }
    Graph g2(2 * n, es);
    auto cw2 = find_cross_wall(g2, h2, 2);
    CHECK_FALSE(validate_cross_wall(g2, cw2).has_value());
    // wrong hint pattern
    CHECK(kind_of([&] { find_cross_wall(grid(4, 4).graph, identity_expansion(grid(4, 4), "grid", {4, 4}), 2); }) ==
          ErrorKind::BadParameter);
}

TEST_CASE("build_odd_spc_expansion index follows the ear parities") {
    struct Case {
        int l1, l2, q, q1, q2, index;
    };
    for (auto c : {Case{3, 3, 0, 0, 0, 1}, Case{3, 2, 0, 0, 0, 2}, Case{4, 5, 0, 0, 0, 2}, Case{4, 4, 2, 1, 2, 3},
                   Case{4, 4, 1, 1, 1, 3}, Case{6, 4, 3, 1, 1, 3}}) {
        auto pc = fx::planted_cross(9, c.l1, c.l2, c.q, c.q1, c.q2);
        REQUIRE_FALSE(validate_cross_wall(pc.graph, pc.cw).has_value());
        auto ex = build_odd_spc_expansion(pc.graph, pc.cw, 2);
        CHECK_FALSE(verify_odd_expansion(pc.graph, ex).has_value());
        CHECK(ex.params == std::vector<int>{c.index, 2});
        CHECK(ex.pattern.edges() == parity_crossing_grid(c.index, 2).graph.edges());
    }
    // the odd ear with both ends on one cross ear: that ear is replaced, index 2
    auto one = fx::planted_cross(9, 6, 4);
    std::vector<Vertex> qp;
    Graph g1 = fx::with_path(one.graph, one.cw.ear1[1], one.cw.ear1[3], 1, &qp);
    auto ex1 = build_odd_spc_expansion(g1, one.cw, 2);
    CHECK_FALSE(verify_odd_expansion(g1, ex1).has_value());
    CHECK(ex1.params[0] == 2);

    auto bip = fx::planted_cross(9, 4, 4);
    CHECK(kind_of([&] { build_odd_spc_expansion(bip.graph, bip.cw, 2); }) == ErrorKind::BipartiteHost);
    CrossWall broken = bip.cw;
    std::swap(broken.ear2.front(), broken.ear2.back());
    CHECK(validate_cross_wall(bip.graph, broken).has_value());
}
