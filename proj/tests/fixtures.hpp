#pragma once

// Planted instances shared by the unit tests and the acceptance runner.

#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "oddminor/odd.hpp"

namespace fx {

using namespace oddminor;

inline WallFixture even_wall(int k) { return subdivided_wall(k, std::vector<int>(elementary(k).graph.m(), 2)); }

// g plus a new path of len edges from a to b; its vertices go to *path
inline Graph with_path(const Graph& g, Vertex a, Vertex b, int len, std::vector<Vertex>* path) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto& e : g.edges()) es.push_back({e.u, e.v});
    int n = g.n();
    std::vector<Vertex> p{a};
    for (int i = 1; i < len; ++i) p.push_back(n++);
    p.push_back(b);
    for (size_t i = 1; i < p.size(); ++i) es.push_back({p[i - 1], p[i]});
    if (path) *path = p;
    return Graph(n, es);
}

struct Planted {
    Graph graph;
    Wall wall;
    std::vector<Vertex> ear;
};

// evenly subdivided wall with an odd ear between perimeter positions i and j
inline Planted planted_spb(int order, int i, int j, int extra = 0) {
    auto f = even_wall(order);
    auto per = wall_perimeter(f.wall);
    Vertex a = per[i % per.size()], b = per[j % per.size()];
    auto vs = wall_vertices(f.wall);
    auto col = wall_colouring(f.wall);
    auto c = [&](Vertex v) { return col[std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()]; };
    int len = c(a) == c(b) ? 3 : 2;
    Planted p;
    p.graph = with_path(f.graph, a, b, len + 2 * extra, &p.ear);
    p.wall = f.wall;
    return p;
}

struct PlantedCross {
    Graph graph;
    CrossWall cw;
    std::vector<Vertex> q;  // extra ear between the cross ears, when planted
};

// evenly subdivided wall with ears of the given lengths across opposite corners; q_len > 0
// adds a path of that length between vertex q1 of ear1 and vertex q2 of ear2
inline PlantedCross planted_cross(int order, int len1, int len2, int q_len = 0, int q1 = 1, int q2 = 1) {
    auto f = even_wall(order);
    auto c = wall_corners(f.wall);
    PlantedCross p;
    p.cw.wall = f.wall;
    Graph g = with_path(f.graph, c[0], c[2], len1, &p.cw.ear1);
    g = with_path(g, c[1], c[3], len2, &p.cw.ear2);
    if (q_len > 0) g = with_path(g, p.cw.ear1[q1], p.cw.ear2[q2], q_len, &p.q);
    p.graph = g;
    return p;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
    return Graph(g.n(), es);
}

// 2-connected bipartite h inside a 2-connected non-bipartite g, random labels
struct EarFixture {
    Graph g;
    HostSubgraph h;
};

inline std::optional<EarFixture> random_ear_fixture(std::mt19937_64& rng) {
    int half = 2 + rng() % 4;
    int n = 2 * half;
    std::vector<std::pair<Vertex, Vertex>> hes;
    for (int i = 0; i < n; ++i) hes.push_back({i, (i + 1) % n});
    for (int t = 0; t < 2; ++t) {
        Vertex a = rng() % n, b = rng() % n;
        if ((a + b) % 2 == 1 && a != b) hes.push_back({a, b});
    }
    int extra = rng() % 5;
    int total = n + extra;
    std::vector<std::pair<Vertex, Vertex>> ges = hes;
    for (int v = n; v < total; ++v) {
        ges.push_back({v, static_cast<Vertex>(rng() % v)});
        ges.push_back({v, static_cast<Vertex>(rng() % v)});
    }
    for (int t = 0; t < 3; ++t) {
        Vertex a = rng() % total, b = rng() % total;
        if (a != b) ges.push_back({a, b});
    }
    Graph g(total, ges);
    if (is_bipartite(g)) return std::nullopt;
    auto bl = biconnected_components(g);
    if (bl.vertices.size() != 1) return std::nullopt;
    std::vector<Vertex> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EarFixture f;
    f.g = relabel(g, perm);
    Graph h(total, hes);
    f.h = host_subgraph(relabel(h, perm));
    return f;
}

// one invariant-breaking change; kind in 0..4
inline void mutate(std::mt19937_64& rng, const Graph& g, OddExpansion& e, int kind) {
    const int pe = static_cast<int>(rng() % e.pattern.m());
    if (kind == 0) {
        // flip the colour of one image end
        Vertex a = e.edge_images[pe].first;
        e.witness[a] = 3 - e.witness[a];
    } else if (kind == 1) {
        // image end replaced by a vertex of the same set not adjacent to the other end
        auto& [a, b] = e.edge_images[pe];
        for (Vertex x : e.branch[e.pattern.edge(pe).u])
            if (!g.has_edge(x, b)) {
                a = x;
                break;
            }
        if (g.has_edge(a, b)) a = b;
    } else if (kind == 2) {
        // a vertex in two sets
        Vertex u = e.pattern.edge(pe).u, v = e.pattern.edge(pe).v;
        e.branch[u].push_back(e.branch[v][0]);
        std::sort(e.branch[u].begin(), e.branch[u].end());
    } else if (kind == 3) {
        e.witness.erase(e.branch[rng() % e.branch.size()][0]);
    } else {
        e.branch[e.pattern.edge(pe).v].clear();
    }
}

}  // namespace fx
