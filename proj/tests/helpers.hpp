#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "oddminor/graph.hpp"

namespace th {

using namespace oddminor;

inline Graph from_edges(int n, std::vector<std::pair<int, int>> es) { return Graph(n, es); }

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph(n, es);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, es);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

// two triangles sharing vertex 0
inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.push_back({i, j});
    return Graph(n, es);
}

inline Graph random_connected(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::set<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) {
        int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
        es.insert({j, i});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.insert({i, j});
    return Graph(n, {es.begin(), es.end()});
}

inline Graph random_tree(std::mt19937_64& rng, int n) { return random_connected(rng, n, 0.0); }

inline Graph random_bipartite(std::mt19937_64& rng, int a, int b, double p, bool connected = false) {
    std::bernoulli_distribution coin(p);
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (coin(rng)) es.insert({i, a + j});
    if (connected) {
        // chain everything through alternate sides
        for (int j = 0; j < b; ++j) es.insert({j % std::max(a, 1), a + j});
        for (int i = 0; i < a && b > 0; ++i) es.insert({i, a + i % b});
    }
    return Graph(a + b, {es.begin(), es.end()});
}

// glue blocks along single vertices: each new block shares one vertex with what exists
struct Glued {
    Graph g;
    int blocks = 0;
};

inline Glued random_glued(std::mt19937_64& rng, int max_n, int max_bip, int max_odd) {
    std::vector<std::pair<int, int>> es;
    int n = 1;
    int blocks = 0;
    std::uniform_int_distribution<int> kind(0, 3);
    while (true) {
        int k = kind(rng);
        int size;
        std::vector<std::pair<int, int>> local;
        if (k == 0) {  // bipartite block
            int a = std::uniform_int_distribution<int>(1, std::max(1, max_bip / 2))(rng);
            int b = std::uniform_int_distribution<int>(1, std::max(1, max_bip / 2))(rng);
            Graph h = random_bipartite(rng, a, b, 0.5, true);
            size = h.n();
            for (auto& e : h.edges()) local.push_back({e.u, e.v});
        } else if (k == 1) {  // even or odd cycle
            size = std::uniform_int_distribution<int>(3, std::max(3, max_bip))(rng);
            for (int i = 0; i < size; ++i) local.push_back({i, (i + 1) % size});
        } else if (k == 2) {  // dense small block
            size = std::uniform_int_distribution<int>(2, std::max(2, max_odd))(rng);
            Graph h = random_connected(rng, size, 0.5);
            for (auto& e : h.edges()) local.push_back({e.u, e.v});
        } else {  // bridge
            size = 2;
            local.push_back({0, 1});
        }
        if (n + size - 1 > max_n) break;
        int anchor = std::uniform_int_distribution<int>(0, n - 1)(rng);
        auto map = [&](int v) { return v == 0 ? anchor : n + v - 1; };
        for (auto [u, v] : local) es.push_back({map(u), map(v)});
        n += size - 1;
        ++blocks;
        if (blocks > 12) break;
    }
    // shuffle ids so block structure does not follow id order
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : es) u = perm[u], v = perm[v];
    return {Graph(n, es), blocks};
}

inline std::vector<Weight> random_weights(std::mt19937_64& rng, int count, int hi) {
    std::uniform_int_distribution<int> d(0, hi);
    std::vector<Weight> w(count);
    for (auto& x : w) x = d(rng);
    return w;
}

// independent oracle: an odd cycle meeting x at least twice, found by listing simple cycles
inline bool odd_cycle_meets_twice(const Graph& g, const std::vector<Vertex>& x) {
    std::vector<char> inx(g.n(), 0);
    for (Vertex v : x) inx[v] = 1;
    std::vector<Vertex> path;
    std::vector<char> on(g.n(), 0);
    bool hit = false;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex v) {
        for (Vertex w : g.neighbors(v)) {
            if (hit) return;
            if (w == s && path.size() >= 3 && path.size() % 2 == 1) {
                int c = 0;
                for (Vertex p : path) c += inx[p];
                if (c >= 2) hit = true;
            }
            if (w <= s || on[w]) continue;
            on[w] = 1;
            path.push_back(w);
            dfs(s, w);
            path.pop_back();
            on[w] = 0;
        }
    };
    for (Vertex s = 0; s < g.n() && !hit; ++s) {
        path = {s};
        on[s] = 1;
        dfs(s, s);
        on[s] = 0;
    }
    return hit;
}

// simple odd cycle through both u and v, by a pruned path search from u: the open end must
// still reach v (until v is passed) and u through unused vertices
inline std::vector<Vertex> odd_cycle_through(const Graph& g, Vertex u, Vertex v) {
    std::vector<Vertex> path{u};
    std::vector<char> on(g.n(), 0);
    on[u] = 1;
    bool seen_v = u == v;
    auto reaches = [&](Vertex from) {
        std::vector<char> r(g.n(), 0);
        std::vector<Vertex> st{from};
        r[from] = 1;
        bool to_v = seen_v, to_u = false;
        while (!st.empty()) {
            Vertex x = st.back();
            st.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (y == u && x != from) to_u = true;
                if (y == u && x == from && path.size() >= 3) to_u = true;
                if (on[y] || r[y]) continue;
                r[y] = 1;
                to_v |= y == v;
                st.push_back(y);
            }
        }
        return to_v && to_u;
    };
    std::function<bool()> dfs = [&]() -> bool {
        Vertex end = path.back();
        for (Vertex w : g.neighbors(end)) {
            if (w == u && seen_v && path.size() >= 3 && path.size() % 2 == 1) return true;
            if (on[w]) continue;
            on[w] = 1;
            path.push_back(w);
            bool was = seen_v;
            seen_v |= w == v;
            if (reaches(w) && dfs()) return true;
            seen_v = was;
            path.pop_back();
            on[w] = 0;
        }
        return false;
    };
    if (dfs()) return path;
    return {};
}

}  // namespace th
