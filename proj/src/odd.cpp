#include "oddminor/odd.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <set>
#include <thread>

#include "flow.hpp"
#include "oddminor/treewidth.hpp"

namespace oddminor {

namespace {

Violation bad(int c, std::string msg, std::vector<int> wit = {}) { return Violation{c, std::move(wit), std::move(msg)}; }

std::string vname(Vertex v) { return std::to_string(v); }

bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

// owner[x] = pattern vertex whose branch set holds x, -1 elsewhere
std::vector<int> owners(const Graph& g, const OddExpansion& e) {
    std::vector<int> own(g.n(), -1);
    for (int v = 0; v < static_cast<int>(e.branch.size()); ++v)
        for (Vertex x : e.branch[v]) own[x] = v;
    return own;
}

using Trees = std::vector<std::vector<std::pair<Vertex, Vertex>>>;

// BFS spanning tree of each G[branch set]
Trees bfs_trees(const Graph& g, const OddExpansion& e) {
    auto own = owners(g, e);
    Trees t(e.branch.size());
    std::vector<char> seen(g.n(), 0);
    for (int v = 0; v < static_cast<int>(e.branch.size()); ++v) {
        if (e.branch[v].empty()) continue;
        Vertex s = *std::min_element(e.branch[v].begin(), e.branch[v].end());
        std::deque<Vertex> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbors(x))
                if (own[y] == v && !seen[y]) {
                    seen[y] = 1;
                    t[v].push_back({x, y});
                    q.push_back(y);
                }
        }
    }
    return t;
}

// witness forced by the given trees: tree edges flip, images keep
std::optional<std::map<Vertex, int>> witness_from_trees(const Graph& g, const OddExpansion& e, const Trees& trees) {
    std::map<Vertex, std::vector<std::pair<Vertex, int>>> adj;
    for (auto& b : e.branch)
        for (Vertex x : b) adj[x];
    for (auto& t : trees)
        for (auto [a, b] : t) {
            adj[a].push_back({b, 1});
            adj[b].push_back({a, 1});
        }
    for (auto [a, b] : e.edge_images) {
        adj[a].push_back({b, 0});
        adj[b].push_back({a, 0});
    }
    std::map<Vertex, int> col;
    for (auto& [s, unused] : adj) {
        if (col.count(s)) continue;
        col[s] = 1;
        std::deque<Vertex> q{s};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (auto [y, flip] : adj[x]) {
                int want = flip ? 3 - col[x] : col[x];
                auto it = col.find(y);
                if (it == col.end()) {
                    col[y] = want;
                    q.push_back(y);
                } else if (it->second != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return canonical_witness(g, e, std::move(col));
}

std::vector<int> colour_of(const Graph& g) {
    auto r = bipartition_or_odd_cycle(g);
    if (!std::holds_alternative<TwoColouring>(r)) return {};
    return std::get<TwoColouring>(r).colour;
}

bool two_connected(const Graph& g) {
    if (g.n() < 3) return false;
    auto b = biconnected_components(g);
    return b.vertices.size() == 1 && static_cast<int>(b.vertices[0].size()) == g.n();
}

// structural ear checks shared by odd ears and cross-wall ears (codes 0..3)
std::optional<Violation> ear_shape(const Graph& g, const HostSubgraph& h, const std::vector<Vertex>& p) {
    if (p.size() < 2) return bad(0, "ear needs at least one edge");
    std::set<Vertex> seen;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= g.n()) return bad(0, "ear vertex out of range", {p[i]});
        if (!seen.insert(p[i]).second) return bad(0, "ear repeats vertex " + vname(p[i]), {p[i]});
        if (i && !g.has_edge(p[i - 1], p[i])) return bad(0, "ear step is not an edge", {p[i - 1], p[i]});
    }
    if (!contains(h.vertices, p.front()) || !contains(h.vertices, p.back()))
        return bad(1, "ear ends must lie in the subgraph", {p.front(), p.back()});
    for (size_t i = 1; i + 1 < p.size(); ++i)
        if (contains(h.vertices, p[i])) return bad(2, "ear interior meets the subgraph", {p[i]});
    if (p.size() == 2 && std::binary_search(h.edges.begin(), h.edges.end(), make_edge(p[0], p[1])))
        return bad(3, "ear is an edge of the subgraph", {p[0], p[1]});
    return std::nullopt;
}

std::vector<Vertex> path_between_in_tree(const std::vector<std::vector<Vertex>>& adj, Vertex s, Vertex t) {
    std::map<Vertex, Vertex> par{{s, s}};
    std::deque<Vertex> q{s};
    while (!q.empty() && !par.count(t)) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : adj[x])
            if (!par.count(y)) {
                par[y] = x;
                q.push_back(y);
            }
    }
    std::vector<Vertex> p;
    if (!par.count(t)) return p;
    for (Vertex x = t; x != s; x = par[x]) p.push_back(x);
    p.push_back(s);
    std::reverse(p.begin(), p.end());
    return p;
}

// ---------------------------------------------------------------------------------------
// grid expansion carried by a 2k-wall: grid vertex (i, j) takes the wall vertices of
// columns 2j-1 and 2j in row i; a path between two grid vertices is split at one edge

struct GridSplit {
    int m = 0;
    std::vector<std::vector<Vertex>> branch;                  // per grid id (i-1)*m + (j-1)
    std::map<std::pair<int, int>, std::pair<Vertex, Vertex>> image;  // (gu, gv) gu < gv
    Trees tree;
};

struct WallGrid {
    const Wall& w;
    const Generated& el;
    int m;
    std::vector<int> gid;  // per elementary vertex

    explicit WallGrid(const Wall& w_) : w(w_), el(elementary(w_.order)), m(w_.order) {
        for (Vertex v = 0; v < el.graph.n(); ++v) {
            auto [r, c] = el.coord[v];
            gid.push_back((r - 1) * m + (c + 1) / 2 - 1);
        }
    }

    // grid vertices a host vertex of the wall may be given to
    std::map<Vertex, std::set<int>> options() const {
        std::map<Vertex, std::set<int>> o;
        for (int e = 0; e < el.graph.m(); ++e) {
            const auto& p = w.paths[e];
            int gu = gid[el.graph.edge(e).u], gv = gid[el.graph.edge(e).v];
            o[p.front()].insert(gu);
            o[p.back()].insert(gv);
            for (size_t i = 1; i + 1 < p.size(); ++i) {
                o[p[i]].insert(gu);
                o[p[i]].insert(gv);
            }
        }
        return o;
    }

    // nullopt when the forced owners cannot be honoured
    std::optional<GridSplit> split(const std::map<Vertex, int>& force) const {
        GridSplit s;
        s.m = m;
        s.branch.resize(m * m);
        s.tree.resize(m * m);
        for (int e = 0; e < el.graph.m(); ++e) {
            const auto& p = w.paths[e];
            int gu = gid[el.graph.edge(e).u], gv = gid[el.graph.edge(e).v];
            const int len = static_cast<int>(p.size());
            if (gu == gv) {
                for (Vertex x : p)
                    if (auto it = force.find(x); it != force.end() && it->second != gu) return std::nullopt;
                for (int i = 0; i < len; ++i) s.branch[gu].push_back(p[i]);
                for (int i = 1; i < len; ++i) s.tree[gu].push_back({p[i - 1], p[i]});
                continue;
            }
            int cut = len - 2;
            for (int i = 0; i < len; ++i) {
                auto it = force.find(p[i]);
                if (it == force.end()) continue;
                int f = it->second;
                if ((i == 0 && f != gu) || (i + 1 == len && f != gv) || (f != gu && f != gv)) return std::nullopt;
                if (f == gv && i + 1 < len) cut = std::min(cut, i - 1);
            }
            for (int i = 1; i + 1 < len; ++i)
                if (auto it = force.find(p[i]); it != force.end() && it->second == gu && i > cut) return std::nullopt;
            if (cut < 0) return std::nullopt;
            for (int i = 0; i <= cut; ++i) s.branch[gu].push_back(p[i]);
            for (int i = cut + 1; i < len; ++i) s.branch[gv].push_back(p[i]);
            for (int i = 1; i < len; ++i)
                if (i != cut + 1) s.tree[i <= cut ? gu : gv].push_back({p[i - 1], p[i]});
            if (gu < gv)
                s.image[{gu, gv}] = {p[cut], p[cut + 1]};
            else
                s.image[{gv, gu}] = {p[cut + 1], p[cut]};
        }
        for (auto& b : s.branch) {
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
        }
        return s;
    }
};

// the eight symmetries of the m x m grid, applied to 1-based coordinates
std::pair<int, int> symmetry(int t, int m, int i, int j) {
    int a = i, b = j;
    if (t & 4) std::swap(a, b);
    if (t & 1) a = m + 1 - a;
    if (t & 2) b = m + 1 - b;
    return {a, b};
}

// expansion of a grid-based pattern from a split; extra pattern vertices and edges are
// left empty for the caller. pattern_of maps grid id to pattern vertex.
struct Partial {
    OddExpansion e;
    Trees tree;
};

Partial from_split(const Generated& pattern, const GridSplit& s, int sym) {
    Partial r;
    r.e.pattern = pattern.graph;
    r.e.branch.assign(pattern.graph.n(), {});
    r.e.edge_images.assign(pattern.graph.m(), {-1, -1});
    r.tree.assign(pattern.graph.n(), {});
    const int m = s.m;
    auto pv = [&](int gidx) {
        auto [a, b] = symmetry(sym, m, gidx / m + 1, gidx % m + 1);
        return pattern.at(a, b);
    };
    for (int gi = 0; gi < m * m; ++gi) {
        r.e.branch[pv(gi)] = s.branch[gi];
        r.tree[pv(gi)] = s.tree[gi];
    }
    for (auto& [key, img] : s.image) {
        Vertex pu = pv(key.first), pw = pv(key.second);
        int e = pattern.graph.edge_index(pu, pw);
        if (e < 0) throw Error(ErrorKind::PreconditionViolated, "internal audit failed: grid edge missing in pattern");
        r.e.edge_images[e] = pattern.graph.edge(e).u == pu ? img : std::pair{img.second, img.first};
    }
    return r;
}

// absorb path[from..to] (inclusive) into branch set v with the tree edges along it;
// the edge joining it to the rest of the set is added by the caller
void absorb(Partial& r, Vertex v, const std::vector<Vertex>& path, int from, int to) {
    for (int i = from; i <= to; ++i) {
        r.e.branch[v].push_back(path[i]);
        if (i > from) r.tree[v].push_back({path[i - 1], path[i]});
    }
}

void set_image(Partial& r, Vertex pu, Vertex pw, Vertex a, Vertex b) {
    int e = r.e.pattern.edge_index(pu, pw);
    if (e < 0) throw Error(ErrorKind::PreconditionViolated, "internal audit failed: pattern edge missing");
    r.e.edge_images[e] = r.e.pattern.edge(e).u == pu ? std::pair{a, b} : std::pair{b, a};
}

// finish: sort sets, derive the witness from the recorded trees, verify
std::optional<OddExpansion> finish(const Graph& g, Partial r) {
    for (auto& b : r.e.branch) {
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end()) return std::nullopt;
    }
    for (auto [a, b] : r.e.edge_images)
        if (a < 0 || b < 0) return std::nullopt;
    if (validate_expansion(g, r.e)) return std::nullopt;
    auto wit = witness_from_trees(g, r.e, r.tree);
    if (!wit) return std::nullopt;
    r.e.witness = std::move(*wit);
    if (verify_odd_expansion(g, r.e)) return std::nullopt;
    return r.e;
}

std::map<Vertex, int> wall_colour_map(const Wall& w) {
    std::map<Vertex, int> m;
    auto vs = wall_vertices(w);
    auto col = wall_colouring(w);
    if (col.empty()) return m;
    for (size_t i = 0; i < vs.size(); ++i) m[vs[i]] = col[i];
    return m;
}

// parity of a path relative to a 2-colouring of the subgraph it attaches to
bool is_odd_wrt(const std::map<Vertex, int>& col, const std::vector<Vertex>& p) {
    int len = static_cast<int>(p.size()) - 1;
    return (len % 2 == 1) != (col.at(p.front()) != col.at(p.back()));
}

std::vector<Vertex> reversed(std::vector<Vertex> p) {
    std::reverse(p.begin(), p.end());
    return p;
}

// append q to p, q starting where p ends
void chain(std::vector<Vertex>& p, const std::vector<Vertex>& q) {
    if (p.empty()) {
        p = q;
        return;
    }
    p.insert(p.end(), q.begin() + 1, q.end());
}

bool simple(const std::vector<Vertex>& p) {
    std::vector<Vertex> s = p;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

// ---------------------------------------------------------------------------------------

std::optional<Violation> validate_expansion(const Graph& g, const OddExpansion& e) {
    const Graph& h = e.pattern;
    if (static_cast<int>(e.branch.size()) != h.n()) return bad(0, "one branch set per pattern vertex expected");
    if (static_cast<int>(e.edge_images.size()) != h.m()) return bad(0, "one edge image per pattern edge expected");
    std::vector<int> own(g.n(), -1);
    for (int v = 0; v < h.n(); ++v) {
        if (e.branch[v].empty()) return bad(1, "branch set of " + vname(v) + " is empty", {v});
        for (Vertex x : e.branch[v]) {
            if (x < 0 || x >= g.n()) return bad(0, "branch vertex out of range", {v, x});
            if (own[x] >= 0) return bad(1, "host vertex " + vname(x) + " lies in two branch sets", {own[x], v, x});
            own[x] = v;
        }
    }
    std::vector<char> seen(g.n(), 0);
    for (int v = 0; v < h.n(); ++v) {
        Vertex s = e.branch[v][0];
        std::vector<Vertex> st{s};
        seen[s] = 1;
        size_t reached = 1;
        while (!st.empty()) {
            Vertex x = st.back();
            st.pop_back();
            for (Vertex y : g.neighbors(x))
                if (own[y] == v && !seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    st.push_back(y);
                }
        }
        if (reached != e.branch[v].size()) return bad(2, "branch set of " + vname(v) + " is not connected", {v});
    }
    for (int i = 0; i < h.m(); ++i) {
        auto [a, b] = e.edge_images[i];
        auto ed = h.edge(i);
        if (a < 0 || a >= g.n() || b < 0 || b >= g.n() || own[a] != ed.u || own[b] != ed.v || !g.has_edge(a, b))
            return bad(4, "image of pattern edge " + vname(ed.u) + "-" + vname(ed.v) + " does not join its branch sets",
                       {i, a, b});
    }
    return std::nullopt;
}

std::optional<Violation> verify_odd_expansion(const Graph& g, const OddExpansion& e) {
    if (auto v = validate_expansion(g, e)) return v;
    auto own = owners(g, e);
    for (auto& b : e.branch)
        for (Vertex x : b) {
            auto it = e.witness.find(x);
            if (it == e.witness.end() || (it->second != 1 && it->second != 2))
                return bad(6, "witness has no colour for " + vname(x), {x});
        }
    for (auto& [x, c] : e.witness)
        if (x < 0 || x >= g.n() || own[x] < 0) return bad(6, "witness colours a vertex outside the branch sets", {x});
    // a properly coloured spanning tree exists iff the bichromatic edges connect the set
    std::vector<char> seen(g.n(), 0);
    for (int v = 0; v < e.pattern.n(); ++v) {
        Vertex s = e.branch[v][0];
        std::vector<Vertex> st{s};
        seen[s] = 1;
        size_t reached = 1;
        while (!st.empty()) {
            Vertex x = st.back();
            st.pop_back();
            for (Vertex y : g.neighbors(x))
                if (own[y] == v && !seen[y] && e.witness.at(y) != e.witness.at(x)) {
                    seen[y] = 1;
                    ++reached;
                    st.push_back(y);
                }
        }
        if (reached != e.branch[v].size())
            return bad(3, "witness is not proper on any spanning tree of branch set " + vname(v), {v});
    }
    for (int i = 0; i < e.pattern.m(); ++i) {
        auto [a, b] = e.edge_images[i];
        if (e.witness.at(a) != e.witness.at(b)) return bad(5, "image of pattern edge " + vname(i) + " is bichromatic", {i, a, b});
    }
    return std::nullopt;
}

std::map<Vertex, int> canonical_witness(const Graph& g, const OddExpansion& e, std::map<Vertex, int> witness) {
    // parts of the inflated copy: branch sets joined through their images
    auto own = owners(g, e);
    std::map<Vertex, Vertex> parent;
    std::function<Vertex(Vertex)> find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](Vertex a, Vertex b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (auto& [x, c] : witness) parent[x] = x;
    for (auto& b : e.branch)
        for (Vertex x : b)
            if (parent.count(x) && parent.count(b[0])) unite(x, b[0]);
    for (auto [a, b] : e.edge_images)
        if (parent.count(a) && parent.count(b)) unite(a, b);
    std::map<Vertex, int> flip;
    for (auto& [x, c] : witness) {
        Vertex r = find(x);
        if (!flip.count(r)) flip[r] = c != 1;  // x is the lowest vertex of its part
    }
    for (auto& [x, c] : witness)
        if (flip[find(x)]) c = 3 - c;
    return witness;
}

std::optional<std::map<Vertex, int>> derive_witness(const Graph& g, const OddExpansion& e) {
    if (validate_expansion(g, e)) return std::nullopt;
    return witness_from_trees(g, e, bfs_trees(g, e));
}

bool pattern_is_bipartite(const OddExpansion& e) { return is_bipartite(e.pattern); }

// ---------------------------------------------------------------------------------------

HostSubgraph host_subgraph(const Graph& h) {
    HostSubgraph s;
    for (Vertex v = 0; v < h.n(); ++v)
        if (h.degree(v) > 0) s.vertices.push_back(v);
    s.edges = h.edges();
    std::sort(s.edges.begin(), s.edges.end());
    return s;
}

HostSubgraph wall_subgraph(const Wall& w) {
    HostSubgraph s;
    s.vertices = wall_vertices(w);
    for (auto& p : w.paths)
        for (size_t i = 1; i < p.size(); ++i) s.edges.push_back(make_edge(p[i - 1], p[i]));
    std::sort(s.edges.begin(), s.edges.end());
    s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
    return s;
}

HostSubgraph union_of(const HostSubgraph& a, const std::vector<std::vector<Vertex>>& paths) {
    HostSubgraph s = a;
    for (auto& p : paths)
        for (size_t i = 0; i < p.size(); ++i) {
            s.vertices.push_back(p[i]);
            if (i) s.edges.push_back(make_edge(p[i - 1], p[i]));
        }
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
    std::sort(s.edges.begin(), s.edges.end());
    s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
    return s;
}

Subgraph as_graph(const HostSubgraph& h) {
    auto loc = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(h.vertices.begin(), h.vertices.end(), v) - h.vertices.begin());
    };
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto& e : h.edges) es.push_back({loc(e.u), loc(e.v)});
    return Subgraph{Graph(static_cast<int>(h.vertices.size()), es), h.vertices};
}

std::optional<Violation> validate_odd_ear(const Graph& g, const HostSubgraph& h, const std::vector<Vertex>& path) {
    if (auto v = ear_shape(g, h, path)) return v;
    if (!is_bipartite(as_graph(h).graph)) return bad(4, "subgraph is not bipartite");
    if (is_bipartite(as_graph(union_of(h, {path})).graph)) return bad(5, "ear is even: the union stays bipartite");
    return std::nullopt;
}

EarCertificate find_odd_ear(const Graph& g, const HostSubgraph& h) {
    for (Vertex v : h.vertices)
        if (v < 0 || v >= g.n()) throw Error(ErrorKind::PreconditionViolated, "subgraph vertex out of range");
    for (auto& e : h.edges)
        if (!g.has_edge(e.u, e.v) || !contains(h.vertices, e.u) || !contains(h.vertices, e.v))
            throw Error(ErrorKind::PreconditionViolated, "subgraph edge is not an edge of the graph");
    Subgraph hl = as_graph(h);
    if (!two_connected(hl.graph)) throw Error(ErrorKind::PreconditionViolated, "subgraph is not 2-connected");
    auto hc = colour_of(hl.graph);
    if (hc.empty()) throw Error(ErrorKind::PreconditionViolated, "subgraph is not bipartite");
    if (!two_connected(g)) throw Error(ErrorKind::PreconditionViolated, "graph is not 2-connected");
    auto oc = bipartition_or_odd_cycle(g);
    if (!std::holds_alternative<OddCycle>(oc)) throw Error(ErrorKind::PreconditionViolated, "graph is bipartite");
    std::map<Vertex, int> col;
    for (size_t i = 0; i < h.vertices.size(); ++i) col[h.vertices[i]] = hc[i];
    auto odd = [&](const std::vector<Vertex>& p) { return is_odd_wrt(col, p); };
    std::vector<Vertex> cyc = std::get<OddCycle>(oc).cycle;
    const int L = static_cast<int>(cyc.size());
    int meet = 0;
    for (Vertex v : cyc) meet += contains(h.vertices, v);
    auto finish_ear = [&](std::vector<Vertex> p) {
        if (auto v = validate_odd_ear(g, h, p))
            throw Error(ErrorKind::PreconditionViolated, "internal audit failed: " + v->message);
        return EarCertificate{std::move(p), h};
    };
    if (meet <= 1) {
        auto r = two_disjoint_paths(g, cyc, h.vertices);
        if (!std::holds_alternative<PathPair>(r))
            throw Error(ErrorKind::PreconditionViolated, "no two disjoint paths from the odd cycle to the subgraph");
        auto pp = std::get<PathPair>(r);
        Vertex c1 = pp.first.front(), c2 = pp.second.front();
        int i1 = static_cast<int>(std::find(cyc.begin(), cyc.end(), c1) - cyc.begin());
        int i2 = static_cast<int>(std::find(cyc.begin(), cyc.end(), c2) - cyc.begin());
        for (int dir : {1, -1}) {
            std::vector<Vertex> p = reversed(pp.first);
            for (int i = i1; i != i2; i = ((i + dir) % L + L) % L)
                if (i != i1) p.push_back(cyc[i]);
            p.insert(p.end(), pp.second.begin(), pp.second.end());
            if (odd(p)) return finish_ear(p);
        }
        throw Error(ErrorKind::PreconditionViolated, "internal audit failed: both ears through the odd cycle are even");
    }
    int start = 0;
    while (!contains(h.vertices, cyc[start])) ++start;
    std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
    cyc.push_back(cyc[0]);
    std::vector<Vertex> piece{cyc[0]};
    for (int i = 1; i <= L; ++i) {
        piece.push_back(cyc[i]);
        if (!contains(h.vertices, cyc[i])) continue;
        bool h_edge = piece.size() == 2 && std::binary_search(h.edges.begin(), h.edges.end(), make_edge(piece[0], piece[1]));
        if (!h_edge && odd(piece)) return finish_ear(piece);
        piece = {cyc[i]};
    }
    throw Error(ErrorKind::PreconditionViolated, "internal audit failed: no odd piece on the odd cycle");
}

OddExpansion oddify_bipartite_expansion(const Graph& g, OddExpansion e) {
    auto cg = colour_of(g);
    if (cg.empty()) throw Error(ErrorKind::NotBipartite, "host graph is not bipartite");
    auto ch = colour_of(e.pattern);
    if (ch.empty()) throw Error(ErrorKind::NotBipartite, "pattern graph is not bipartite");
    if (auto v = validate_expansion(g, e)) throw Error(ErrorKind::PreconditionViolated, "not an expansion: " + v->message);
    e.witness.clear();
    for (int v = 0; v < e.pattern.n(); ++v)
        for (Vertex x : e.branch[v]) e.witness[x] = ch[v] == 1 ? cg[x] : 3 - cg[x];
    e.witness = canonical_witness(g, e, std::move(e.witness));
    if (auto v = verify_odd_expansion(g, e))
        throw Error(ErrorKind::PreconditionViolated, "internal audit failed: " + v->message);
    return e;
}

// ---------------------------------------------------------------------------------------

OddExpansion build_odd_spb_expansion(const Graph& g, const Wall& w, const EarCertificate& p, int k) {
    if (auto v = validate_wall(g, w)) throw Error(ErrorKind::PreconditionViolated, "not a wall: " + v->message);
    if (!is_clean(w)) throw Error(ErrorKind::NotClean, "wall is not clean");
    const int need = inside_out_min_order(k) + 2;
    if (w.order < need)
        throw Error(ErrorKind::OrderTooSmall, "wall order " + std::to_string(w.order) + " below " + std::to_string(need));
    HostSubgraph hw = wall_subgraph(w);
    auto per = wall_perimeter(w);
    const Vertex p1 = p.path.front(), p2 = p.path.back();
    auto on_per = [&](Vertex v) { return std::find(per.begin(), per.end(), v) != per.end(); };
    if (p.path.size() < 2 || !on_per(p1) || !on_per(p2))
        throw Error(ErrorKind::EarNotOnPerimeter, "ear ends must lie on the wall perimeter");
    if (auto v = validate_odd_ear(g, hw, p.path)) throw Error(ErrorKind::PreconditionViolated, "bad ear: " + v->message);

    const Wall inner = subwall(w, 2, 2, w.order - 2);
    auto inner_vs = wall_vertices(inner);
    for (Vertex v : per)
        if (contains(inner_vs, v)) throw Error(ErrorKind::PreconditionViolated, "internal audit failed: inner wall meets perimeter");
    auto col = wall_colour_map(w);
    const int L = static_cast<int>(per.size());
    std::map<Vertex, int> pos;
    for (int i = 0; i < L; ++i) pos[per[i]] = i;

    // adjacency of the wall plus the ear
    HostSubgraph wp = union_of(hw, {p.path});
    std::map<Vertex, std::vector<Vertex>> adj;
    for (auto& e : wp.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& [v, a] : adj) std::sort(a.begin(), a.end());
    // shortest path from x to the perimeter avoiding the inner wall
    std::map<Vertex, std::vector<Vertex>> spoke_cache;
    auto spoke = [&](Vertex x) -> const std::vector<Vertex>& {
        auto it = spoke_cache.find(x);
        if (it != spoke_cache.end()) return it->second;
        std::map<Vertex, Vertex> par{{x, x}};
        std::deque<Vertex> q{x};
        std::vector<Vertex> res;
        while (!q.empty() && res.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex y : adj[u]) {
                if (par.count(y) || contains(inner_vs, y)) continue;
                par[y] = u;
                if (pos.count(y)) {
                    for (Vertex z = y; z != x; z = par[z]) res.push_back(z);
                    res.push_back(x);
                    std::reverse(res.begin(), res.end());
                    break;
                }
                q.push_back(y);
            }
        }
        return spoke_cache[x] = res;
    };
    auto arc = [&](Vertex a, Vertex b, int dir) {
        std::vector<Vertex> r{a};
        for (int i = pos[a]; per[i] != b;) {
            i = ((i + dir) % L + L) % L;
            r.push_back(per[i]);
        }
        return r;
    };
    const Generated pattern = spb_grid(k);
    const int m = 2 * k;
    std::optional<OddExpansion> found;

    auto attempt = [&](const Wall& w2) {
        WallGrid wg(w2);
        auto opts = wg.options();
        auto brick = central_brick(w2);
        auto grid_id = [&](int i, int j) { return (i - 1) * m + (j - 1); };
        // main diagonal with the identity, the other one through a mirror
        const std::array<std::array<int, 3>, 2> diag{{{grid_id(k, k), grid_id(k + 1, k + 1), 0},
                                                      {grid_id(k, k + 1), grid_id(k + 1, k), 2}}};
        for (auto [gu, gv, sym] : diag) {
            std::vector<Vertex> xs, ys;
            for (Vertex b : brick) {
                if (opts[b].count(gu) && !spoke(b).empty()) xs.push_back(b);
                if (opts[b].count(gv) && !spoke(b).empty()) ys.push_back(b);
            }
            for (Vertex x : xs)
                for (Vertex y : ys) {
                    if (x == y) continue;
                    const auto& sx = spoke(x);
                    const auto& sy = spoke(y);
                    std::set<Vertex> sxs(sx.begin(), sx.end());
                    if (std::any_of(sy.begin(), sy.end(), [&](Vertex v) { return sxs.count(v); })) continue;
                    Vertex c1 = sx.back(), c2 = sy.back();
                    std::vector<std::vector<Vertex>> cands;
                    for (int d : {1, -1}) {
                        auto e = sx;
                        chain(e, arc(c1, c2, d));
                        chain(e, reversed(sy));
                        cands.push_back(e);
                    }
                    for (auto [pa, pb] : {std::pair{p1, p2}, std::pair{p2, p1}})
                        for (int d1 : {1, -1})
                            for (int d2 : {1, -1}) {
                                auto e = sx;
                                chain(e, arc(c1, pa, d1));
                                chain(e, pa == p1 ? p.path : reversed(p.path));
                                chain(e, arc(pb, c2, d2));
                                chain(e, reversed(sy));
                                cands.push_back(e);
                            }
                    for (auto& ear : cands) {
                        if (!simple(ear) || !is_odd_wrt(col, ear)) continue;
                        auto s = wg.split({{x, gu}, {y, gv}});
                        if (!s) continue;
                        Partial r = from_split(pattern, *s, sym);
                        const Vertex a = pattern.at(k, k), b = pattern.at(k + 1, k + 1);
                        const int n = static_cast<int>(ear.size());
                        absorb(r, a, ear, 1, n - 2);
                        if (n >= 3) r.tree[a].push_back({ear[0], ear[1]});
                        set_image(r, a, b, ear[n - 2], ear[n - 1]);
                        if (auto ex = finish(g, std::move(r))) {
                            found = std::move(ex);
                            return true;
                        }
                    }
                }
        }
        return false;
    };
    try {
        inside_out(inner, k, attempt);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OrderTooSmall) throw;
    }
    if (!found) throw Error(ErrorKind::PreconditionViolated, "no verified expansion from this wall and ear");
    found->family = "spb";
    found->params = {k};
    return *found;
}

// ---------------------------------------------------------------------------------------

OddExpansion lift_expansion(const OddExpansion& e, const std::vector<Vertex>& to_host) {
    OddExpansion r = e;
    for (auto& b : r.branch) {
        for (auto& x : b) x = to_host[x];
        std::sort(b.begin(), b.end());
    }
    for (auto& [a, b] : r.edge_images) a = to_host[a], b = to_host[b];
    r.witness.clear();
    for (auto& [x, c] : e.witness) r.witness[to_host[x]] = c;
    return r;
}

OddExpansion identity_expansion(const Generated& pattern, const std::string& family, const std::vector<int>& params) {
    OddExpansion e;
    e.pattern = pattern.graph;
    for (Vertex v = 0; v < pattern.graph.n(); ++v) e.branch.push_back({v});
    for (auto& ed : pattern.graph.edges()) e.edge_images.push_back({ed.u, ed.v});
    e.family = family;
    e.params = params;
    return e;
}

namespace {

// one block: expansion when the wall-and-ear route succeeds
std::optional<OddExpansion> spb_in_block(const Graph& blk, int k, const DetectOptions& opt, std::string* note) {
    const int N = inside_out_min_order(k) + 2;
    for (int M = N; M <= N + opt.extra_order; ++M) {
        std::optional<Wall> w;
        try {
            w = find_wall(blk, M, opt.wall);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExhausted) throw;
            *note = "wall search budget exhausted at order " + std::to_string(M);
            return std::nullopt;
        }
        if (!w) {
            *note = "no wall of order " + std::to_string(M) + " found";
            return std::nullopt;
        }
        std::vector<Wall> subs;
        for (int r = 1; r + N - 1 <= M; ++r)
            for (int c = 1; c + N - 1 <= M; ++c) {
                Wall s = M == N ? *w : settle_corners(subwall(*w, r, c, N));
                if (is_clean(s)) subs.push_back(s);
            }
        if (subs.empty()) {
            // the wall found runs along an odd path; ask for a bipartite one instead
            FindWallOptions co = opt.wall;
            co.clean = true;
            std::optional<Wall> cw;
            try {
                cw = find_wall(blk, N, co);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BudgetExhausted) throw;
            }
            if (cw && is_clean(*cw)) {
                subs.push_back(*cw);
                w = cw;
            }
        }
        for (const Wall& s : subs) {
            HostSubgraph hs = wall_subgraph(s);
            EarCertificate ear;
            try {
                ear = find_odd_ear(blk, hs);
            } catch (const Error&) {
                continue;
            }
            auto per = wall_perimeter(s);
            auto on_per = [&](Vertex v) { return std::find(per.begin(), per.end(), v) != per.end(); };
            if (on_per(ear.path.front()) && on_per(ear.path.back())) {
                try {
                    return build_odd_spb_expansion(blk, s, ear, k);
                } catch (const Error&) {
                }
            }
            // otherwise look for another clean subwall whose own ear inside wall-plus-ear ends on its perimeter
            HostSubgraph u = union_of(wall_subgraph(*w), {ear.path});
            Subgraph ug = as_graph(u);
            auto loc = [&](Vertex v) {
                return static_cast<Vertex>(std::lower_bound(u.vertices.begin(), u.vertices.end(), v) - u.vertices.begin());
            };
            for (const Wall& s2 : subs) {
                auto vs2 = wall_vertices(s2);
                if (contains(vs2, ear.path.front()) || contains(vs2, ear.path.back())) continue;
                Wall l2 = s2;
                for (auto& b : l2.branch) b = loc(b);
                for (auto& pth : l2.paths)
                    for (auto& x : pth) x = loc(x);
                try {
                    EarCertificate e2 = find_odd_ear(ug.graph, wall_subgraph(l2));
                    auto built = build_odd_spb_expansion(ug.graph, l2, e2, k);
                    auto lifted = lift_expansion(built, ug.to_host);
                    if (!verify_odd_expansion(blk, lifted)) return lifted;
                } catch (const Error&) {
                }
            }
        }
        *note = "no clean wall with a usable odd ear up to order " + std::to_string(M);
    }
    return std::nullopt;
}

// per-block decompositions glued along the block-cut forest
TreeDecomposition glue(const Graph& g, const Blocks& blocks, const std::vector<TreeDecomposition>& parts) {
    TreeDecomposition forest = block_cut_forest(g);
    std::map<std::vector<Vertex>, int> index;
    for (size_t b = 0; b < blocks.vertices.size(); ++b) index[blocks.vertices[b]] = static_cast<int>(b);
    std::vector<int> offset(forest.size());
    TreeDecomposition t;
    for (int x = 0; x < forest.size(); ++x) {
        const auto& part = parts[index.at(forest.bags[x])];
        offset[x] = t.size();
        for (auto& bag : part.bags) t.bags.push_back(bag);
        for (auto [a, b] : part.tree) t.tree.push_back({a + offset[x], b + offset[x]});
    }
    auto node_with = [&](int x, std::optional<Vertex> v) {
        const auto& part = parts[index.at(forest.bags[x])];
        for (int i = 0; i < part.size(); ++i)
            if (!v || std::binary_search(part.bags[i].begin(), part.bags[i].end(), *v)) return offset[x] + i;
        return offset[x];
    };
    for (auto [x, y] : forest.tree) {
        std::optional<Vertex> shared;
        for (Vertex v : forest.bags[x])
            if (std::binary_search(forest.bags[y].begin(), forest.bags[y].end(), v)) shared = v;
        t.tree.push_back({node_with(x, shared), node_with(y, shared)});
    }
    if (t.size()) t.root = 0;
    return t;
}

// subgraph copy of a pattern; every subgraph is an odd minor with one-vertex branch sets
std::optional<OddExpansion> embed_copy(const Graph& g, const Graph& pat, long long budget) {
    const int np = pat.n();
    if (np == 0 || np > g.n() || pat.m() > g.m()) return std::nullopt;
    std::vector<Vertex> order, pos(np, -1);
    Vertex start = 0;
    for (Vertex v = 1; v < np; ++v)
        if (pat.degree(v) > pat.degree(start)) start = v;
    order.push_back(start);
    pos[start] = 0;
    for (size_t h = 0; h < order.size(); ++h)
        for (Vertex u : pat.neighbors(order[h]))
            if (pos[u] < 0) pos[u] = static_cast<Vertex>(order.size()), order.push_back(u);
    if (static_cast<int>(order.size()) != np) return std::nullopt;  // connected patterns only
    std::vector<Vertex> img(np, -1);
    std::vector<char> used(g.n(), 0);
    long long steps = 0;
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == np) return true;
        if (++steps > budget) return false;
        Vertex v = order[i];
        Vertex anchor = -1;
        for (Vertex u : pat.neighbors(v))
            if (pos[u] < i && (anchor < 0 || pos[u] < pos[anchor])) anchor = u;
        auto fits = [&](Vertex x) {
            if (used[x] || g.degree(x) < pat.degree(v)) return false;
            for (Vertex u : pat.neighbors(v))
                if (pos[u] < i && !g.has_edge(x, img[u])) return false;
            return true;
        };
        auto attempt = [&](Vertex x) {
            img[v] = x;
            used[x] = 1;
            if (rec(i + 1)) return true;
            used[x] = 0;
            img[v] = -1;
            return false;
        };
        if (anchor < 0) {
            for (Vertex x = 0; x < g.n(); ++x)
                if (fits(x) && attempt(x)) return true;
        } else {
            for (Vertex x : g.neighbors(img[anchor]))
                if (fits(x) && attempt(x)) return true;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    OddExpansion e;
    e.pattern = pat;
    for (Vertex v = 0; v < np; ++v) {
        e.branch.push_back({img[v]});
        e.witness[img[v]] = 1;
    }
    for (auto& ed : pat.edges()) e.edge_images.push_back({img[ed.u], img[ed.v]});
    return e;
}

struct BlockOutcome {
    BlockStatus status;
    TreeDecomposition td;  // host ids
    std::optional<OddExpansion> expansion;
};

// classify a block; search for an expansion only when search is set
BlockOutcome classify_block(const Graph& g, const std::vector<Vertex>& verts, int k, BlindClass a, bool search,
                            const DetectOptions& opt) {
    BlockOutcome out;
    out.status.vertices = verts;
    Subgraph blk = induced_subgraph(g, verts);
    auto lift_td = [&](TreeDecomposition td) {
        for (auto& bag : td.bags) {
            for (auto& x : bag) x = blk.to_host[x];
            std::sort(bag.begin(), bag.end());
        }
        return td;
    };
    TreeDecomposition single;
    single.bags = {verts};
    single.root = 0;
    out.td = single;
    if (is_bipartite(blk.graph)) {
        out.status.status = "bipartite";
        return out;
    }
    // small blocks: look for a plain copy of the pattern first
    std::string copy_note;
    if (search && blk.graph.n() <= opt.copy_limit) {
        if (auto ex = embed_copy(blk.graph, spb_grid(k).graph, opt.copy_budget)) {
            ex->family = "spb";
            ex->params = {k};
            out.expansion = lift_expansion(*ex, blk.to_host);
            copy_note = "contains a copy of the pattern";
        }
    }
    if (a != BlindClass::B && is_planar(blk.graph).planar) {
        out.status.status = "planar";
        return out;
    }
    TreeDecomposition td = heuristic_decomposition(blk.graph, Heuristic::MinFill);
    int wd = metrics(td).width;
    if (wd > opt.cutoff && blk.graph.n() <= opt.exact_limit) {
        try {
            ExactOptions eo;
            eo.max_vertices = opt.exact_limit;
            auto ex = exact_treewidth(blk.graph, eo);
            td = ex.decomposition;
            wd = ex.width;
        } catch (const Error&) {
        }
    }
    if (wd <= opt.cutoff) {
        out.status.status = "treewidth";
        out.status.width = wd;
        out.status.note = copy_note;
        out.td = lift_td(td);
        return out;
    }
    out.status.status = "undecided";
    out.status.width = wd;
    out.status.note = "treewidth bound above cutoff";
    if (out.expansion) {
        out.status.note = copy_note;
    } else if (search && blk.graph.n() >= 3) {
        std::string note;
        if (auto ex = spb_in_block(blk.graph, k, opt, &note)) {
            out.expansion = lift_expansion(*ex, blk.to_host);
            out.status.note = "odd spb expansion found";
        } else {
            out.status.note = note;
        }
    }
    return out;
}

std::vector<BlockOutcome> classify_all(const Graph& g, const Blocks& blocks, int k, BlindClass a, bool search,
                                       const DetectOptions& opt) {
    const int nb = static_cast<int>(blocks.vertices.size());
    std::vector<BlockOutcome> out(nb);
    std::vector<std::string> errors(nb);
    auto work = [&](int b) {
        try {
            out[b] = classify_block(g, blocks.vertices[b], k, a, search, opt);
        } catch (const std::exception& e) {
            errors[b] = e.what();
        }
    };
    const int t = std::max(1, std::min(opt.threads, nb));
    if (t <= 1) {
        for (int b = 0; b < nb; ++b) work(b);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i)
            pool.emplace_back([&, i] {
                for (int b = i; b < nb; b += t) work(b);
            });
        for (auto& th : pool) th.join();
    }
    for (int b = 0; b < nb; ++b)
        if (!errors[b].empty()) throw Error(ErrorKind::PreconditionViolated, "block " + std::to_string(b) + ": " + errors[b]);
    return out;
}

}  // namespace

std::variant<OddExpansion, StructureReport> detect_spb(const Graph& g, int k, const DetectOptions& opt) {
    inside_out_min_order(k);
    Blocks blocks = biconnected_components(g);
    auto outs = classify_all(g, blocks, k, BlindClass::B, true, opt);
    for (auto& o : outs)
        if (o.expansion) return *o.expansion;
    StructureReport rep;
    std::vector<TreeDecomposition> parts;
    for (auto& o : outs) {
        rep.blocks.push_back(o.status);
        parts.push_back(o.td);
    }
    rep.decomposition = glue(g, blocks, parts);
    return rep;
}

BlindDecision decide_blind_structure(const Graph& g, int k, BlindClass a, const DetectOptions& opt) {
    if (a == BlindClass::P) throw Error(ErrorKind::BadParameter, "class must be B or BP");
    if (a == BlindClass::B) inside_out_min_order(k);
    Blocks blocks = biconnected_components(g);
    auto outs = classify_all(g, blocks, k, a, a == BlindClass::B, opt);
    BlindDecision d;
    std::vector<TreeDecomposition> parts;
    for (auto& o : outs) {
        d.report.blocks.push_back(o.status);
        parts.push_back(o.td);
    }
    d.report.decomposition = glue(g, blocks, parts);
    for (auto& o : outs)
        if (o.expansion) {
            d.kind = BlindDecision::Kind::Expansion;
            d.expansion = o.expansion;
            return d;
        }
    for (auto& o : outs)
        if (o.status.status == "undecided") {
            d.kind = BlindDecision::Kind::Undecided;
            d.blocking = o.status.vertices;
            return d;
        }
    d.kind = BlindDecision::Kind::Decomposition;
    return d;
}

// ---------------------------------------------------------------------------------------

std::optional<Violation> validate_cross_wall(const Graph& g, const CrossWall& cw) {
    if (auto v = validate_wall(g, cw.wall)) return bad(0, "wall: " + v->message, v->witness);
    if (!is_clean(cw.wall)) return bad(1, "wall is not clean");
    HostSubgraph hw = wall_subgraph(cw.wall);
    for (auto* ear : {&cw.ear1, &cw.ear2})
        if (auto v = ear_shape(g, hw, *ear)) return bad(2, "ear: " + v->message, v->witness);
    std::set<Vertex> a(cw.ear1.begin(), cw.ear1.end());
    for (Vertex v : cw.ear2)
        if (a.count(v)) return bad(3, "ears share vertex " + vname(v), {v});
    auto corners = wall_corners(cw.wall);
    auto at = [&](Vertex v) { return static_cast<int>(std::find(corners.begin(), corners.end(), v) - corners.begin()); };
    int s1 = at(cw.ear1.front()), t1 = at(cw.ear1.back()), s2 = at(cw.ear2.front()), t2 = at(cw.ear2.back());
    if (s1 == 4 || t1 == 4 || s2 == 4 || t2 == 4) return bad(4, "ears must end at the corners");
    if ((s1 + 2) % 4 != t1 || (s2 + 2) % 4 != t2) return bad(4, "each ear must join opposite corners");
    return std::nullopt;
}

namespace {

// vertex-disjoint paths, sources[i] to some target; empty when fewer than all exist
std::vector<std::vector<Vertex>> disjoint_paths(const Graph& g, const std::vector<Vertex>& sources,
                                                const std::vector<Vertex>& targets, const std::vector<char>& blocked) {
    const int n = g.n();
    detail::Dinic d(2 * n + 2);
    const int S = 2 * n, T = 2 * n + 1;
    std::vector<char> is_t(n, 0);
    for (Vertex t : targets) is_t[t] = 1;
    for (int v = 0; v < n; ++v)
        if (!blocked[v]) d.add_arc(2 * v, 2 * v + 1, 1);
    for (Vertex s : sources) d.add_arc(S, 2 * s, 1);
    for (Vertex t : targets) d.add_arc(2 * t + 1, T, 1);
    for (auto& e : g.edges()) {
        if (blocked[e.u] || blocked[e.v]) continue;
        if (!is_t[e.u]) d.add_arc(2 * e.u + 1, 2 * e.v, 1);
        if (!is_t[e.v]) d.add_arc(2 * e.v + 1, 2 * e.u, 1);
    }
    if (d.max_flow(S, T) < static_cast<long long>(sources.size())) return {};
    std::vector<std::vector<Vertex>> out;
    for (Vertex s : sources) {
        std::vector<Vertex> p{s};
        int cur = 2 * s + 1;
        while (!is_t[p.back()]) {
            int nxt = -1;
            for (int a : d.out(cur))
                if ((a & 1) == 0 && d.flow_on(a) > 0 && d.head(a) < 2 * n) {
                    nxt = d.head(a);
                    break;
                }
            if (nxt < 0) return {};
            Vertex v = nxt / 2;
            auto it = std::find(p.begin(), p.end(), v);
            if (it != p.end()) p.erase(it + 1, p.end());
            else p.push_back(v);
            cur = 2 * v + 1;
            if (p.size() > static_cast<size_t>(n)) return {};
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

CrossWall find_cross_wall(const Graph& g, const OddExpansion& hint, int r) {
    if (r < 2) throw Error(ErrorKind::BadParameter, "cross-wall order must be at least 2");
    if (auto v = validate_expansion(g, hint)) throw Error(ErrorKind::PreconditionViolated, "hint: " + v->message);
    int m = 1;
    while (4 * m * m < hint.pattern.n()) ++m;
    const Generated u = single_crossing_grid(m);
    if (u.graph.n() != hint.pattern.n() || u.graph.edges() != hint.pattern.edges())
        throw Error(ErrorKind::BadParameter, "hint pattern is not a single-crossing grid");
    if (m < 2 * r + 2)
        throw Error(ErrorKind::OrderTooSmall, "a single-crossing grid of order " + std::to_string(m) +
                                                  " carries cross-walls up to order " + std::to_string(std::max(0, m / 2 - 1)));
    // pattern-level wall: wall vertex (i, c) at grid (2i, 2c), every wall edge a 2-path
    const Generated& el = elementary(r);
    auto at = [&](int i, int j) { return u.at(i, j); };
    Wall pw;
    pw.order = r;
    std::vector<char> on_wall(u.graph.n(), 0);
    for (Vertex v = 0; v < el.graph.n(); ++v) {
        auto [i, c] = el.coord[v];
        pw.branch.push_back(at(2 * i, 2 * c));
    }
    for (auto& e : el.graph.edges()) {
        auto [i1, c1] = el.coord[e.u];
        auto [i2, c2] = el.coord[e.v];
        pw.paths.push_back({at(2 * i1, 2 * c1), at(i1 + i2, c1 + c2), at(2 * i2, 2 * c2)});
    }
    for (auto& p : pw.paths)
        for (Vertex x : p) on_wall[x] = 1;
    auto corners = wall_corners(pw);
    const Vertex a = at(m, m), b = at(m, m + 1), c = at(m + 1, m + 1), d = at(m + 1, m);
    std::vector<char> blocked = on_wall;
    for (Vertex x : corners) blocked[x] = 0;
    Graph plain = grid(2 * m, 2 * m).graph;
    auto paths = disjoint_paths(plain, {a, b, c, d}, corners, blocked);
    if (paths.empty()) throw Error(ErrorKind::OrderTooSmall, "no routing from the crossing to the wall corners");
    auto idx = [&](Vertex x) { return static_cast<int>(std::find(corners.begin(), corners.end(), x) - corners.begin()); };
    if ((idx(paths[0].back()) + 2) % 4 != idx(paths[2].back()))
        throw Error(ErrorKind::OrderTooSmall, "routing pairs the crossing with adjacent corners");
    std::vector<Vertex> pe1 = reversed(paths[0]), pe2 = reversed(paths[1]);
    pe1.insert(pe1.end(), paths[2].begin(), paths[2].end());
    pe2.insert(pe2.end(), paths[3].begin(), paths[3].end());

    // lift through the hint: spanning trees of branch sets, medians at degree-3 points
    std::vector<std::vector<Vertex>> tadj(g.n());
    for (auto& t : bfs_trees(g, hint))
        for (auto [x, y] : t) {
            tadj[x].push_back(y);
            tadj[y].push_back(x);
        }
    auto img = [&](Vertex from, Vertex to) {
        int e = hint.pattern.edge_index(from, to);
        auto [p, q] = hint.edge_images[e];
        return hint.pattern.edge(e).u == from ? std::pair{p, q} : std::pair{q, p};
    };
    std::map<Vertex, std::vector<Vertex>> touching;  // pattern vertex -> neighbours used at its ends
    std::vector<std::vector<Vertex>> all_paths = pw.paths;
    all_paths.push_back(pe1);
    all_paths.push_back(pe2);
    for (auto& p : all_paths) {
        touching[p.front()].push_back(p[1]);
        touching[p.back()].push_back(p[p.size() - 2]);
    }
    std::map<Vertex, Vertex> centre;
    for (auto& [v, nb] : touching) {
        std::vector<Vertex> ends;
        for (Vertex y : nb) ends.push_back(img(v, y).first);
        if (ends.size() < 3) {
            centre[v] = ends[0];
            continue;
        }
        auto p01 = path_between_in_tree(tadj, ends[0], ends[1]);
        auto p02 = path_between_in_tree(tadj, ends[0], ends[2]);
        size_t i = 0;
        while (i + 1 < p01.size() && i + 1 < p02.size() && p01[i + 1] == p02[i + 1]) ++i;
        centre[v] = p01[i];
    }
    auto lift = [&](const std::vector<Vertex>& p) {
        std::vector<Vertex> out;
        Vertex cur = centre.at(p.front());
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            auto [x, y] = img(p[i], p[i + 1]);
            chain(out, path_between_in_tree(tadj, cur, x));
            out.push_back(y);
            cur = y;
        }
        chain(out, path_between_in_tree(tadj, cur, centre.at(p.back())));
        return out;
    };
    CrossWall cw;
    cw.wall.order = r;
    for (Vertex v : pw.branch) cw.wall.branch.push_back(centre.count(v) ? centre[v] : hint.branch[v][0]);
    for (auto& p : pw.paths) cw.wall.paths.push_back(lift(p));
    cw.ear1 = lift(pe1);
    cw.ear2 = lift(pe2);
    if (auto v = validate_cross_wall(g, cw))
        throw Error(ErrorKind::OrderTooSmall, "lifted cross-wall rejected (" + v->message + ")");
    return cw;
}

// ---------------------------------------------------------------------------------------

namespace {

struct SpcPlan {
    int i = 0;
    std::vector<Vertex> main_ear;   // ends go to (k,k) and (k+1,k+1)
    std::vector<Vertex> other_ear;  // ends go to (k,k+1) and (k+1,k)
    std::vector<Vertex> q;          // index 3: odd ear from main_ear to other_ear
};

std::optional<OddExpansion> spc_from_wall(const Graph& g, const Wall& w2, const SpcPlan& plan, int k) {
    const int m = 2 * k;
    WallGrid wg(w2);
    auto opts = wg.options();
    const Generated pattern = parity_crossing_grid(plan.i, k);
    auto grid_id = [&](int i, int j) { return (i - 1) * m + (j - 1); };
    const std::array<int, 4> centre{grid_id(k, k), grid_id(k, k + 1), grid_id(k + 1, k + 1), grid_id(k + 1, k)};
    const Vertex s1 = plan.main_ear.front(), t1 = plan.main_ear.back();
    const Vertex s2 = plan.other_ear.front(), t2 = plan.other_ear.back();
    const Vertex KK = pattern.at(k, k), K1K1 = pattern.at(k + 1, k + 1);
    for (int a0 = 0; a0 < 4; ++a0)
        for (int turn : {1, 3}) {
            int ga = centre[a0], gc = centre[(a0 + 2) % 4], gb = centre[(a0 + turn) % 4], gd = centre[(a0 + turn + 2) % 4];
            if (!opts[s1].count(ga) || !opts[t1].count(gc) || !opts[s2].count(gb) || !opts[t2].count(gd)) continue;
            auto s = wg.split({{s1, ga}, {t1, gc}, {s2, gb}, {t2, gd}});
            if (!s) continue;
            for (int sym = 0; sym < 8; ++sym) {
                auto map = [&](int gi) {
                    auto [x, y] = symmetry(sym, m, gi / m + 1, gi % m + 1);
                    return pattern.at(x, y);
                };
                if (map(ga) != KK || map(gc) != K1K1) continue;
                const Vertex B = map(gb), D = map(gd);
                const auto& P = plan.main_ear;
                const auto& R = plan.other_ear;
                const int lp = static_cast<int>(P.size()) - 1, lr = static_cast<int>(R.size()) - 1;
                std::vector<Partial> tries;
                if (plan.i == 1 || plan.i == 2) {
                    Partial r = from_split(pattern, *s, sym);
                    absorb(r, KK, P, 1, lp - 1);
                    if (lp >= 2) r.tree[KK].push_back({P[0], P[1]});
                    set_image(r, KK, K1K1, P[lp - 1], P[lp]);
                    if (plan.i == 1) {
                        absorb(r, B, R, 1, lr - 1);
                        if (lr >= 2) r.tree[B].push_back({R[0], R[1]});
                        set_image(r, B, D, R[lr - 1], R[lr]);
                        tries.push_back(std::move(r));
                    } else {
                        if (lr < 2) continue;
                        const Vertex X = pattern.named.at("x");
                        for (int cut = 1; cut < lr; ++cut) {
                            Partial t = r;
                            t.e.branch[X] = {R[cut]};
                            absorb(t, D, R, cut + 1, lr - 1);
                            if (cut + 1 <= lr - 1) t.tree[D].push_back({R[lr - 1], R[lr]});
                            set_image(t, B, X, R[cut - 1], R[cut]);
                            set_image(t, X, D, R[cut], R[cut + 1]);
                            absorb(t, B, R, 1, cut - 1);
                            if (cut - 1 >= 1) t.tree[B].push_back({R[0], R[1]});
                            tries.push_back(std::move(t));
                        }
                    }
                } else {
                    const Vertex X = pattern.named.at("x"), Y = pattern.named.at("y");
                    const auto& Q = plan.q;
                    const int i1 = static_cast<int>(std::find(P.begin(), P.end(), Q.front()) - P.begin());
                    const int i2 = static_cast<int>(std::find(R.begin(), R.end(), Q.back()) - R.begin());
                    const int lq = static_cast<int>(Q.size()) - 1;
                    // P: (k,k) gets P[0..c], y gets P[c+1..dd], (k+1,k+1) gets the rest;
                    // R: its start gets R[0..a], x gets R[a+1..b] plus Q minus its first vertex
                    for (int c = 0; c + 2 <= i1 && c <= 3; ++c)
                        for (int dd = c + 1; dd < i1 && dd <= c + 2; ++dd)
                            for (int a = std::max(0, i2 - 3); a < i2; ++a)
                                for (int b = i2; b < lr && b <= i2 + 2; ++b) {
                                    Partial t = from_split(pattern, *s, sym);
                                    absorb(t, KK, P, 1, c);
                                    if (c >= 1) t.tree[KK].push_back({P[0], P[1]});
                                    absorb(t, Y, P, c + 1, dd);
                                    absorb(t, K1K1, P, dd + 1, lp - 1);
                                    if (dd + 1 <= lp - 1) t.tree[K1K1].push_back({P[lp - 1], P[lp]});
                                    set_image(t, KK, Y, P[c], P[c + 1]);
                                    set_image(t, Y, K1K1, P[dd], P[dd + 1]);
                                    absorb(t, B, R, 1, a);
                                    if (a >= 1) t.tree[B].push_back({R[0], R[1]});
                                    absorb(t, X, R, a + 1, b);
                                    absorb(t, D, R, b + 1, lr - 1);
                                    if (b + 1 <= lr - 1) t.tree[D].push_back({R[lr - 1], R[lr]});
                                    for (int j = 1; j < lq; ++j) {
                                        t.e.branch[X].push_back(Q[j]);
                                        t.tree[X].push_back({Q[j], Q[j + 1]});
                                    }
                                    set_image(t, B, X, R[a], R[a + 1]);
                                    set_image(t, X, D, R[b], R[b + 1]);
                                    set_image(t, K1K1, X, Q[0], Q[1]);
                                    tries.push_back(std::move(t));
                                }
                }
                for (auto& t : tries)
                    if (auto ex = finish(g, std::move(t))) return ex;
            }
        }
    return std::nullopt;
}

}  // namespace

OddExpansion build_odd_spc_expansion(const Graph& g, const CrossWall& cw, int k) {
    if (is_bipartite(g)) throw Error(ErrorKind::BipartiteHost, "host graph is bipartite");
    if (auto v = validate_cross_wall(g, cw)) throw Error(ErrorKind::PreconditionViolated, "cross-wall: " + v->message);
    inside_out_min_order(k);
    auto col = wall_colour_map(cw.wall);
    bool odd1 = is_odd_wrt(col, cw.ear1), odd2 = is_odd_wrt(col, cw.ear2);
    std::vector<SpcPlan> plans;
    if (odd1 || odd2) {
        SpcPlan p;
        p.i = odd1 && odd2 ? 1 : 2;
        p.main_ear = odd1 ? cw.ear1 : cw.ear2;
        p.other_ear = odd1 ? cw.ear2 : cw.ear1;
        plans.push_back(p);
    } else {
        HostSubgraph h = union_of(wall_subgraph(cw.wall), {cw.ear1, cw.ear2});
        EarCertificate q = find_odd_ear(g, h);
        Vertex x = q.path.front(), y = q.path.back();
        auto where = [&](const std::vector<Vertex>& ear, Vertex v) {
            return static_cast<int>(std::find(ear.begin(), ear.end(), v) - ear.begin());
        };
        const std::vector<Vertex>* ears[2] = {&cw.ear1, &cw.ear2};
        bool handled = false;
        for (int j = 0; j < 2 && !handled; ++j) {
            const auto& e = *ears[j];
            int ix = where(e, x), iy = where(e, y);
            if (ix == static_cast<int>(e.size()) || iy == static_cast<int>(e.size())) continue;
            // both ends on one ear: swap its middle for the odd ear
            std::vector<Vertex> qq = q.path;
            if (ix > iy) {
                std::swap(ix, iy);
                qq = reversed(qq);
            }
            std::vector<Vertex> ne(e.begin(), e.begin() + ix);
            ne.insert(ne.end(), qq.begin(), qq.end());
            ne.insert(ne.end(), e.begin() + iy + 1, e.end());
            SpcPlan p;
            p.main_ear = ne;
            p.other_ear = *ears[1 - j];
            p.i = 2;
            plans.push_back(p);
            handled = true;
        }
        if (!handled) {
            for (int j = 0; j < 2; ++j) {
                const auto& e = *ears[j];
                const auto& o = *ears[1 - j];
                for (bool flipq : {false, true}) {
                    std::vector<Vertex> qq = flipq ? reversed(q.path) : q.path;
                    int i1 = where(e, qq.front()), i2 = where(o, qq.back());
                    if (i1 == static_cast<int>(e.size()) || i2 == static_cast<int>(o.size())) continue;
                    if (i2 == 0 || i2 + 1 == static_cast<int>(o.size())) continue;  // must sit inside the other ear
                    for (bool flipe : {false, true}) {
                        SpcPlan p;
                        p.i = 3;
                        p.main_ear = flipe ? reversed(e) : e;
                        p.other_ear = o;
                        p.q = qq;
                        plans.push_back(p);
                    }
                }
            }
            if (plans.empty())
                throw Error(ErrorKind::PreconditionViolated,
                            "odd ear ends away from the cross ears; rerouting it onto them is not supported");
        }
    }
    std::optional<OddExpansion> found;
    for (auto& plan : plans) {
        try {
            inside_out(cw.wall, k, [&](const Wall& w2) {
                found = spc_from_wall(g, w2, plan, k);
                return found.has_value();
            });
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::OrderTooSmall) throw;
        }
        if (found) {
            found->family = "pcross";
            found->params = {plan.i, k};
            return *found;
        }
    }
    throw Error(ErrorKind::PreconditionViolated, "no verified parity-crossing expansion from this cross-wall");
}

}  // namespace oddminor
