#include "oddminor/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oddminor {

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : tree) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::optional<Violation> validate_decomposition(const Graph& g, const TreeDecomposition& t) {
    const int k = t.size();
    auto fail = [](int c, std::vector<int> w, std::string msg) { return Violation{c, std::move(w), std::move(msg)}; };
    if (k == 0) {
        if (g.n() == 0) return std::nullopt;
        return fail(1, {0}, "no bags");
    }
    if (static_cast<int>(t.tree.size()) != k - 1) return fail(0, {}, "tree must have exactly nodes-1 edges");
    for (auto [a, b] : t.tree)
        if (a < 0 || b < 0 || a >= k || b >= k || a == b) return fail(0, {a, b}, "bad tree edge");
    if (t.root >= k) return fail(0, {t.root}, "root out of range");
    auto adj = t.adjacency();
    {
        std::vector<char> seen(k, 0);
        std::vector<int> st{0};
        seen[0] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++cnt;
                    st.push_back(v);
                }
        }
        if (cnt != k) return fail(0, {}, "tree is disconnected");
    }
    std::vector<std::vector<int>> occ(g.n());
    for (int i = 0; i < k; ++i)
        for (Vertex v : t.bags[i]) {
            if (v < 0 || v >= g.n()) return fail(1, {v}, "bag holds an unknown vertex");
            occ[v].push_back(i);
        }
    for (int v = 0; v < g.n(); ++v)
        if (occ[v].empty()) return fail(1, {v}, "vertex " + std::to_string(v) + " is in no bag");
    std::vector<std::vector<char>> member(k);
    for (int i = 0; i < k; ++i) {
        member[i].assign(g.n(), 0);
        for (Vertex v : t.bags[i]) member[i][v] = 1;
    }
    for (auto& e : g.edges()) {
        bool ok = false;
        for (int i : occ[e.u])
            if (member[i][e.v]) {
                ok = true;
                break;
            }
        if (!ok) return fail(2, {e.u, e.v}, "edge not inside any bag");
    }
    for (int v = 0; v < g.n(); ++v) {
        // occurrences must induce a connected subtree
        std::vector<char> seen(k, 0);
        std::vector<int> st{occ[v][0]};
        seen[occ[v][0]] = 1;
        size_t cnt = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int w : adj[u])
                if (!seen[w] && member[w][v]) {
                    seen[w] = 1;
                    ++cnt;
                    st.push_back(w);
                }
        }
        if (cnt != occ[v].size()) return fail(3, {v}, "bags of vertex " + std::to_string(v) + " are not connected");
    }
    return std::nullopt;
}

Metrics metrics(const TreeDecomposition& t) {
    Metrics m;
    for (auto& b : t.bags) m.width = std::max(m.width, static_cast<int>(b.size()) - 1);
    for (auto [a, b] : t.tree) {
        std::vector<Vertex> inter;
        std::set_intersection(t.bags[a].begin(), t.bags[a].end(), t.bags[b].begin(), t.bags[b].end(),
                              std::back_inserter(inter));
        m.adhesion = std::max(m.adhesion, static_cast<int>(inter.size()));
    }
    return m;
}

Blocks biconnected_components(const Graph& g) {
    const int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::vector<int>> raw;  // edge lists
    std::vector<std::vector<Vertex>> isolated;
    int timer = 0;
    struct Frame {
        Vertex v;
        int parent_edge;
        int i;
    };
    std::vector<int> estack;
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        disc[s] = low[s] = timer++;
        if (g.degree(s) == 0) {
            isolated.push_back({s});
            continue;
        }
        std::vector<Frame> st{{s, -1, 0}};
        while (!st.empty()) {
            Frame& f = st.back();
            Vertex v = f.v;
            if (f.i < g.degree(v)) {
                Vertex w = g.neighbors(v)[f.i];
                int eid = g.incident(v)[f.i];
                ++f.i;
                if (eid == f.parent_edge) continue;
                if (disc[w] < 0) {
                    estack.push_back(eid);
                    disc[w] = low[w] = timer++;
                    st.push_back({w, eid, 0});
                } else if (disc[w] < disc[v]) {
                    estack.push_back(eid);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                int pe = f.parent_edge;
                st.pop_back();
                if (st.empty()) break;
                Vertex p = st.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    std::vector<int> block;
                    while (true) {
                        int e = estack.back();
                        estack.pop_back();
                        block.push_back(e);
                        if (e == pe) break;
                    }
                    raw.push_back(std::move(block));
                }
            }
        }
    }
    struct Item {
        std::vector<Vertex> verts;
        std::vector<int> edges;
    };
    std::vector<Item> items;
    for (auto& es : raw) {
        Item it;
        for (int e : es) {
            it.verts.push_back(g.edge(e).u);
            it.verts.push_back(g.edge(e).v);
        }
        std::sort(it.verts.begin(), it.verts.end());
        it.verts.erase(std::unique(it.verts.begin(), it.verts.end()), it.verts.end());
        it.edges = es;
        std::sort(it.edges.begin(), it.edges.end());
        items.push_back(std::move(it));
    }
    for (auto& iso : isolated) items.push_back({iso, {}});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.verts < b.verts; });
    Blocks out;
    out.is_cut.assign(n, 0);
    out.block_of_edge.assign(g.m(), -1);
    std::vector<int> count(n, 0);
    for (int i = 0; i < static_cast<int>(items.size()); ++i) {
        for (Vertex v : items[i].verts) count[v]++;
        for (int e : items[i].edges) out.block_of_edge[e] = i;
        out.vertices.push_back(std::move(items[i].verts));
        out.edges.push_back(std::move(items[i].edges));
    }
    for (int v = 0; v < n; ++v) out.is_cut[v] = count[v] >= 2;
    return out;
}

namespace {

TreeDecomposition blocks_to_decomposition(const Graph& g, const Blocks& b) {
    TreeDecomposition t;
    t.bags = b.vertices;
    std::vector<std::vector<int>> at(g.n());
    for (int i = 0; i < t.size(); ++i)
        for (Vertex v : t.bags[i]) at[v].push_back(i);
    for (int v = 0; v < g.n(); ++v)
        for (size_t j = 1; j < at[v].size(); ++j) t.tree.push_back({at[v][j - 1], at[v][j]});
    // join components through empty adhesions
    std::vector<int> comp(t.size(), -1);
    auto adj = t.adjacency();
    std::vector<int> reps;
    for (int s = 0; s < t.size(); ++s) {
        if (comp[s] >= 0) continue;
        reps.push_back(s);
        std::vector<int> st{s};
        comp[s] = s;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int w : adj[u])
                if (comp[w] < 0) {
                    comp[w] = s;
                    st.push_back(w);
                }
        }
    }
    for (size_t j = 1; j < reps.size(); ++j) t.tree.push_back({reps[j - 1], reps[j]});
    if (g.n() > 0) t.root = at[0].front();
    return t;
}

}  // namespace

TreeDecomposition block_cut_decomposition(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "block_cut_decomposition needs a connected graph");
    return blocks_to_decomposition(g, biconnected_components(g));
}

TreeDecomposition block_cut_forest(const Graph& g) { return blocks_to_decomposition(g, biconnected_components(g)); }

bool globally_bipartite_by_cycles(const Graph& g, const std::vector<Vertex>& x) {
    const int n = g.n();
    if (n > 62) throw Error(ErrorKind::TooLarge, "cycle enumeration oracle is for small graphs");
    std::vector<char> inx(n, 0);
    for (Vertex v : x) inx[v] = 1;
    std::vector<char> on(n, 0);
    bool found = false;
    // cycles are enumerated from their smallest vertex
    std::function<void(Vertex, Vertex, int, int)> dfs = [&](Vertex s, Vertex v, int len, int hits) {
        if (found) return;
        for (Vertex w : g.neighbors(v)) {
            if (w == s && len >= 3) {
                if (len % 2 == 1 && hits >= 2) {
                    found = true;
                    return;
                }
                continue;
            }
            if (w <= s || on[w]) continue;
            on[w] = 1;
            dfs(s, w, len + 1, hits + inx[w]);
            on[w] = 0;
            if (found) return;
        }
    };
    for (Vertex s = 0; s < n && !found; ++s) {
        on[s] = 1;
        dfs(s, s, 1, inx[s]);
        on[s] = 0;
    }
    return !found;
}

namespace {

// Parity questions about simple paths, decided along the block-cut chain.
// A 2-connected non-bipartite block joins any two of its vertices by paths of
// both parities, so only a block that must be crossed through a given interior
// vertex needs a search.
struct Segment {
    std::vector<Vertex> verts;
    Vertex in, out;
};

// blocks crossed by every a-b path, in order; nullopt when a and b are apart
std::optional<std::vector<Segment>> block_chain(const Graph& g, Vertex a, Vertex b) {
    Blocks bl = biconnected_components(g);
    const int nb = static_cast<int>(bl.vertices.size());
    // block-cut tree: blocks 0..nb-1, vertex v is node nb+v
    std::vector<std::vector<int>> adj(nb + g.n());
    for (int i = 0; i < nb; ++i)
        for (Vertex v : bl.vertices[i]) {
            adj[i].push_back(nb + v);
            adj[nb + v].push_back(i);
        }
    std::vector<int> par(adj.size(), -2);
    std::vector<int> q{nb + a};
    par[nb + a] = -1;
    for (size_t h = 0; h < q.size() && par[nb + b] == -2; ++h)
        for (int w : adj[q[h]])
            if (par[w] == -2) {
                par[w] = q[h];
                q.push_back(w);
            }
    if (par[nb + b] == -2) return std::nullopt;
    std::vector<int> nodes;
    for (int x = nb + b; x != -1; x = par[x]) nodes.push_back(x);
    std::reverse(nodes.begin(), nodes.end());
    std::vector<Segment> out;
    for (size_t i = 1; i + 1 < nodes.size(); i += 2)
        out.push_back({bl.vertices[nodes[i]], nodes[i - 1] - nb, nodes[i + 1] - nb});
    return out;
}

// bit p set when parity p is possible
unsigned shift(unsigned set, unsigned by) {
    unsigned out = 0;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            if ((set >> p & 1) && (by >> q & 1)) out |= 1u << (p ^ q);
    return out;
}

// parities of in-out paths inside one block, no vertex constraint
unsigned segment_parities(const Graph& g, const Segment& s) {
    if (s.verts.size() == 2) return 2u;
    Subgraph blk = induced_subgraph(g, s.verts);
    auto col = bipartition_or_odd_cycle(blk.graph);
    if (auto* c = std::get_if<TwoColouring>(&col)) {
        auto li = std::lower_bound(s.verts.begin(), s.verts.end(), s.in) - s.verts.begin();
        auto lo = std::lower_bound(s.verts.begin(), s.verts.end(), s.out) - s.verts.begin();
        return 1u << (c->colour[li] != c->colour[lo] ? 1 : 0);
    }
    return 3u;
}

Graph without_vertex(const Graph& g, Vertex x, std::vector<Vertex>& to_host) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.n(); ++v)
        if (v != x) keep.push_back(v);
    Subgraph s = induced_subgraph(g, keep);
    to_host = std::move(s.to_host);
    return std::move(s.graph);
}

struct Split {
    Vertex s, t;
    std::vector<Vertex> side;  // component of g - {s,t} holding v
};

// separation pair cutting the component of v off from c and d; the smallest
// such component with two or more vertices, so both halves shrink
std::optional<Split> find_split(const Graph& g, Vertex c, Vertex d, Vertex v) {
    const int n = g.n();
    std::optional<Split> best;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (s == v) continue;
        std::vector<Vertex> to_host;
        Graph h = without_vertex(g, s, to_host);
        Blocks bl = biconnected_components(h);
        for (Vertex th = 0; th < h.n(); ++th) {
            Vertex t = to_host[th];
            if (!bl.is_cut[th] || t == v || t < s) continue;
            std::fill(seen.begin(), seen.end(), 0);
            seen[s] = seen[t] = 1;
            std::vector<Vertex> comp{v};
            seen[v] = 1;
            for (size_t i = 0; i < comp.size(); ++i)
                for (Vertex w : g.neighbors(comp[i]))
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            if (seen[c] && c != s && c != t) continue;
            if (seen[d] && d != s && d != t) continue;
            bool ends = (c == s || c == t) && (d == s || d == t);
            int k = static_cast<int>(comp.size());
            if (k < 2 || (ends && k + 2 >= n)) continue;
            if (!best || k < static_cast<int>(best->side.size())) best = Split{s, t, std::move(comp)};
        }
    }
    return best;
}

// Blocks that must be crossed through an interior vertex are searched by
// branching on the first step. A short branching attempt settles most cases;
// when it runs out, a separation pair around v splits the question exactly.
class ThroughSearch {
public:
    // odd cycle through u and v, g 2-connected
    bool odd_cycle(const Graph& g, Vertex u, Vertex v) {
        for (Vertex y : g.neighbors(u)) {
            std::vector<std::pair<Vertex, Vertex>> es;
            for (auto& e : g.edges())
                if (!(e == make_edge(u, y))) es.push_back({e.u, e.v});
            if (path_through(Graph(g.n(), es), u, y, v, 0)) return true;
        }
        return false;
    }

private:
    struct OutOfSteps {};
    static constexpr long kAttempt = 500;

    // some simple a-b path through v has parity want (v == a or b means no constraint)
    bool path_through(const Graph& g, Vertex a, Vertex b, Vertex v, int want) {
        if (v != a && v != b && g.degree(v) == 2) {
            // the path runs s-v-t, so an edge st is of no use to it
            Vertex s = g.neighbors(v)[0], t = g.neighbors(v)[1];
            if (g.has_edge(s, t)) {
                std::vector<std::pair<Vertex, Vertex>> es;
                for (auto& e : g.edges())
                    if (!(e == make_edge(s, t))) es.push_back({e.u, e.v});
                return path_through(Graph(g.n(), es), a, b, v, want);
            }
        }
        auto chain = block_chain(g, a, b);
        if (!chain) return false;
        int at = -1;
        bool on_chain = v == a || v == b;
        for (size_t i = 0; i < chain->size() && !on_chain && at < 0; ++i) {
            const Segment& s = (*chain)[i];
            if (v == s.out) on_chain = true;
            else if (std::binary_search(s.verts.begin(), s.verts.end(), v)) at = static_cast<int>(i);
        }
        if (!on_chain && at < 0) return false;
        unsigned rest = 1u;
        for (size_t i = 0; i < chain->size(); ++i)
            if (static_cast<int>(i) != at) rest = shift(rest, segment_parities(g, (*chain)[i]));
        if (at < 0) return rest >> want & 1;
        const Segment& s = (*chain)[at];
        unsigned own = segment_parities(g, s);
        if (own != 3u) return shift(rest, own) >> want & 1;  // bipartite block: every route has the colour parity
        Subgraph blk = induced_subgraph(g, s.verts);
        auto idx = [&](Vertex x) { return static_cast<Vertex>(std::lower_bound(s.verts.begin(), s.verts.end(), x) - s.verts.begin()); };
        for (int p = 0; p < 2; ++p)
            if ((rest >> p & 1) && block_through(blk.graph, idx(s.in), idx(s.out), idx(v), want ^ p)) return true;
        return false;
    }

    // 2-connected non-bipartite g, v strictly inside: some c-d path through v has parity want
    bool block_through(const Graph& g, Vertex c, Vertex d, Vertex v, int want) {
        if (trial_) {
            if (--left_ < 0) throw OutOfSteps{};
            return branch(g, c, d, v, want);
        }
        trial_ = true;
        left_ = kAttempt;
        try {
            bool r = branch(g, c, d, v, want);
            trial_ = false;
            return r;
        } catch (const OutOfSteps&) {
            trial_ = false;
        }
        if (auto sp = find_split(g, c, d, v)) return split(g, c, d, v, want, *sp);
        return branch(g, c, d, v, want);
    }

    bool branch(const Graph& g, Vertex c, Vertex d, Vertex v, int want) {
        if (g.degree(d) < g.degree(c)) std::swap(c, d);
        std::vector<Vertex> to_host;
        Graph h = without_vertex(g, c, to_host);
        auto local = [&](Vertex x) { return static_cast<Vertex>(x > c ? x - 1 : x); };
        for (Vertex w : g.neighbors(c)) {
            if (w == d) continue;
            if (path_through(h, local(w), local(d), local(v), want ^ 1)) return true;
        }
        return false;
    }

    // every c-d path through v crosses the side from s to t
    bool split(const Graph& g, Vertex c, Vertex d, Vertex v, int want, const Split& sp) {
        std::vector<Vertex> inner = sp.side;
        inner.push_back(sp.s);
        inner.push_back(sp.t);
        std::sort(inner.begin(), inner.end());
        Subgraph in = induced_subgraph(g, inner);
        auto at = [&](Vertex x) { return static_cast<Vertex>(std::lower_bound(inner.begin(), inner.end(), x) - inner.begin()); };
        bool ends = (c == sp.s || c == sp.t) && (d == sp.s || d == sp.t);
        if (ends) return path_through(in.graph, at(c), at(d), at(v), want);
        std::vector<char> drop(g.n(), 0);
        for (Vertex x : sp.side) drop[x] = 1;
        std::vector<Vertex> outer;
        for (Vertex x = 0; x < g.n(); ++x)
            if (!drop[x]) outer.push_back(x);
        Subgraph out = induced_subgraph(g, outer);
        auto ot = [&](Vertex x) { return static_cast<Vertex>(std::lower_bound(outer.begin(), outer.end(), x) - outer.begin()); };
        // the side shrinks to one vertex z on a path s-z-t
        std::vector<std::pair<Vertex, Vertex>> es;
        for (auto& e : out.graph.edges()) es.push_back({e.u, e.v});
        Vertex z = out.graph.n();
        es.push_back({ot(sp.s), z});
        es.push_back({ot(sp.t), z});
        Graph og(z + 1, es);
        for (int p = 0; p < 2; ++p)
            if (path_through(in.graph, at(sp.s), at(sp.t), at(v), p) && path_through(og, ot(c), ot(d), z, want ^ p)) return true;
        return false;
    }

    bool trial_ = false;
    long left_ = 0;
};

}  // namespace

bool is_globally_bipartite(const Graph& g, const std::vector<Vertex>& x, bool verify) {
    std::vector<char> inx(g.n(), 0);
    for (Vertex v : x) inx[v] = 1;
    Blocks b = biconnected_components(g);
    for (size_t i = 0; i < b.vertices.size(); ++i) {
        if (b.edges[i].size() < 3) continue;  // bridges and isolated vertices
        int hits = 0;
        for (Vertex v : b.vertices[i]) hits += inx[v];
        if (hits <= 1) continue;
        Subgraph blk = induced_subgraph(g, b.vertices[i]);
        if (is_bipartite(blk.graph)) continue;
        // a non-bipartite block with two marked vertices need not hold an odd
        // cycle through both of them, so those pairs are decided one by one
        std::vector<Vertex> lx;
        for (int j = 0; j < blk.graph.n(); ++j)
            if (inx[blk.to_host[j]]) lx.push_back(j);
        bool ok = true;
        if (verify && blk.graph.n() <= 12) {
            ok = globally_bipartite_by_cycles(blk.graph, lx);
        } else {
            ThroughSearch search;
            for (size_t p = 0; p < lx.size() && ok; ++p)
                for (size_t q = p + 1; q < lx.size() && ok; ++q)
                    if (search.odd_cycle(blk.graph, lx[p], lx[q])) ok = false;
        }
        if (!ok) return false;
    }
    return true;
}

std::optional<BlindClass> parse_blind_class(const std::string& s) {
    if (s == "B") return BlindClass::B;
    if (s == "P") return BlindClass::P;
    if (s == "BP" || s == "B_or_P") return BlindClass::BP;
    return std::nullopt;
}

std::string blind_class_name(BlindClass a) {
    switch (a) {
        case BlindClass::B: return "B";
        case BlindClass::P: return "P";
        case BlindClass::BP: return "BP";
    }
    return "?";
}

bool in_blind_class(const Graph& g, const std::vector<Vertex>& bag, BlindClass a) {
    auto planar = [&] { return is_planar(torso(g, bag).graph).planar; };
    switch (a) {
        case BlindClass::B: return is_globally_bipartite(g, bag);
        case BlindClass::P: return planar();
        case BlindClass::BP: return is_globally_bipartite(g, bag) || planar();
    }
    return false;
}

int blind_width(const Graph& g, const TreeDecomposition& t, BlindClass a) {
    int best = 0;
    for (auto& bag : t.bags)
        if (static_cast<int>(bag.size()) > best && !in_blind_class(g, bag, a)) best = static_cast<int>(bag.size());
    return best;
}

int blind_width_oracle(const Graph& g, BlindClass a) {
    const int n = g.n();
    if (n > 8) throw Error(ErrorKind::TooLarge, "blind_width_oracle handles at most 8 vertices");
    if (n == 0) return 0;
    const int full = (1 << n) - 1;
    std::vector<int> nb(n, 0);
    for (auto& e : g.edges()) {
        nb[e.u] |= 1 << e.v;
        nb[e.v] |= 1 << e.u;
    }
    auto nbhd = [&](int mask) {
        int r = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) r |= nb[v];
        return r & ~mask;
    };
    std::vector<signed char> cls(1 << n, -1);
    auto in_cls = [&](int mask) {
        if (cls[mask] < 0) {
            std::vector<Vertex> bag;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) bag.push_back(v);
            cls[mask] = in_blind_class(g, bag, a) ? 1 : 0;
        }
        return cls[mask] == 1;
    };
    auto components = [&](int mask) {
        std::vector<int> comps;
        int rest = mask;
        while (rest) {
            int c = rest & -rest, frontier = c;
            while (frontier) {
                int grow = nbhd(c) & mask & ~c;
                frontier = grow;
                c |= grow;
            }
            comps.push_back(c);
            rest &= ~c;
        }
        return comps;
    };

    for (int w = 0; w <= n; ++w) {
        auto allowed = [&](int mask) { return __builtin_popcount(mask) <= w || in_cls(mask); };
        std::vector<signed char> memo(1 << (2 * n), -1);
        std::function<bool(int, int)> solve = [&](int S, int U) -> bool {
            if (U == 0) return true;
            signed char& m = memo[S | (U << n)];
            if (m >= 0) return m;
            bool ok = false;
            for (int yu = U; yu && !ok; yu = (yu - 1) & U) {
                int Y = S | yu;
                if (!allowed(Y)) continue;
                auto comps = components(U & ~yu);
                const int c = static_cast<int>(comps.size());
                // a group of components can hang below Y with some separator between N(group) and Y
                std::vector<signed char> group_ok(1 << c, -1);
                auto gok = [&](int gm) {
                    if (group_ok[gm] < 0) {
                        int gamma = 0;
                        for (int j = 0; j < c; ++j)
                            if (gm >> j & 1) gamma |= comps[j];
                        int need = nbhd(gamma);
                        int extra = Y & ~need;
                        bool any = false;
                        for (int e = extra;; e = (e - 1) & extra) {
                            if (solve(need | e, gamma)) {
                                any = true;
                                break;
                            }
                            if (e == 0) break;
                        }
                        group_ok[gm] = any;
                    }
                    return group_ok[gm] == 1;
                };
                std::vector<signed char> cover(1 << c, -1);
                std::function<bool(int)> can = [&](int rest) -> bool {
                    if (rest == 0) return true;
                    if (cover[rest] >= 0) return cover[rest];
                    int low = rest & -rest;
                    int others = rest & ~low;
                    bool r = false;
                    for (int sub = others;; sub = (sub - 1) & others) {
                        if (gok(sub | low) && can(others & ~sub)) {
                            r = true;
                            break;
                        }
                        if (sub == 0) break;
                    }
                    cover[rest] = r;
                    return r;
                };
                ok = can((1 << c) - 1);
            }
            m = ok;
            return ok;
        };
        if (solve(0, full)) return w;
    }
    return n;
}

TreeDecomposition trivial_decomposition(const Graph& g) {
    TreeDecomposition t;
    t.bags.emplace_back(g.n());
    std::iota(t.bags[0].begin(), t.bags[0].end(), 0);
    t.root = 0;
    return t;
}

}  // namespace oddminor
