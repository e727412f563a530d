#include "oddminor/walls.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace oddminor {

const Generated& elementary(int k) {
    static std::mutex mu;
    static std::map<int, Generated> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, elementary_wall(k)).first;
    return it->second;
}

namespace {

// coordinate lookup for an elementary wall
struct Elem {
    const Generated* e;
    int k;
    std::vector<int> idx;

    explicit Elem(int k_) : e(&elementary(k_)), k(k_), idx((k_ + 2) * (2 * k_ + 2), -1) {
        for (Vertex v = 0; v < e->graph.n(); ++v) idx[e->coord[v].first * (2 * k + 2) + e->coord[v].second] = v;
    }
    const Graph& g() const { return e->graph; }
    Vertex at(int r, int c) const {
        if (r < 1 || r > k || c < 1 || c > 2 * k) return -1;
        return idx[r * (2 * k + 2) + c];
    }
    int row(Vertex v) const { return e->coord[v].first; }
    int col(Vertex v) const { return e->coord[v].second; }
};

// host vertex sequence along an elementary walk
std::vector<Vertex> expand(const Wall& w, const Graph& eg, const std::vector<Vertex>& walk) {
    std::vector<Vertex> out;
    if (walk.empty()) return out;
    out.push_back(w.branch[walk[0]]);
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
        int e = eg.edge_index(walk[i], walk[i + 1]);
        if (e < 0) throw Error(ErrorKind::PreconditionViolated, "walk leaves the elementary wall");
        const auto& p = w.paths[e];
        if (eg.edge(e).u == walk[i])
            out.insert(out.end(), p.begin() + 1, p.end());
        else
            out.insert(out.end(), p.rbegin() + 1, p.rend());
    }
    return out;
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Vertex> elem_corners(const Elem& el) {
    std::vector<Vertex> top, bottom;
    for (int c = 1; c <= 2 * el.k; ++c) {
        if (el.at(1, c) >= 0) top.push_back(el.at(1, c));
        if (el.at(el.k, c) >= 0) bottom.push_back(el.at(el.k, c));
    }
    return {top.front(), top.back(), bottom.back(), bottom.front()};
}

// cyclic elementary perimeter from the top-left corner, heading along row 1
std::vector<Vertex> elem_perimeter(const Elem& el) {
    const int k = el.k;
    auto on = [&](Vertex v) {
        int r = el.row(v), c = el.col(v);
        return r == 1 || r == k || c <= 2 || c >= 2 * k - 1;
    };
    Vertex start = elem_corners(el)[0];
    std::vector<Vertex> cyc{start};
    Vertex prev = -1, cur = start;
    while (true) {
        Vertex nxt = -1;
        for (Vertex u : el.g().neighbors(cur)) {
            if (!on(u) || u == prev) continue;
            if (prev < 0 && el.row(u) != 1) continue;
            nxt = u;
            break;
        }
        if (nxt < 0 || nxt == start) break;
        cyc.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return cyc;
}

Graph wall_host_graph(const Wall& w, std::vector<Vertex>* to_host) {
    Subgraph s = wall_graph(w);
    if (to_host) *to_host = s.to_host;
    return s.graph;
}

}  // namespace

std::vector<Vertex> wall_vertices(const Wall& w) {
    std::vector<Vertex> all(w.branch.begin(), w.branch.end());
    for (auto& p : w.paths) all.insert(all.end(), p.begin(), p.end());
    return sorted_unique(all);
}

std::vector<Vertex> wall_branch_vertices(const Wall& w) {
    const Graph& eg = elementary(w.order).graph;
    std::vector<Vertex> r;
    for (Vertex v = 0; v < eg.n(); ++v)
        if (eg.degree(v) == 3) r.push_back(w.branch[v]);
    return sorted_unique(r);
}

std::vector<Vertex> wall_corners(const Wall& w) {
    Elem el(w.order);
    std::vector<Vertex> r;
    for (Vertex v : elem_corners(el)) r.push_back(w.branch[v]);
    return r;
}

std::vector<Vertex> wall_perimeter(const Wall& w) {
    Elem el(w.order);
    auto cyc = elem_perimeter(el);
    cyc.push_back(cyc.front());
    auto out = expand(w, el.g(), cyc);
    out.pop_back();
    return out;
}

std::vector<Vertex> wall_row(const Wall& w, int i) {
    Elem el(w.order);
    std::vector<Vertex> walk;
    for (int c = 1; c <= 2 * w.order; ++c)
        if (el.at(i, c) >= 0) walk.push_back(el.at(i, c));
    return sorted_unique(expand(w, el.g(), walk));
}

std::vector<Vertex> wall_column(const Wall& w, int j) {
    Elem el(w.order);
    const Graph& eg = el.g();
    std::vector<Vertex> out;
    for (int e = 0; e < eg.m(); ++e) {
        auto [a, b] = eg.edge(e);
        auto in_col = [&](Vertex v) { return el.col(v) == 2 * j - 1 || el.col(v) == 2 * j; };
        if (in_col(a) && in_col(b)) out.insert(out.end(), w.paths[e].begin(), w.paths[e].end());
    }
    return sorted_unique(out);
}

std::vector<Vertex> central_brick(const Wall& w, std::vector<Vertex>* branch_six) {
    if (w.order % 2 != 0) throw Error(ErrorKind::BadParameter, "central brick needs an even order");
    const int k = w.order / 2;
    Elem el(w.order);
    const int c = k % 2 == 1 ? 2 * k : 2 * k - 1;
    std::vector<Vertex> six{el.at(k, c), el.at(k, c + 1), el.at(k, c + 2), el.at(k + 1, c + 2), el.at(k + 1, c + 1),
                            el.at(k + 1, c)};
    if (branch_six) {
        branch_six->clear();
        for (Vertex v : six) branch_six->push_back(w.branch[v]);
    }
    six.push_back(six.front());
    auto out = expand(w, el.g(), six);
    out.pop_back();
    return out;
}

Subgraph wall_graph(const Wall& w) {
    auto verts = wall_vertices(w);
    std::map<Vertex, int> loc;
    for (size_t i = 0; i < verts.size(); ++i) loc[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto& p : w.paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) es.push_back({loc[p[i]], loc[p[i + 1]]});
    return {Graph(static_cast<int>(verts.size()), es), verts};
}

std::optional<Violation> validate_wall(const Graph& g, const Wall& w) {
    auto bad = [](int c, std::vector<int> wit, std::string msg) {
        return std::optional<Violation>(Violation{c, std::move(wit), std::move(msg)});
    };
    if (w.order < 2) return bad(0, {}, "wall order below 2");
    const Graph& eg = elementary(w.order).graph;
    if (static_cast<int>(w.branch.size()) != eg.n() || static_cast<int>(w.paths.size()) != eg.m())
        return bad(0, {}, "branch or path map has the wrong size");
    std::vector<int> owner(g.n(), -1);  // -2 branch image, else path id
    for (Vertex v = 0; v < eg.n(); ++v) {
        Vertex h = w.branch[v];
        if (h < 0 || h >= g.n()) return bad(1, {v}, "branch image out of range");
        if (owner[h] != -1) return bad(1, {v, h}, "two branch images coincide");
        owner[h] = -2;
    }
    for (int e = 0; e < eg.m(); ++e) {
        const auto& p = w.paths[e];
        if (p.size() < 2) return bad(2, {e}, "path too short");
        if (p.front() != w.branch[eg.edge(e).u] || p.back() != w.branch[eg.edge(e).v])
            return bad(2, {e}, "path does not join the images of its edge's ends");
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] < 0 || p[i] >= g.n() || p[i + 1] < 0 || p[i + 1] >= g.n() || !g.has_edge(p[i], p[i + 1]))
                return bad(3, {e, static_cast<int>(i)}, "path step is not a host edge");
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (owner[p[i]] == -2) return bad(4, {e, p[i]}, "path runs through a branch image");
            if (owner[p[i]] >= 0) return bad(4, {e, owner[p[i]], p[i]}, "paths share an internal vertex");
            owner[p[i]] = e;
        }
    }
    return std::nullopt;
}

std::vector<int> wall_colouring(const Wall& w) {
    std::vector<Vertex> to_host;
    Graph h = wall_host_graph(w, &to_host);
    auto r = bipartition_or_odd_cycle(h);
    if (!std::holds_alternative<TwoColouring>(r)) return {};
    const auto& col = std::get<TwoColouring>(r).colour;
    std::vector<int> out(h.n());
    for (int i = 0; i < h.n(); ++i) out[i] = col[i];
    // components other than the one of the first branch image do not occur: walls are connected
    auto need = wall_branch_vertices(w);
    for (Vertex c : wall_corners(w)) need.push_back(c);
    int want = -1;
    for (Vertex v : need) {
        int c = col[std::lower_bound(to_host.begin(), to_host.end(), v) - to_host.begin()];
        if (want < 0) want = c;
        if (c != want) return {};
    }
    return out;
}

bool is_clean(const Wall& w) { return !wall_colouring(w).empty(); }

Wall identity_wall(int k) {
    const Graph& eg = elementary(k).graph;
    Wall w;
    w.order = k;
    for (Vertex v = 0; v < eg.n(); ++v) w.branch.push_back(v);
    for (auto& e : eg.edges()) w.paths.push_back({e.u, e.v});
    return w;
}

WallFixture subdivided_wall(int k, const std::vector<int>& lengths) {
    const Graph& eg = elementary(k).graph;
    if (static_cast<int>(lengths.size()) != eg.m()) throw Error(ErrorKind::BadParameter, "one length per elementary edge");
    WallFixture f;
    f.wall = identity_wall(k);
    int n = eg.n();
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int e = 0; e < eg.m(); ++e) {
        if (lengths[e] < 1) throw Error(ErrorKind::BadParameter, "path lengths must be positive");
        std::vector<Vertex> p{eg.edge(e).u};
        for (int i = 1; i < lengths[e]; ++i) p.push_back(n++);
        p.push_back(eg.edge(e).v);
        for (size_t i = 0; i + 1 < p.size(); ++i) es.push_back({p[i], p[i + 1]});
        f.wall.paths[e] = std::move(p);
    }
    f.graph = Graph(n, es);
    return f;
}

Wall subwall(const Wall& w, int row0, int col0, int h) {
    const int n = w.order;
    if (h < 2 || row0 < 1 || col0 < 1 || row0 + h - 1 > n || col0 + h - 1 > n)
        throw Error(ErrorKind::BadParameter, "subwall outside the wall");
    Elem big(n), small(h);
    const Graph& bg = big.g();
    // region, then prune degree <= 1
    std::vector<char> in(bg.n(), 0);
    for (Vertex v = 0; v < bg.n(); ++v) {
        int r = big.row(v), c = big.col(v);
        in[v] = r >= row0 && r <= row0 + h - 1 && c >= 2 * col0 - 1 && c <= 2 * (col0 + h - 1);
    }
    for (bool again = true; again;) {
        again = false;
        for (Vertex v = 0; v < bg.n(); ++v) {
            if (!in[v]) continue;
            int d = 0;
            for (Vertex u : bg.neighbors(v)) d += in[u];
            if (d <= 1) {
                in[v] = 0;
                again = true;
            }
        }
    }
    const bool mirror = row0 % 2 == 0;
    Wall s;
    s.order = h;
    const Graph& sg = small.g();
    s.branch.assign(sg.n(), -1);
    std::vector<Vertex> big_of(sg.n(), -1);
    int count = 0;
    for (Vertex v = 0; v < bg.n(); ++v) {
        if (!in[v]) continue;
        ++count;
        int r = big.row(v) - row0 + 1, c = big.col(v) - (2 * col0 - 2);
        if (mirror) c = 2 * h + 1 - c;
        Vertex sv = small.at(r, c);
        if (sv < 0) throw Error(ErrorKind::PreconditionViolated, "subwall region does not match the elementary wall");
        big_of[sv] = v;
        s.branch[sv] = w.branch[v];
    }
    if (count != sg.n()) throw Error(ErrorKind::PreconditionViolated, "subwall region does not match the elementary wall");
    for (auto& e : sg.edges()) {
        auto p = expand(w, bg, {big_of[e.u], big_of[e.v]});
        s.paths.push_back(std::move(p));
    }
    return s;
}

Wall settle_corners(const Wall& w) {
    Wall out = w;
    std::vector<Vertex> to_host;
    Graph h = wall_host_graph(w, &to_host);
    auto r = bipartition_or_odd_cycle(h);
    if (!std::holds_alternative<TwoColouring>(r)) return out;
    const auto& col = std::get<TwoColouring>(r).colour;
    auto colour = [&](Vertex v) { return col[std::lower_bound(to_host.begin(), to_host.end(), v) - to_host.begin()]; };
    auto branch = wall_branch_vertices(w);
    if (branch.empty()) return out;
    const int want = colour(branch[0]);
    Elem el(w.order);
    const Graph& eg = el.g();
    auto corners = elem_corners(el);
    auto is_corner = [&](Vertex v) { return std::find(corners.begin(), corners.end(), v) != corners.end(); };
    for (Vertex c : corners) {
        if (colour(out.branch[c]) == want) continue;
        // the chain of degree-2 elementary vertices through c, between two degree-3 ends
        std::vector<Vertex> chain{c};
        for (int side = 0; side < 2; ++side) {
            Vertex prev = c, cur = eg.neighbors(c)[side];
            std::vector<Vertex> part;
            while (eg.degree(cur) == 2 && cur != c) {
                part.push_back(cur);
                Vertex nx = eg.neighbors(cur)[0] == prev ? eg.neighbors(cur)[1] : eg.neighbors(cur)[0];
                prev = cur;
                cur = nx;
            }
            part.push_back(cur);
            if (side == 0)
                chain.insert(chain.begin(), part.rbegin(), part.rend());
            else
                chain.insert(chain.end(), part.begin(), part.end());
        }
        if (chain.front() == chain.back() || eg.degree(chain.front()) != 3) continue;
        auto whole = expand(out, eg, chain);
        const int m = static_cast<int>(chain.size()) - 2, L = static_cast<int>(whole.size());
        // leftmost placement that puts every corner on the branch colour
        std::vector<int> at;
        int prev = 0;
        for (int i = 0; i < m; ++i) {
            Vertex d = chain[i + 1];
            int pick = -1;
            for (int t = prev + 1; t <= L - 1 - (m - i); ++t)
                if (!is_corner(d) || colour(whole[t]) == want) {
                    pick = t;
                    break;
                }
            if (pick < 0) break;
            at.push_back(pick);
            prev = pick;
        }
        if (static_cast<int>(at.size()) != m) continue;
        std::vector<int> cut{0};
        cut.insert(cut.end(), at.begin(), at.end());
        cut.push_back(L - 1);
        for (int i = 0; i < m; ++i) out.branch[chain[i + 1]] = whole[at[i]];
        for (int i = 0; i + 1 < static_cast<int>(chain.size()); ++i) {
            int e = eg.edge_index(chain[i], chain[i + 1]);
            std::vector<Vertex> piece(whole.begin() + cut[i], whole.begin() + cut[i + 1] + 1);
            if (eg.edge(e).u != chain[i]) std::reverse(piece.begin(), piece.end());
            out.paths[e] = std::move(piece);
        }
    }
    return out;
}

std::optional<Wall> find_clean_subwall(const Wall& w, int k) {
    if (k < 2 || k > w.order) return std::nullopt;
    for (int r = 1; r + k - 1 <= w.order; ++r)
        for (int c = 1; c + k - 1 <= w.order; ++c) {
            Wall s = settle_corners(subwall(w, r, c, k));
            if (is_clean(s)) return s;
        }
    return std::nullopt;
}

// ---------------------------------------------------------------- find_wall

namespace {

struct WallSearch {
    const Graph& g;
    const Graph& eg;
    const FindWallOptions& opt;
    long long steps = 0;
    long long limit = 0;
    std::mt19937_64* rng = nullptr;  // restarts shuffle the walk order
    std::vector<Vertex> first;       // candidates for the first vertex, in order
    std::vector<char> used;  // host vertex -> 0 free, 1 used
    std::vector<Vertex> img;
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::vector<Vertex>> earlier;
    std::vector<int> later_count;
    std::vector<char> side;  // colour of each branch vertex when a clean wall is wanted

    WallSearch(const Graph& g_, const Graph& eg_, const FindWallOptions& o)
        : g(g_), eg(eg_), opt(o), used(g_.n(), 0), img(eg_.n(), -1), paths(eg_.m()), side(eg_.n(), 0) {
        earlier.resize(eg.n());
        later_count.assign(eg.n(), 0);
        for (Vertex v = 0; v < eg.n(); ++v)
            for (Vertex u : eg.neighbors(v)) {
                if (u < v)
                    earlier[v].push_back(u);
                else
                    ++later_count[v];
            }
    }

    void tick() {
        if (++steps > limit) throw Error(ErrorKind::BudgetExhausted, "wall search budget exhausted");
    }

    int free_nbrs(Vertex h) const {
        int c = 0;
        for (Vertex u : g.neighbors(h)) c += !used[u];
        return c;
    }

    // placed vertices still need free neighbours for their unplaced ones, and when the
    // unplaced part of the wall is connected it has to fit in one free component
    std::vector<char> suffix_connected;
    std::vector<int> suffix_deg3;

    void prepare() {
        const int n = eg.n();
        suffix_connected.assign(n + 1, 1);
        suffix_deg3.assign(n + 1, 0);
        for (int upto = n - 1; upto >= 0; --upto) {
            suffix_deg3[upto] = suffix_deg3[upto + 1] + (eg.degree(upto) == 3);
            std::vector<char> seen(n, 0);
            std::vector<Vertex> st{upto};
            seen[upto] = 1;
            int cnt = 1;
            while (!st.empty()) {
                Vertex v = st.back();
                st.pop_back();
                for (Vertex u : eg.neighbors(v))
                    if (u >= upto && !seen[u]) seen[u] = 1, ++cnt, st.push_back(u);
            }
            suffix_connected[upto] = cnt == n - upto;
        }
    }

    bool feasible(int upto) const {
        for (Vertex v = 0; v < upto; ++v) {
            int pending = 0;
            for (Vertex u : eg.neighbors(v))
                if (u >= upto) ++pending;
            if (pending && free_nbrs(img[v]) < pending) return false;
        }
        if (upto == 0 || upto == eg.n()) return true;
        std::vector<int> comp(g.n(), -1);
        std::vector<int> big, size;
        for (Vertex s = 0; s < g.n(); ++s) {
            if (used[s] || comp[s] >= 0) continue;
            int c = static_cast<int>(big.size());
            big.push_back(0);
            size.push_back(0);
            std::vector<Vertex> st{s};
            comp[s] = c;
            while (!st.empty()) {
                Vertex v = st.back();
                st.pop_back();
                ++size[c];
                big[c] += g.degree(v) >= 3;
                for (Vertex u : g.neighbors(v))
                    if (!used[u] && comp[u] < 0) comp[u] = c, st.push_back(u);
            }
        }
        const int need3 = suffix_deg3[upto], needn = eg.n() - upto;
        if (!suffix_connected[upto]) {
            int total = 0;
            for (int b : big) total += b;
            return total >= need3;
        }
        std::vector<int> hits(big.size(), 0);
        int frontier = 0;
        for (Vertex v = 0; v < upto; ++v) {
            bool pend = false;
            for (Vertex u : eg.neighbors(v)) pend |= u >= upto;
            if (!pend) continue;
            ++frontier;
            std::vector<int> cs;
            for (Vertex u : g.neighbors(img[v]))
                if (!used[u]) cs.push_back(comp[u]);
            std::sort(cs.begin(), cs.end());
            cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
            for (int c : cs) ++hits[c];
        }
        for (size_t c = 0; c < big.size(); ++c)
            if (hits[c] == frontier && big[c] >= need3 && size[c] >= needn) return true;
        return false;
    }

    // candidate walks from img[a] for vertex v, in preference order
    void walks(Vertex from, int need_deg, const std::function<bool(std::vector<Vertex>&)>& take) {
        std::vector<Vertex> walk{from};
        std::vector<char> on(g.n(), 0);
        on[from] = 1;
        std::function<bool(Vertex, int)> rec = [&](Vertex x, int passes) -> bool {
            std::vector<Vertex> nb(g.neighbors(x).begin(), g.neighbors(x).end());
            if (rng) std::shuffle(nb.begin(), nb.end(), *rng);
            for (Vertex y : nb) {
                if (used[y] || on[y]) continue;
                tick();
                walk.push_back(y);
                on[y] = 1;
                bool done = false;
                if (g.degree(y) >= need_deg && g.degree(y) >= 3) {
                    bool pass_first = rng && passes < opt.pass_through && (*rng)() % 3 == 0;
                    if (pass_first) done = rec(y, passes + 1);
                    if (!done) done = take(walk);
                    if (!done && !pass_first && passes < opt.pass_through) done = rec(y, passes + 1);
                } else if (need_deg == 2) {
                    // any split point of a longer path would do; the first one is enough
                    done = take(walk);
                } else if (g.degree(y) == 2) {
                    done = rec(y, passes);
                }
                on[y] = 0;
                walk.pop_back();
                if (done) return true;
            }
            return false;
        };
        rec(from, 0);
    }

    bool place(Vertex v, Vertex x) {
        img[v] = x;
        used[x] = 1;
        return true;
    }

    bool close_and_recurse(Vertex v) {
        // route the remaining earlier neighbours by shortest free paths
        std::vector<std::pair<int, std::vector<Vertex>>> routed;
        bool ok = true;
        for (size_t i = 1; i < earlier[v].size() && ok; ++i) {
            Vertex b = earlier[v][i];
            auto p = bfs_path(g, img[v], img[b], &used);
            if (p.empty()) {
                ok = false;
                break;
            }
            for (size_t j = 1; j + 1 < p.size(); ++j) used[p[j]] = 1;
            std::reverse(p.begin(), p.end());
            routed.push_back({eg.edge_index(b, v), p});
            if (opt.clean && (side[v] ^ side[b]) != ((p.size() - 1) & 1)) ok = false;
        }
        if (ok) {
            for (auto& [e, p] : routed) paths[e] = p;
            if (feasible(v + 1) && search(v + 1)) return true;
        }
        for (auto& [e, p] : routed)
            for (size_t j = 1; j + 1 < p.size(); ++j) used[p[j]] = 0;
        return false;
    }

    bool search(Vertex v) {
        tick();
        if (v == eg.n()) return true;
        const int need = eg.degree(v);
        if (earlier[v].empty()) {
            for (Vertex x : first) {
                if (used[x] || g.degree(x) < need) continue;
                place(v, x);
                if (feasible(v + 1) && search(v + 1)) return true;
                used[x] = 0;
                img[v] = -1;
            }
            return false;
        }
        // anchor: left neighbour when present, else the first earlier one
        Vertex a = earlier[v].front();
        for (Vertex u : earlier[v])
            if (elementary_row(u) == elementary_row(v)) a = u;
        if (a != earlier[v].front()) std::swap(*std::find(earlier[v].begin(), earlier[v].end(), a), earlier[v].front());
        const int e = eg.edge_index(a, v);
        bool found = false;
        walks(img[a], need, [&](std::vector<Vertex>& walk) {
            Vertex x = walk.back();
            for (size_t j = 1; j < walk.size(); ++j) used[walk[j]] = 1;
            img[v] = x;
            paths[e] = walk;
            side[v] = side[a] ^ ((walk.size() - 1) & 1);
            if (close_and_recurse(v)) {
                found = true;
                return true;
            }
            for (size_t j = 1; j < walk.size(); ++j) used[walk[j]] = 0;
            img[v] = -1;
            return false;
        });
        return found;
    }

    std::vector<int> rows;
    int elementary_row(Vertex v) const { return rows[v]; }
};

}  // namespace

std::optional<Wall> find_wall(const Graph& g, int k, const FindWallOptions& opt) {
    if (k < 2) throw Error(ErrorKind::BadParameter, "wall order must be at least 2");
    const Generated& E = elementary(k);
    const Graph& eg = E.graph;
    int deg3 = 0;
    for (Vertex v = 0; v < eg.n(); ++v) deg3 += eg.degree(v) == 3;
    auto blocks = biconnected_components(g);
    long long spent = 0;
    Wall found;
    for (const auto& bv : blocks.vertices) {
        if (static_cast<int>(bv.size()) < eg.n()) continue;
        Subgraph b = induced_subgraph(g, bv);
        int big = 0;
        for (Vertex v = 0; v < b.graph.n(); ++v) big += b.graph.degree(v) >= 3;
        if (big < deg3) continue;
        // attempts start from spread-out host vertices (farthest-point order, which finds
        // the corners of a wall-like block); a stray path along the first row laid can
        // derail the search for long. Rounds after the first also shuffle the walk order.
        const int tries = std::max(1, opt.restarts);
        // elementary vertices in breadth-first order from a corner, so every brick closes
        // soon after it opens and a wrong turn shows up early
        std::vector<Vertex> order{0}, pos(eg.n(), -1);
        pos[0] = 0;
        for (size_t h = 0; h < order.size(); ++h) {
            std::vector<Vertex> nb(eg.neighbors(order[h]).begin(), eg.neighbors(order[h]).end());
            std::sort(nb.begin(), nb.end());
            for (Vertex u : nb)
                if (pos[u] < 0) pos[u] = static_cast<Vertex>(order.size()), order.push_back(u);
        }
        std::vector<std::pair<Vertex, Vertex>> res;
        for (auto& e : eg.edges()) res.push_back({pos[e.u], pos[e.v]});
        const Graph rg(eg.n(), res);
        std::vector<Vertex> seeds{0};
        {
            std::vector<int> dist(b.graph.n(), std::numeric_limits<int>::max());
            for (int t = 0; t < std::min(tries, 4); ++t) {
                if (t == 1) dist.assign(b.graph.n(), std::numeric_limits<int>::max());  // vertex 0 only found the rim
                std::deque<Vertex> q{seeds.back()};
                dist[seeds.back()] = 0;
                std::vector<int> d(b.graph.n(), -1);
                d[seeds.back()] = 0;
                while (!q.empty()) {
                    Vertex x = q.front();
                    q.pop_front();
                    dist[x] = std::min(dist[x], d[x]);
                    for (Vertex y : b.graph.neighbors(x))
                        if (d[y] < 0) d[y] = d[x] + 1, q.push_back(y);
                }
                seeds.push_back(static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin()));
            }
            seeds.erase(seeds.begin());
        }
        bool ok = false, exhausted = false;
        for (int t = 0; t < tries && !ok; ++t) {
            long long left = opt.budget - spent;
            if (left <= 0) {
                exhausted = true;
                break;
            }
            WallSearch s(b.graph, rg, opt);
            Vertex seed = seeds[t % seeds.size()];
            std::vector<int> d(b.graph.n(), -1);
            std::deque<Vertex> q{seed};
            d[seed] = 0;
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop_front();
                s.first.push_back(x);
                for (Vertex y : b.graph.neighbors(x))
                    if (d[y] < 0) d[y] = d[x] + 1, q.push_back(y);
            }
            std::mt19937_64 rng(opt.seed + 7919ULL * t);
            if (t >= static_cast<int>(seeds.size())) s.rng = &rng;
            s.limit = t + 1 < tries ? std::min(left, std::max(1LL, opt.budget / tries)) : left;
            s.prepare();
            s.rows.resize(eg.n());
            for (Vertex i = 0; i < eg.n(); ++i) s.rows[i] = E.coord[order[i]].first;
            try {
                ok = s.search(0);
                exhausted = false;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BudgetExhausted) throw;
                exhausted = true;
            }
            spent += s.steps;
            if (!ok) {
                if (!exhausted) break;  // every first vertex was tried
                continue;
            }
            found.order = k;
            found.branch.clear();
            found.paths.clear();
            for (Vertex v = 0; v < eg.n(); ++v) found.branch.push_back(b.to_host[s.img[pos[v]]]);
            for (auto& e : eg.edges()) {
                std::vector<Vertex> hp;
                for (Vertex x : s.paths[rg.edge_index(pos[e.u], pos[e.v])]) hp.push_back(b.to_host[x]);
                if (hp.front() != found.branch[e.u]) std::reverse(hp.begin(), hp.end());
                found.paths.push_back(std::move(hp));
            }
        }
        if (!ok) {
            if (exhausted) throw Error(ErrorKind::BudgetExhausted, "wall search budget exhausted");
            continue;
        }
        Wall w = found;
        w = settle_corners(w);
        if (auto bad = validate_wall(g, w)) throw Error(ErrorKind::PreconditionViolated, "wall search produced an invalid wall: " + bad->message);
        return w;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- inside-out

namespace {

struct Rings {
    Elem el;
    std::vector<std::vector<Vertex>> ring;  // index 0 = outermost
    std::vector<int> ringof;                // -1 off every ring
    std::vector<int> pos;                   // index within its ring

    Rings(int m, int count) : el(m), ringof(el.g().n(), -1), pos(el.g().n(), -1) {
        const Graph& g = el.g();
        for (int t = 1; t <= count; ++t) {
            int r0 = t, r1 = m + 1 - t, c0 = 2 * t - 1, c1 = 2 * (m + 1 - t);
            std::vector<char> in(g.n(), 0);
            for (Vertex v = 0; v < g.n(); ++v)
                in[v] = el.row(v) >= r0 && el.row(v) <= r1 && el.col(v) >= c0 && el.col(v) <= c1;
            for (bool again = true; again;) {
                again = false;
                for (Vertex v = 0; v < g.n(); ++v) {
                    if (!in[v]) continue;
                    int d = 0;
                    for (Vertex u : g.neighbors(v)) d += in[u];
                    if (d <= 1) in[v] = 0, again = true;
                }
            }
            std::vector<char> per(g.n(), 0);
            for (Vertex v = 0; v < g.n(); ++v) {
                int r = el.row(v), c = el.col(v);
                per[v] = in[v] && (r == r0 || r == r1 || c == c0 || c == c0 + 1 || c == c1 - 1 || c == c1);
            }
            auto less = [&](Vertex a, Vertex b) { return el.e->coord[a] < el.e->coord[b]; };
            Vertex start = -1;
            for (Vertex v = 0; v < g.n(); ++v)
                if (per[v] && (start < 0 || less(v, start))) start = v;
            std::vector<Vertex> cyc{start};
            Vertex prev = -1, cur = start;
            while (true) {
                Vertex nxt = -1;
                for (Vertex u : g.neighbors(cur)) {
                    if (!per[u] || u == prev) continue;
                    if (nxt < 0 || less(u, nxt)) nxt = u;
                    if (prev >= 0) break;
                }
                if (nxt < 0 || nxt == start) break;
                cyc.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            double area = 0;
            for (size_t i = 0; i < cyc.size(); ++i) {
                auto a = el.e->coord[cyc[i]], b = el.e->coord[cyc[(i + 1) % cyc.size()]];
                area += (a.second / 2.0) * (-b.first) - (b.second / 2.0) * (-a.first);
            }
            if (area > 0) std::reverse(cyc.begin() + 1, cyc.end());
            for (size_t i = 0; i < cyc.size(); ++i) {
                ringof[cyc[i]] = t - 1;
                pos[cyc[i]] = static_cast<int>(i);
            }
            ring.push_back(std::move(cyc));
        }
    }

    // neighbours in the order left, right, up, down
    std::vector<Vertex> nb_order(Vertex v) const {
        std::vector<Vertex> h, vert;
        for (Vertex u : el.g().neighbors(v)) (el.row(u) == el.row(v) ? h : vert).push_back(u);
        auto by = [&](Vertex a, Vertex b) { return el.e->coord[a] < el.e->coord[b]; };
        std::sort(h.begin(), h.end(), by);
        std::sort(vert.begin(), vert.end(), by);
        h.insert(h.end(), vert.begin(), vert.end());
        return h;
    }

    // edges u < v in row-major, right neighbour before the one below
    template <class F>
    void each_edge(F f) const {
        for (Vertex u = 0; u < el.g().n(); ++u)
            for (Vertex v : nb_order(u))
                if (v > u) f(u, v);
    }
};

struct Connector {
    Vertex inner = -1;
    Vertex center = -1;  // -1 for a direct edge
    std::vector<Vertex> outer;
};

struct Pattern {
    Rings r;
    std::vector<std::vector<Vertex>> ring;         // index 0 = central brick
    std::vector<int> ringof;                       // same indexing
    std::vector<std::vector<Connector>> conns;     // conns[d] joins ring d and d+1
    std::vector<char> need_out;

    explicit Pattern(int k) : r(2 * k, k), ringof(r.el.g().n(), -1), conns(k > 0 ? k - 1 : 0), need_out(r.el.g().n(), 0) {
        for (int d = 0; d < k; ++d) ring.push_back(r.ring[k - 1 - d]);
        for (Vertex v = 0; v < r.el.g().n(); ++v)
            if (r.ringof[v] >= 0) ringof[v] = k - 1 - r.ringof[v];
        const Graph& g = r.el.g();
        for (Vertex v = 0; v < g.n(); ++v) {
            if (ringof[v] >= 0) continue;
            auto nb = r.nb_order(v);
            int dmin = 1 << 30;
            for (Vertex u : nb) dmin = std::min(dmin, ringof[u]);
            Connector c;
            c.center = v;
            for (Vertex u : nb) {
                if (ringof[u] == dmin) c.inner = u;
                if (ringof[u] == dmin + 1) c.outer.push_back(u);
            }
            conns[dmin].push_back(c);
        }
        r.each_edge([&](Vertex u, Vertex v) {
            if (ringof[u] < 0 || ringof[v] < 0 || ringof[u] == ringof[v]) return;
            Vertex a = ringof[u] < ringof[v] ? u : v, b = a == u ? v : u;
            conns[ringof[a]].push_back(Connector{a, -1, {b}});
        });
        for (auto& cc : conns)
            for (auto& c : cc)
                for (Vertex o : c.outer) need_out[o] = 1;
    }
};

struct Host {
    Rings r;
    std::map<Vertex, std::vector<Vertex>> op;  // ring vertex -> path to the next ring outward

    Host(int n) : r(n, n / 2) {
        const Graph& g = r.el.g();
        auto by = [&](Vertex a, Vertex b) { return r.el.e->coord[a] < r.el.e->coord[b]; };
        for (Vertex v = 0; v < g.n(); ++v) {
            if (r.ringof[v] >= 0) continue;
            auto nb = r.nb_order(v);
            bool all_on = true;
            for (Vertex u : nb) all_on &= r.ringof[u] >= 0;
            if (!all_on || nb.empty()) continue;
            int lo_ring = 1 << 30, hi_ring = -1;
            for (Vertex u : nb) lo_ring = std::min(lo_ring, r.ringof[u]), hi_ring = std::max(hi_ring, r.ringof[u]);
            std::vector<Vertex> lo, hi;
            for (Vertex u : nb) {
                if (r.ringof[u] == lo_ring) lo.push_back(u);
                if (r.ringof[u] == hi_ring) hi.push_back(u);
            }
            Vertex a, b;
            if (lo.size() == 2) {
                a = *std::min_element(lo.begin(), lo.end(), by);
                b = hi[0];
            } else {
                a = lo[0];
                b = *std::min_element(hi.begin(), hi.end(), by);
            }
            op[b] = {b, v, a};
        }
        r.each_edge([&](Vertex u, Vertex v) {
            if (r.ringof[u] < 0 || r.ringof[v] < 0 || r.ringof[u] == r.ringof[v]) return;
            Vertex a = r.ringof[u] < r.ringof[v] ? u : v, b = a == u ? v : u;
            op[b] = {b, a};
        });
    }
    bool is_o(Vertex v) const { return op.count(v) > 0; }
};

double angle_of(const Elem& el, Vertex v, int n) {
    double x = el.col(v) / 2.0 - (n + 0.5) / 2.0, y = -(el.row(v) - (n + 1) / 2.0);
    return std::atan2(y, x);
}

using Placement = std::map<Vertex, int>;  // pattern vertex -> index on a host ring

std::optional<Placement> place_free(const std::vector<Vertex>& rp, const Placement& pos, int L,
                                    const std::function<bool(Vertex, int)>& ok, int bias = 0) {
    std::vector<int> fixed;
    for (int i = 0; i < static_cast<int>(rp.size()); ++i)
        if (pos.count(rp[i])) fixed.push_back(i);
    if (fixed.empty()) return std::nullopt;
    Placement res = pos;
    int base = pos.at(rp[fixed[0]]);
    for (size_t i = 0; i + 1 < fixed.size(); ++i)
        if (((pos.at(rp[fixed[i]]) - base) % L + L) % L >= ((pos.at(rp[fixed[i + 1]]) - base) % L + L) % L)
            return std::nullopt;
    const int R = static_cast<int>(rp.size());
    for (size_t j = 0; j < fixed.size(); ++j) {
        int i0 = fixed[j], i1 = fixed[(j + 1) % fixed.size()];
        std::vector<Vertex> free;
        for (int i = (i0 + 1) % R; i != i1; i = (i + 1) % R) free.push_back(rp[i]);
        int h0 = pos.at(rp[i0]), h1 = pos.at(rp[i1]);
        int span = ((h1 - h0) % L + L) % L;
        if (span == 0 || fixed.size() == 1) span = L;
        std::vector<int> cand;
        for (int t = 1; t < span; ++t) cand.push_back((h0 + t) % L);
        const int C = static_cast<int>(cand.size()), F = static_cast<int>(free.size());
        int ci = 0;
        for (int q = 0; q < F; ++q) {
            int tgt = std::clamp((q + 1) * C / (F + 1) + bias, 0, std::max(C - 1, 0));
            int best = -1;
            for (int t = ci; t < C; ++t) {
                if (ok(free[q], cand[t]) && C - t - 1 >= F - q - 1) {
                    if (best < 0 || std::abs(t - tgt) < std::abs(best - tgt)) best = t;
                    if (t >= tgt) break;
                }
            }
            if (best < 0) return std::nullopt;
            res[free[q]] = cand[best];
            ci = best + 1;
        }
    }
    return res;
}

struct Layout {
    std::map<Vertex, Vertex> pos;                                   // pattern vertex -> host elementary vertex
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> path;  // (a, b) -> host walk from pos[a] to pos[b]
};

struct Router {
    int k, N;
    Pattern P;
    Host H;

    int bias = 0;  // shifts the spread of free ring vertices, tried when the plain spread fails

    Router(int k_, int n_) : k(k_), N(n_), P(k_), H(n_) {}

    bool ok(Vertex v, int i, int ring) const { return !P.need_out[v] || H.is_o(H.r.ring[ring][i]); }

    std::optional<Layout> annuli(int d, Placement cur) {
        Layout out;
        for (auto& [v, i] : cur) out.pos[v] = H.r.ring[2 * d][i];
        while (d > 0) {
            const int a = d - 1, mid = 2 * a + 1;
            const auto& MR = H.r.ring[mid];
            const int M = static_cast<int>(MR.size());
            std::set<int> used;
            Placement inner_pos;
            for (const Connector& c : P.conns[a]) {
                std::vector<std::vector<Vertex>> spoke;
                std::vector<int> arr;
                for (Vertex o : c.outer) {
                    Vertex hv = H.r.ring[2 * d][cur.at(o)];
                    auto it = H.op.find(hv);
                    if (it == H.op.end()) return std::nullopt;
                    spoke.push_back(it->second);
                    if (H.r.ringof[it->second.back()] != mid) return std::nullopt;
                    arr.push_back(H.r.pos[it->second.back()]);
                }
                auto arc_walk = [&](const std::vector<int>& idx) {
                    std::vector<Vertex> wv;
                    for (int x : idx) wv.push_back(MR[x]);
                    return wv;
                };
                auto join = [](std::vector<Vertex> a1, const std::vector<Vertex>& b1) {
                    a1.insert(a1.end(), b1.begin() + 1, b1.end());
                    return a1;
                };
                if (c.center >= 0) {
                    int a1 = arr[0], a2 = arr[1];
                    int f = ((a2 - a1) % M + M) % M, b = ((a1 - a2) % M + M) % M;
                    std::vector<int> arc;
                    bool forward = f <= b;
                    if (forward)
                        for (int t = 0; t <= f; ++t) arc.push_back((a1 + t) % M);
                    else
                        for (int t = 0; t <= b; ++t) arc.push_back((a2 + t) % M);
                    for (int x : arc)
                        if (used.count(x)) return std::nullopt;
                    std::vector<int> ex;
                    for (size_t t = 1; t + 1 < arc.size(); ++t) {
                        auto it = H.op.find(MR[arc[t]]);
                        if (it != H.op.end() && H.r.ringof[it->second.back()] == 2 * a) ex.push_back(static_cast<int>(t));
                    }
                    if (ex.empty()) return std::nullopt;
                    int et = ex[ex.size() / 2];
                    used.insert(arc.begin(), arc.end());
                    Vertex e = MR[arc[et]];
                    const auto& sp = H.op.at(e);
                    inner_pos[c.inner] = H.r.pos[sp.back()];
                    out.pos[c.center] = e;
                    // arc from arrival 1 to e and from arrival 2 to e
                    std::vector<int> to1(arc.begin(), arc.begin() + et + 1), to2(arc.begin() + et, arc.end());
                    std::reverse(to2.begin(), to2.end());
                    if (!forward) std::swap(to1, to2);
                    out.path[{c.outer[0], c.center}] = join(spoke[0], arc_walk(to1));
                    out.path[{c.outer[1], c.center}] = join(spoke[1], arc_walk(to2));
                    out.path[{c.center, c.inner}] = sp;
                } else {
                    int a1 = arr[0];
                    double tgt = angle_of(P.r.el, c.inner, 2 * k);
                    double best_sc = 0;
                    std::vector<int> best_arc;
                    for (int dir : {1, -1}) {
                        std::vector<int> arc{a1};
                        int x = a1;
                        for (int t = 0; t < M; ++t) {
                            x = ((x + dir) % M + M) % M;
                            arc.push_back(x);
                            if (H.is_o(MR[x])) break;
                        }
                        bool clash = false;
                        for (int y : arc) clash |= used.count(y) > 0;
                        if (clash || !H.is_o(MR[arc.back()])) continue;
                        Vertex s = H.op.at(MR[arc.back()]).back();
                        double sc = std::abs(std::remainder(angle_of(H.r.el, s, N) - tgt, 2 * M_PI));
                        if (best_arc.empty() || sc < best_sc) {
                            best_sc = sc;
                            best_arc = arc;
                        }
                    }
                    if (best_arc.empty()) return std::nullopt;
                    used.insert(best_arc.begin(), best_arc.end());
                    const auto& sp = H.op.at(MR[best_arc.back()]);
                    if (H.r.ringof[sp.back()] != 2 * a) return std::nullopt;
                    inner_pos[c.inner] = H.r.pos[sp.back()];
                    out.path[{c.outer[0], c.inner}] = join(join(spoke[0], arc_walk(best_arc)), sp);
                }
            }
            const int ring2a = 2 * a;
            auto res = place_free(P.ring[a], inner_pos, static_cast<int>(H.r.ring[ring2a].size()),
                                  [&](Vertex v, int i) { return ok(v, i, ring2a); }, bias);
            if (!res) return std::nullopt;
            for (auto& [v, i] : *res) out.pos[v] = H.r.ring[ring2a][i];
            cur = *res;
            d = a;
        }
        return out;
    }

    // ring edges follow the host ring in index order between consecutive pattern vertices
    void ring_paths(Layout& L) const {
        for (int d = 0; d < k; ++d) {
            const auto& rp = P.ring[d];
            const auto& hr = H.r.ring[2 * d];
            const int n = static_cast<int>(hr.size());
            for (size_t i = 0; i < rp.size(); ++i) {
                Vertex u = rp[i], v = rp[(i + 1) % rp.size()];
                int a = H.r.pos[L.pos.at(u)], b = H.r.pos[L.pos.at(v)];
                std::vector<Vertex> walk{hr[a]};
                for (int x = (a + 1) % n;; x = (x + 1) % n) {
                    walk.push_back(hr[x]);
                    if (x == b) break;
                }
                L.path[{u, v}] = walk;
            }
        }
    }

    // layouts in search order until accept() takes one
    std::optional<Layout> run(const std::function<bool(const Layout&)>& accept) {
        if (2 * (k - 1) >= static_cast<int>(H.r.ring.size())) return std::nullopt;
        const int d = k - 1;
        const auto& hr = H.r.ring[2 * d];
        const auto& rp = P.ring[d];
        const int L = static_cast<int>(hr.size());
        for (int off = 0; off < L; ++off) {
            if (!ok(rp[0], off, 2 * d)) continue;
            Placement pos{{rp[0], off}};
            for (int b : {0, -1, 1, -2, 2}) {
                bias = b;
                auto res = place_free(rp, pos, L, [&](Vertex v, int i) { return ok(v, i, 2 * d); }, bias);
                if (!res) continue;
                auto lay = annuli(d, *res);
                if (!lay) continue;
                ring_paths(*lay);
                if (accept(*lay)) return lay;
            }
        }
        return std::nullopt;
    }
};

const std::map<int, int> kInsideOut = {{2, 9}, {3, 15}, {4, 21}};

}  // namespace

int inside_out_min_order(int k) {
    auto it = kInsideOut.find(k);
    if (it == kInsideOut.end())
        throw Error(ErrorKind::OrderTooSmall, "no inside-out layout is known for a " + std::to_string(2 * k) + "-wall");
    return it->second;
}

Wall inside_out(const Wall& w, int k, const std::function<bool(const Wall&)>& accept) {
    const int need = inside_out_min_order(k);
    if (w.order < need)
        throw Error(ErrorKind::OrderTooSmall, "inside-out to a " + std::to_string(2 * k) + "-wall needs order >= " +
                                                  std::to_string(need) + ", got " + std::to_string(w.order));
    const Graph& pg = elementary(2 * k).graph;
    const Graph& hg = elementary(w.order).graph;
    std::vector<Vertex> to_host;
    Graph host = wall_host_graph(w, &to_host);
    auto loc = [&](Vertex h) {
        return static_cast<Vertex>(std::lower_bound(to_host.begin(), to_host.end(), h) - to_host.begin());
    };
    const bool clean = is_clean(w);
    const auto corners = wall_corners(w);
    auto per = wall_perimeter(w);
    std::sort(per.begin(), per.end());
    Wall out;
    auto compose = [&](const Layout& lay) {
        out = Wall{};
        out.order = 2 * k;
        for (Vertex v = 0; v < pg.n(); ++v) out.branch.push_back(w.branch[lay.pos.at(v)]);
        for (auto& e : pg.edges()) {
            std::vector<Vertex> walk;
            if (auto it = lay.path.find({e.u, e.v}); it != lay.path.end()) {
                walk = it->second;
            } else {
                walk = lay.path.at({e.v, e.u});
                std::reverse(walk.begin(), walk.end());
            }
            out.paths.push_back(expand(w, hg, walk));
        }
        // checked inside the wall itself, relabelled to local ids
        Wall local = out;
        for (auto& b : local.branch) b = loc(b);
        for (auto& p : local.paths)
            for (auto& x : p) x = loc(x);
        if (validate_wall(host, local)) return false;
        std::vector<Vertex> six;
        auto brick = central_brick(out, &six);
        std::sort(brick.begin(), brick.end());
        if (brick != per) return false;
        for (Vertex c : corners)
            if (std::find(six.begin(), six.end(), c) != six.end()) return false;
        if (!clean) return !accept || accept(out);
        auto col = wall_colouring(out);
        if (col.empty()) return false;
        auto vs = wall_vertices(out);
        auto colour = [&](Vertex v) { return col[std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()]; };
        for (Vertex c : corners)
            if (colour(c) != colour(six[0])) return false;
        return !accept || accept(out);
    };
    Router rt(k, w.order);
    if (!rt.run(compose))
        throw Error(ErrorKind::OrderTooSmall, "inside-out router found no layout at order " + std::to_string(w.order));
    return out;
}

}  // namespace oddminor
