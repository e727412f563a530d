#include "oddminor/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "flow.hpp"

namespace oddminor {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::NegativeWeight: return "NegativeWeight";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::BudgetExhausted: return "BudgetExhausted";
        case ErrorKind::NotBipartite: return "NotBipartite";
        case ErrorKind::WidthTooLarge: return "WidthTooLarge";
        case ErrorKind::BlindWidthExceeded: return "BlindWidthExceeded";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::NotClean: return "NotClean";
        case ErrorKind::EarNotOnPerimeter: return "EarNotOnPerimeter";
        case ErrorKind::OrderTooSmall: return "OrderTooSmall";
        case ErrorKind::BipartiteHost: return "BipartiteHost";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "weight sum overflows int64");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "weight product overflows int64");
    return r;
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n) {
    if (n < 0) throw Error(ErrorKind::BadParameter, "negative vertex count");
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorKind::BadParameter, "edge endpoint out of range");
        if (a == b) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a));
        edges_.push_back(make_edge(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    off_.assign(n + 1, 0);
    for (auto& e : edges_) {
        off_[e.u + 1]++;
        off_[e.v + 1]++;
    }
    std::partial_sum(off_.begin(), off_.end(), off_.begin());
    adj_.resize(2 * edges_.size());
    adj_eid_.resize(2 * edges_.size());
    std::vector<int> pos(off_.begin(), off_.end() - 1);
    // edges are sorted, so filling in order keeps each list sorted for the lower end;
    // sort afterwards to be safe for both ends
    for (int i = 0; i < m(); ++i) {
        auto [u, v] = edges_[i];
        adj_[pos[u]] = v;
        adj_eid_[pos[u]++] = i;
        adj_[pos[v]] = u;
        adj_eid_[pos[v]++] = i;
    }
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<Vertex, int>> tmp;
        for (int i = off_[v]; i < off_[v + 1]; ++i) tmp.push_back({adj_[i], adj_eid_[i]});
        std::sort(tmp.begin(), tmp.end());
        for (int i = off_[v]; i < off_[v + 1]; ++i) {
            adj_[i] = tmp[i - off_[v]].first;
            adj_eid_[i] = tmp[i - off_[v]].second;
        }
    }
}

int Graph::edge_index(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return -1;
    return incident(a)[it - nb.begin()];
}

const std::string& Graph::label(Vertex v) const {
    static const std::string empty;
    return labels_.empty() ? empty : labels_[v];
}

void Graph::set_vertex_weights(std::vector<Weight> w) {
    if (!w.empty() && static_cast<int>(w.size()) != n_)
        throw Error(ErrorKind::BadParameter, "vertex weight count mismatch");
    for (Weight x : w)
        if (x < 0) throw Error(ErrorKind::NegativeWeight, "negative vertex weight");
    vw_ = std::move(w);
}

void Graph::set_edge_weights(std::vector<Weight> w) {
    if (!w.empty() && static_cast<int>(w.size()) != m())
        throw Error(ErrorKind::BadParameter, "edge weight count mismatch");
    for (Weight x : w)
        if (x < 0) throw Error(ErrorKind::NegativeWeight, "negative edge weight");
    ew_ = std::move(w);
}

void Graph::set_labels(std::vector<std::string> l) {
    if (!l.empty() && static_cast<int>(l.size()) != n_) throw Error(ErrorKind::BadParameter, "label count mismatch");
    labels_ = std::move(l);
}

Weight Graph::total_vertex_weight() const {
    Weight s = 0;
    for (int v = 0; v < n_; ++v) s = checked_add(s, vertex_weight(v));
    return s;
}

Weight Graph::total_edge_weight() const {
    Weight s = 0;
    for (int e = 0; e < m(); ++e) s = checked_add(s, edge_weight(e));
    return s;
}

Graph build_graph(const std::vector<std::pair<Vertex, Vertex>>& edge_list,
                  const std::optional<std::vector<Weight>>& edge_weights, const BuildOptions& opt) {
    std::vector<Vertex> ids;
    for (auto [a, b] : edge_list) {
        if (a < 0 || b < 0) throw Error(ErrorKind::BadParameter, "negative vertex id");
        if (a == b) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a));
        ids.push_back(a);
        ids.push_back(b);
    }
    if (edge_weights && edge_weights->size() != edge_list.size())
        throw Error(ErrorKind::BadParameter, "one weight per listed edge expected");
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    // ids are compressed to 0..n-1 in increasing order
    auto local = [&](Vertex v) { return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()); };
    std::map<Edge, Weight> seen;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (size_t i = 0; i < edge_list.size(); ++i) {
        Edge e = make_edge(local(edge_list[i].first), local(edge_list[i].second));
        Weight w = edge_weights ? (*edge_weights)[i] : 1;
        if (w < 0) throw Error(ErrorKind::NegativeWeight, "negative edge weight");
        auto [it, fresh] = seen.emplace(e, w);
        if (!fresh && opt.reject_duplicates)
            throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(edge_list[i].first) + "-" +
                                                      std::to_string(edge_list[i].second));
        es.push_back({e.u, e.v});
    }
    Graph g(static_cast<int>(ids.size()), es);
    if (edge_weights) {
        std::vector<Weight> w(g.m());
        for (int i = 0; i < g.m(); ++i) w[i] = seen.at(g.edge(i));
        g.set_edge_weights(std::move(w));
    }
    bool identity = ids.empty() || ids.back() + 1 == static_cast<Vertex>(ids.size());
    if (!identity) {
        std::vector<std::string> labels;
        for (Vertex v : ids) labels.push_back(std::to_string(v));
        g.set_labels(std::move(labels));
    }
    return g;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts) {
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> es;
    std::vector<int> eids;
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.edge(i);
        if (local[u] >= 0 && local[v] >= 0) {
            es.push_back({local[u], local[v]});
            eids.push_back(i);
        }
    }
    Subgraph s{Graph(static_cast<int>(verts.size()), es), verts};
    if (g.has_vertex_weights()) {
        std::vector<Weight> w;
        for (Vertex v : verts) w.push_back(g.vertex_weight(v));
        s.graph.set_vertex_weights(std::move(w));
    }
    if (g.has_edge_weights()) {
        std::vector<Weight> w(s.graph.m());
        for (size_t j = 0; j < es.size(); ++j)
            w[s.graph.edge_index(es[j].first, es[j].second)] = g.edge_weight(eids[j]);
        s.graph.set_edge_weights(std::move(w));
    }
    if (g.has_labels()) {
        std::vector<std::string> l;
        for (Vertex v : verts) l.push_back(g.label(v));
        s.graph.set_labels(std::move(l));
    }
    return s;
}

Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i : edge_ids) es.push_back({g.edge(i).u, g.edge(i).v});
    Graph h(g.n(), es);
    if (g.has_vertex_weights()) h.set_vertex_weights(g.vertex_weights());
    if (g.has_edge_weights()) {
        std::vector<Weight> w(h.m());
        for (int i : edge_ids) w[h.edge_index(g.edge(i).u, g.edge(i).v)] = g.edge_weight(i);
        h.set_edge_weights(std::move(w));
    }
    if (g.has_labels()) h.set_labels(g.labels());
    return h;
}

std::variant<TwoColouring, OddCycle> bipartition_or_odd_cycle(const Graph& g) {
    std::vector<int> col(g.n(), 0), parent(g.n(), -1), depth(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (col[s]) continue;
        col[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (!col[v]) {
                    col[v] = 3 - col[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (col[v] == col[u]) {
                    // walk both ends up to their common ancestor
                    std::vector<int> a{u}, b{v};
                    int x = u, y = v;
                    while (depth[x] > depth[y]) a.push_back(x = parent[x]);
                    while (depth[y] > depth[x]) b.push_back(y = parent[y]);
                    while (x != y) {
                        a.push_back(x = parent[x]);
                        b.push_back(y = parent[y]);
                    }
                    b.pop_back();
                    std::reverse(b.begin(), b.end());
                    // u .. lca .. v, closed by the edge vu
                    OddCycle c;
                    c.cycle = std::move(a);
                    c.cycle.insert(c.cycle.end(), b.begin(), b.end());
                    return c;
                }
            }
        }
    }
    return TwoColouring{col};
}

bool is_bipartite(const Graph& g) { return std::holds_alternative<TwoColouring>(bipartition_or_odd_cycle(g)); }

bool is_proper_colouring(const Graph& g, const TwoColouring& c) {
    if (static_cast<int>(c.colour.size()) != g.n()) return false;
    for (int x : c.colour)
        if (x != 1 && x != 2) return false;
    for (auto& e : g.edges())
        if (c.colour[e.u] == c.colour[e.v]) return false;
    return true;
}

bool is_odd_cycle(const Graph& g, const OddCycle& c) {
    const auto& cy = c.cycle;
    if (cy.size() < 3 || cy.size() % 2 == 0) return false;
    std::set<Vertex> s(cy.begin(), cy.end());
    if (s.size() != cy.size()) return false;
    for (size_t i = 0; i < cy.size(); ++i)
        if (!g.has_edge(cy[i], cy[(i + 1) % cy.size()])) return false;
    return true;
}

std::vector<int> component_ids(const Graph& g, int* count) {
    std::vector<int> comp(g.n(), -1);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> st{s};
        comp[s] = c;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int v : g.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = c;
                    st.push_back(v);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool is_connected(const Graph& g) {
    int c = 0;
    component_ids(g, &c);
    return c <= 1;
}

Subgraph torso(const Graph& g, const std::vector<Vertex>& x) {
    std::vector<Vertex> xs(x.begin(), x.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) local[xs[i]] = i;
    std::set<std::pair<Vertex, Vertex>> es;
    for (auto& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0) es.insert({local[e.u], local[e.v]});
    // components of g - x
    std::vector<char> done(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (local[s] >= 0 || done[s]) continue;
        std::set<int> nb;
        std::vector<int> st{s};
        done[s] = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int v : g.neighbors(u)) {
                if (local[v] >= 0) {
                    nb.insert(local[v]);
                } else if (!done[v]) {
                    done[v] = 1;
                    st.push_back(v);
                }
            }
        }
        for (auto a = nb.begin(); a != nb.end(); ++a)
            for (auto b = std::next(a); b != nb.end(); ++b) es.insert({*a, *b});
    }
    return {Graph(static_cast<int>(xs.size()), {es.begin(), es.end()}), xs};
}

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;

BGraph to_boost(const Graph& g) {
    BGraph bg(g.n());
    for (int i = 0; i < g.m(); ++i) boost::add_edge(g.edge(i).u, g.edge(i).v, i, bg);
    return bg;
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult r;
    if (g.n() >= 3 && g.m() > 3 * g.n() - 6) {
        // Euler bound; still produce the witness below
    }
    BGraph bg = to_boost(g);
    using ED = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<ED>> emb(g.n());
    std::vector<ED> kur;
    r.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    auto eidx = boost::get(boost::edge_index, bg);
    if (r.planar) {
        r.rotation.resize(g.n());
        for (int v = 0; v < g.n(); ++v)
            for (auto& e : emb[v]) {
                int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
                r.rotation[v].push_back(a == v ? b : a);
            }
    } else {
        for (auto& e : kur) r.kuratowski.push_back(eidx[e]);
        std::sort(r.kuratowski.begin(), r.kuratowski.end());
        r.kuratowski.erase(std::unique(r.kuratowski.begin(), r.kuratowski.end()), r.kuratowski.end());
        // the isolated subgraph can carry stray edges; prune to a minimal non-planar edge set
        auto planar_without = [&](const std::vector<int>& ids, size_t skip) {
            BGraph h(g.n());
            for (size_t j = 0; j < ids.size(); ++j)
                if (j != skip) boost::add_edge(g.edge(ids[j]).u, g.edge(ids[j]).v, static_cast<int>(j), h);
            return boost::boyer_myrvold_planarity_test(h);
        };
        for (size_t j = 0; j < r.kuratowski.size();) {
            if (!planar_without(r.kuratowski, j))
                r.kuratowski.erase(r.kuratowski.begin() + j);
            else
                ++j;
        }
    }
    return r;
}

bool check_embedding(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
    if (static_cast<int>(rotation.size()) != g.n()) return false;
    // position of each neighbour in the rotation
    std::vector<std::map<Vertex, int>> pos(g.n());
    for (int v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v);
        std::vector<Vertex> r = rotation[v];
        std::sort(r.begin(), r.end());
        if (!std::equal(r.begin(), r.end(), nb.begin(), nb.end())) return false;
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) pos[v][rotation[v][i]] = i;
    }
    // trace faces over darts
    std::set<std::pair<Vertex, Vertex>> used;
    long long faces = 0;
    for (int u = 0; u < g.n(); ++u)
        for (Vertex v : rotation[u]) {
            if (used.count({u, v})) continue;
            ++faces;
            Vertex a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                int i = pos[b][a];
                Vertex c = rotation[b][(i + 1) % rotation[b].size()];
                a = b;
                b = c;
            }
        }
    int comps = 0;
    auto cid = component_ids(g, &comps);
    // isolated vertices have no darts; each contributes one face of its own
    int isolated = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) ++isolated;
    // Euler per component summed: V - E + F = 2C, counting an isolated vertex as V=1,F=1
    return static_cast<long long>(g.n()) - g.m() + faces + isolated == 2LL * comps;
}

bool check_kuratowski(const Graph& g, const std::vector<int>& edge_ids) {
    if (edge_ids.empty()) return false;
    std::map<Vertex, std::vector<Vertex>> adj;
    for (int i : edge_ids) {
        if (i < 0 || i >= g.m()) return false;
        adj[g.edge(i).u].push_back(g.edge(i).v);
        adj[g.edge(i).v].push_back(g.edge(i).u);
    }
    std::vector<Vertex> branch;
    for (auto& [v, nb] : adj) {
        if (nb.size() == 2) continue;
        if (nb.size() != 3 && nb.size() != 4) return false;
        branch.push_back(v);
    }
    // connected?
    {
        std::set<Vertex> seen{adj.begin()->first};
        std::vector<Vertex> st{adj.begin()->first};
        while (!st.empty()) {
            Vertex u = st.back();
            st.pop_back();
            for (Vertex w : adj[u])
                if (seen.insert(w).second) st.push_back(w);
        }
        if (seen.size() != adj.size()) return false;
    }
    // follow each branch path
    std::set<Vertex> bset(branch.begin(), branch.end());
    std::set<std::pair<Vertex, Vertex>> links;
    for (Vertex b : branch)
        for (Vertex first : adj[b]) {
            Vertex prev = b, cur = first;
            int steps = 0;
            while (!bset.count(cur)) {
                auto& nb = adj[cur];
                Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
                if (++steps > static_cast<int>(adj.size())) return false;
            }
            if (cur == b) return false;
            auto key = std::minmax(b, cur);
            links.insert({key.first, key.second});
        }
    if (branch.size() == 5) {
        for (Vertex b : branch)
            if (adj[b].size() != 4) return false;
        return links.size() == 10;
    }
    if (branch.size() == 6) {
        for (Vertex b : branch)
            if (adj[b].size() != 3) return false;
        if (links.size() != 9) return false;
        // the link graph must be bipartite with sides of 3
        std::map<Vertex, int> side;
        side[branch[0]] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [a, b] : links) {
                if (side.count(a) && !side.count(b)) side[b] = 3 - side[a], changed = true;
                if (side.count(b) && !side.count(a)) side[a] = 3 - side[b], changed = true;
            }
        }
        for (auto [a, b] : links)
            if (side[a] == side[b]) return false;
        return true;
    }
    return false;
}

std::vector<Vertex> bfs_path(const Graph& g, Vertex s, Vertex t, const std::vector<char>* blocked) {
    std::vector<int> par(g.n(), -2);
    std::queue<int> q;
    par[s] = -1;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == t) break;
        for (int v : g.neighbors(u)) {
            if (par[v] != -2) continue;
            if (blocked && (*blocked)[v] && v != t) continue;
            par[v] = u;
            q.push(v);
        }
    }
    if (par[t] == -2) return {};
    std::vector<Vertex> p;
    for (int v = t; v != -1; v = par[v]) p.push_back(v);
    std::reverse(p.begin(), p.end());
    return p;
}

std::variant<PathPair, NoPaths> two_disjoint_paths(const Graph& g, const std::vector<Vertex>& sources,
                                                   const std::vector<Vertex>& targets) {
    const int n = g.n();
    std::vector<char> is_src(n, 0), is_tgt(n, 0);
    for (Vertex s : sources) is_src[s] = 1;
    for (Vertex t : targets) is_tgt[t] = 1;
    std::set<Vertex> su(sources.begin(), sources.end()), tu(targets.begin(), targets.end());
    if (su.empty() || tu.empty()) return NoPaths{};
    // vertex v -> v_in = 2v, v_out = 2v+1; S = 2n, T = 2n+1
    detail::Dinic d(2 * n + 2);
    const int S = 2 * n, T = 2 * n + 1;
    std::vector<int> split(n);
    for (int v = 0; v < n; ++v) {
        long long cap = 1;
        if ((su.size() == 1 && is_src[v]) || (tu.size() == 1 && is_tgt[v])) cap = 2;
        split[v] = d.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (Vertex s : su) d.add_arc(S, 2 * s, 2);
    for (Vertex t : tu) d.add_arc(2 * t + 1, T, 2);
    for (auto& e : g.edges()) {
        d.add_arc(2 * e.u + 1, 2 * e.v, 1);
        d.add_arc(2 * e.v + 1, 2 * e.u, 1);
    }
    long long f = d.max_flow(S, T, 2);
    if (f < 2) {
        auto reach = d.reachable(S);
        NoPaths np;
        for (int v = 0; v < n; ++v)
            if (reach[2 * v] && !reach[2 * v + 1]) {
                np.cut = v;
                break;
            }
        if (!np.cut && f == 1) {
            // the bottleneck is an edge: report its far endpoint
            for (auto& e : g.edges()) {
                for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
                    if (reach[2 * a + 1] && !reach[2 * b]) {
                        np.cut = is_tgt[b] && tu.size() == 1 ? a : b;
                        break;
                    }
                if (np.cut) break;
            }
        }
        return np;
    }
    // decompose: walk flow-carrying arcs from S, consuming them
    std::map<std::pair<int, int>, int> flow;
    for (int u = 0; u < 2 * n + 2; ++u)
        for (int a : d.out(u))
            if ((a & 1) == 0 && d.flow_on(a) > 0) flow[{u, d.head(a)}] += static_cast<int>(d.flow_on(a));
    PathPair pp;
    for (int rep = 0; rep < 2; ++rep) {
        std::vector<Vertex> path;
        int cur = S;
        while (cur != T) {
            int nxt = -1;
            for (auto& [key, amount] : flow)
                if (key.first == cur && amount > 0) {
                    nxt = key.second;
                    --amount;
                    break;
                }
            if (nxt < 0) break;
            if (nxt < 2 * n && nxt % 2 == 0) {
                // a circulation in the flow would revisit; cut the loop out
                auto it = std::find(path.begin(), path.end(), nxt / 2);
                if (it != path.end()) path.erase(it, path.end());
                path.push_back(nxt / 2);
            }
            cur = nxt;
        }
        // trim to the last source before the first target
        int ft = 0;
        while (!is_tgt[path[ft]]) ++ft;
        int ls = ft;
        while (!is_src[path[ls]]) --ls;
        std::vector<Vertex> p(path.begin() + ls, path.begin() + ft + 1);
        (rep == 0 ? pp.first : pp.second) = std::move(p);
    }
    return pp;
}

}  // namespace oddminor
