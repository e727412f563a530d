#include "oddminor/treewidth.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace oddminor {

namespace {

using Mask = std::uint64_t;

struct MaskGraph {
    int n;
    std::vector<Mask> nb;
    explicit MaskGraph(const Graph& g) : n(g.n()), nb(g.n(), 0) {
        for (auto& e : g.edges()) {
            nb[e.u] |= Mask{1} << e.v;
            nb[e.v] |= Mask{1} << e.u;
        }
    }
    // vertices outside S + v reachable from v through S
    Mask q(Mask S, int v) const {
        Mask seen = Mask{1} << v, frontier = seen, out = 0;
        while (frontier) {
            int u = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            Mask nbs = nb[u] & ~seen;
            seen |= nbs;
            out |= nbs & ~S;
            frontier |= nbs & S;
        }
        return out;
    }
};

}  // namespace

int treewidth_lower_bound(const Graph& g) {
    std::vector<std::set<int>> adj(g.n());
    for (auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> alive(g.n(), 1);
    int left = g.n(), lb = 0;
    while (left > 1) {
        int v = -1;
        for (int u = 0; u < g.n(); ++u)
            if (alive[u] && (v < 0 || adj[u].size() < adj[v].size())) v = u;
        lb = std::max(lb, static_cast<int>(adj[v].size()));
        if (adj[v].empty()) {
            alive[v] = 0;
            --left;
            continue;
        }
        // contract into the neighbour sharing the fewest neighbours
        int best = -1;
        size_t best_common = 0;
        for (int u : adj[v]) {
            size_t common = 0;
            for (int w : adj[u]) common += adj[v].count(w);
            if (best < 0 || common < best_common) best = u, best_common = common;
        }
        for (int w : adj[v]) {
            adj[w].erase(v);
            if (w != best) {
                adj[w].insert(best);
                adj[best].insert(w);
            }
        }
        adj[v].clear();
        alive[v] = 0;
        --left;
    }
    return lb;
}

std::vector<Vertex> elimination_order(const Graph& g, Heuristic h) {
    std::vector<std::set<int>> adj(g.n());
    for (auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> gone(g.n(), 0);
    std::vector<Vertex> order;
    auto fill = [&](int v) {
        long long f = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
            for (auto b = std::next(a); b != adj[v].end(); ++b)
                if (!adj[*a].count(*b)) ++f;
        return f;
    };
    for (int step = 0; step < g.n(); ++step) {
        int best = -1;
        long long score = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (gone[v]) continue;
            long long s = h == Heuristic::MinDegree ? static_cast<long long>(adj[v].size()) : fill(v);
            if (best < 0 || s < score) best = v, score = s;
        }
        order.push_back(best);
        gone[best] = 1;
        for (auto a = adj[best].begin(); a != adj[best].end(); ++a) {
            adj[*a].erase(best);
            for (auto b = std::next(a); b != adj[best].end(); ++b) {
                adj[*a].insert(*b);
                adj[*b].insert(*a);
            }
        }
        adj[best].clear();
    }
    return order;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.n();
    TreeDecomposition t;
    if (n == 0) {
        t.bags.push_back({});
        t.root = 0;
        return t;
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::set<int>> adj(n);
    for (auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<std::vector<Vertex>> bag(n);
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int u : adj[v])
            if (pos[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b) {
                adj[later[a]].insert(later[b]);
                adj[later[b]].insert(later[a]);
            }
        bag[i] = later;
        bag[i].push_back(v);
        std::sort(bag[i].begin(), bag[i].end());
        int p = -1;
        for (int u : later)
            if (p < 0 || pos[u] < p) p = pos[u];
        parent[i] = p;
    }
    // drop nodes whose bag is inside the parent bag
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::vector<char> keep(n, 1);
    for (int i = 0; i < n; ++i) {
        int p = parent[i];
        if (p >= 0 && std::includes(bag[p].begin(), bag[p].end(), bag[i].begin(), bag[i].end())) keep[i] = 0;
    }
    // kept ancestor of each node (parents come later in the order)
    std::vector<int> up(n, -1);
    for (int i = n - 1; i >= 0; --i) {
        int p = parent[i];
        if (p < 0) continue;
        up[i] = keep[p] ? p : up[p];
    }
    std::vector<int> id(n, -1);
    for (int i = 0; i < n; ++i)
        if (keep[i]) {
            id[i] = t.size();
            t.bags.push_back(bag[i]);
        }
    // a dropped node's children hang from the dropped node's kept ancestor, which still covers them
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        if (up[i] >= 0)
            t.tree.push_back({id[i], id[up[i]]});
        else
            roots.push_back(id[i]);
    }
    for (size_t j = 1; j < roots.size(); ++j) t.tree.push_back({roots[j - 1], roots[j]});
    t.root = roots.back();
    return t;
}

TreeDecomposition heuristic_decomposition(const Graph& g, Heuristic h) {
    return decomposition_from_order(g, elimination_order(g, h));
}

ExactResult exact_treewidth(const Graph& g, const ExactOptions& opt) {
    const int n = g.n();
    if (n > opt.max_vertices || n > 64) throw Error(ErrorKind::TooLarge, "exact_treewidth limit exceeded");
    ExactResult res;
    if (n == 0) {
        res.width = -1;
        res.decomposition = decomposition_from_order(g, {});
        return res;
    }
    MaskGraph mg(g);
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    auto upper_order = elimination_order(g, Heuristic::MinFill);
    int upper = metrics(decomposition_from_order(g, upper_order)).width;
    int lower = std::min(treewidth_lower_bound(g), upper);
    long long explored = 0;
    for (int k = lower; k < upper; ++k) {
        // breadth-first over elimination prefixes
        std::unordered_map<Mask, std::pair<Mask, int>> parent;
        std::vector<Mask> layer{0};
        parent[0] = {0, -1};
        Mask done = all + 1;  // sentinel for "not found"
        bool found = false;
        for (int size = 0; !layer.empty() && !found; ++size) {
            std::vector<Mask> next;
            for (Mask S : layer) {
                if (n - size - 1 <= k) {
                    done = S;
                    found = true;
                    break;
                }
                for (int v = 0; v < n; ++v) {
                    if (S >> v & 1) continue;
                    Mask T = S | (Mask{1} << v);
                    if (parent.count(T)) continue;
                    if (__builtin_popcountll(mg.q(S, v)) > k) continue;
                    parent[T] = {S, v};
                    next.push_back(T);
                    if (++explored > opt.budget)
                        throw Error(ErrorKind::BudgetExhausted, "exact_treewidth budget exhausted");
                }
            }
            layer = std::move(next);
        }
        if (!found) continue;
        std::vector<Vertex> order;
        for (Mask S = done; S != 0; S = parent[S].first) order.push_back(parent[S].second);
        std::reverse(order.begin(), order.end());
        for (int v = 0; v < n; ++v)
            if (!(done >> v & 1)) order.push_back(v);
        res.width = k;
        res.order = order;
        res.decomposition = decomposition_from_order(g, order);
        return res;
    }
    res.width = upper;
    res.order = upper_order;
    res.decomposition = decomposition_from_order(g, upper_order);
    return res;
}

std::vector<int> NiceDecomposition::postorder() const {
    std::vector<int> out;
    if (td.root < 0) return out;
    std::vector<std::pair<int, size_t>> st{{td.root, 0}};
    while (!st.empty()) {
        auto& [x, i] = st.back();
        if (i < children[x].size()) {
            int c = children[x][i++];
            st.push_back({c, 0});
        } else {
            out.push_back(x);
            st.pop_back();
        }
    }
    return out;
}

NiceDecomposition make_nice(const TreeDecomposition& t) {
    NiceDecomposition nd;
    auto add = [&](std::vector<Vertex> bag, NiceKind k, Vertex v, std::vector<int> ch) {
        int id = nd.td.size();
        nd.td.bags.push_back(std::move(bag));
        nd.kind.push_back(k);
        nd.vertex.push_back(v);
        nd.children.push_back(std::move(ch));
        return id;
    };
    if (t.size() == 0) {
        nd.td.root = add({}, NiceKind::Leaf, -1, {});
        return nd;
    }
    const int root = t.root >= 0 ? t.root : 0;
    auto adj = t.adjacency();
    // orient the tree
    std::vector<int> par(t.size(), -2), order;
    std::vector<int> st{root};
    par[root] = -1;
    while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        order.push_back(u);
        for (int w : adj[u])
            if (par[w] == -2) {
                par[w] = u;
                st.push_back(w);
            }
    }
    std::vector<std::vector<int>> kids(t.size());
    for (int u : order)
        if (par[u] >= 0) kids[par[u]].push_back(u);
    for (auto& k : kids) std::sort(k.begin(), k.end());
    std::vector<int> top(t.size(), -1);  // nice node whose bag equals the original bag

    // walk from node `from` (with bag `have`) up to bag `want`
    auto chain = [&](int from, std::vector<Vertex> have, const std::vector<Vertex>& want) {
        for (Vertex v : std::vector<Vertex>(have)) {
            if (std::binary_search(want.begin(), want.end(), v)) continue;
            have.erase(std::find(have.begin(), have.end(), v));
            from = add(have, NiceKind::Forget, v, {from});
        }
        for (Vertex v : want) {
            if (std::binary_search(have.begin(), have.end(), v)) continue;
            have.insert(std::upper_bound(have.begin(), have.end(), v), v);
            from = add(have, NiceKind::Introduce, v, {from});
        }
        return from;
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        std::vector<Vertex> bag = t.bags[x];
        std::sort(bag.begin(), bag.end());
        std::vector<int> tops;
        for (int c : kids[x]) {
            std::vector<Vertex> cb = t.bags[c];
            std::sort(cb.begin(), cb.end());
            tops.push_back(chain(top[c], cb, bag));
        }
        if (tops.empty()) {
            int leaf = add({}, NiceKind::Leaf, -1, {});
            top[x] = chain(leaf, {}, bag);
        } else {
            while (tops.size() > 1) {
                std::vector<int> next;
                for (size_t i = 0; i + 1 < tops.size(); i += 2) next.push_back(add(bag, NiceKind::Join, -1, {tops[i], tops[i + 1]}));
                if (tops.size() % 2) next.push_back(tops.back());
                tops = std::move(next);
            }
            top[x] = tops[0];
        }
    }
    nd.td.root = top[root];
    for (int x = 0; x < nd.td.size(); ++x)
        for (int c : nd.children[x]) nd.td.tree.push_back({x, c});
    return nd;
}

bool is_nice(const NiceDecomposition& nd) {
    for (int x = 0; x < nd.td.size(); ++x) {
        const auto& b = nd.td.bags[x];
        const auto& ch = nd.children[x];
        switch (nd.kind[x]) {
            case NiceKind::Leaf:
                if (!ch.empty() || !b.empty()) return false;
                break;
            case NiceKind::Introduce: {
                if (ch.size() != 1) return false;
                auto c = nd.td.bags[ch[0]];
                c.push_back(nd.vertex[x]);
                std::sort(c.begin(), c.end());
                if (c != b) return false;
                break;
            }
            case NiceKind::Forget: {
                if (ch.size() != 1) return false;
                auto c = b;
                c.push_back(nd.vertex[x]);
                std::sort(c.begin(), c.end());
                if (c != nd.td.bags[ch[0]]) return false;
                break;
            }
            case NiceKind::Join:
                if (ch.size() != 2 || nd.td.bags[ch[0]] != b || nd.td.bags[ch[1]] != b) return false;
                break;
        }
    }
    return true;
}

}  // namespace oddminor
