#include "oddminor/maxcut.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "nice_dp.hpp"

namespace oddminor {

bool is_cut(const Graph& g, const std::vector<int>& f) {
    std::vector<char> in_f(g.m(), 0);
    for (int e : f) {
        if (e < 0 || e >= g.m()) return false;
        in_f[e] = 1;
    }
    std::vector<int> col(g.n(), -1);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::deque<Vertex> q{s};
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            auto nb = g.neighbors(v);
            auto ids = g.incident(v);
            for (size_t i = 0; i < nb.size(); ++i) {
                int want = col[v] ^ in_f[ids[i]];
                if (col[nb[i]] < 0) {
                    col[nb[i]] = want;
                    q.push_back(nb[i]);
                } else if (col[nb[i]] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

CutSolution cut_from_side(const Graph& g, std::vector<int> side) {
    CutSolution s;
    for (int e = 0; e < g.m(); ++e)
        if (side[g.edge(e).u] != side[g.edge(e).v]) {
            s.cut_edges.push_back(e);
            s.weight = checked_add(s.weight, g.edge_weight(e));
        }
    s.side = std::move(side);
    return s;
}

CutSolution brute_maxcut(const Graph& g) {
    const int n = g.n();
    if (n > 20) throw Error(ErrorKind::TooLarge, "brute_maxcut handles at most 20 vertices");
    if (n <= 1) return cut_from_side(g, std::vector<int>(n, 0));
    g.total_edge_weight();  // overflow check up front
    // Gray code over vertices 1..n-1, vertex 0 stays on side 0; mask bit n-1-v is side[v]
    std::vector<int> side(n, 0);
    Weight cur = 0, best = 0;
    unsigned mask = 0, best_mask = 0;
    for (unsigned i = 1; i < (1u << (n - 1)); ++i) {
        int bit = std::countr_zero(i);
        Vertex v = n - 1 - bit;
        auto nb = g.neighbors(v);
        auto ids = g.incident(v);
        for (size_t j = 0; j < nb.size(); ++j) cur += side[nb[j]] == side[v] ? g.edge_weight(ids[j]) : -g.edge_weight(ids[j]);
        side[v] ^= 1;
        mask ^= 1u << bit;
        if (cur > best || (cur == best && mask < best_mask)) {
            best = cur;
            best_mask = mask;
        }
    }
    for (Vertex v = 0; v < n; ++v) side[v] = best_mask >> (n - 1 - v) & 1;
    return cut_from_side(g, side);
}

CutSolution bipartite_maxcut(const Graph& g) {
    auto r = bipartition_or_odd_cycle(g);
    if (!std::holds_alternative<TwoColouring>(r)) throw Error(ErrorKind::NotBipartite, "bipartite_maxcut needs a bipartite graph");
    std::vector<int> side(g.n());
    for (Vertex v = 0; v < g.n(); ++v) side[v] = std::get<TwoColouring>(r).colour[v] - 1;
    return cut_from_side(g, side);
}

CutSolution tw_maxcut(const Graph& g, const TreeDecomposition& t, const CutTwOptions& opt) {
    if (opt.max_width > 24) throw Error(ErrorKind::BadParameter, "max_width above 24 is not supported");
    if (auto bad = validate_decomposition(g, t))
        throw Error(ErrorKind::PreconditionViolated, "not a tree-decomposition: " + bad->message);
    int w = metrics(t).width;
    if (w > opt.max_width)
        throw Error(ErrorKind::WidthTooLarge,
                    "decomposition width " + std::to_string(w) + " exceeds " + std::to_string(opt.max_width));
    if (g.n() == 0) return {};
    g.total_edge_weight();
    using detail::drop_bit;
    using detail::position;
    using detail::put_bit;
    NiceDecomposition nd = make_nice(t);
    const int k = nd.td.size();
    std::vector<std::vector<Weight>> tab(k);
    // weight of edges from v to the bag vertices on the other side
    auto gain = [&](const std::vector<Vertex>& bag, int p, unsigned m) {
        Weight s = 0;
        Vertex v = bag[p];
        for (int i = 0; i < static_cast<int>(bag.size()); ++i) {
            if (i == p || ((m >> i & 1) == (m >> p & 1))) continue;
            int e = g.edge_index(v, bag[i]);
            if (e >= 0) s += g.edge_weight(e);
        }
        return s;
    };
    for (int x : nd.postorder()) {
        const auto& bag = nd.td.bags[x];
        auto& tb = tab[x];
        tb.assign(std::size_t{1} << bag.size(), 0);
        switch (nd.kind[x]) {
            case NiceKind::Leaf:
                break;
            case NiceKind::Introduce: {
                const auto& c = tab[nd.children[x][0]];
                int p = position(bag, nd.vertex[x]);
                for (unsigned m = 0; m < tb.size(); ++m) tb[m] = c[drop_bit(m, p)];
                break;
            }
            case NiceKind::Forget: {
                int cx = nd.children[x][0];
                const auto& cb = nd.td.bags[cx];
                int p = position(cb, nd.vertex[x]);
                for (unsigned m = 0; m < tb.size(); ++m) {
                    unsigned a = put_bit(m, p, 0), b = put_bit(m, p, 1);
                    tb[m] = std::max(tab[cx][a] + gain(cb, p, a), tab[cx][b] + gain(cb, p, b));
                }
                break;
            }
            case NiceKind::Join: {
                const auto& c1 = tab[nd.children[x][0]];
                const auto& c2 = tab[nd.children[x][1]];
                for (unsigned m = 0; m < tb.size(); ++m) tb[m] = c1[m] + c2[m];
                break;
            }
        }
    }
    const int r = nd.td.root;
    const auto& rb = nd.td.bags[r];
    Weight best = -1;
    unsigned best_mask = 0;
    for (unsigned m = 0; m < tab[r].size(); ++m) {
        Weight val = tab[r][m];
        for (int i = 0; i < static_cast<int>(rb.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(rb.size()); ++j)
                if ((m >> i & 1) != (m >> j & 1)) {
                    int e = g.edge_index(rb[i], rb[j]);
                    if (e >= 0) val += g.edge_weight(e);
                }
        if (val > best) {
            best = val;
            best_mask = m;
        }
    }
    std::vector<int> side(g.n(), 0);
    std::vector<std::pair<int, unsigned>> stack{{r, best_mask}};
    while (!stack.empty()) {
        auto [x, m] = stack.back();
        stack.pop_back();
        const auto& bag = nd.td.bags[x];
        for (int i = 0; i < static_cast<int>(bag.size()); ++i) side[bag[i]] = m >> i & 1;
        switch (nd.kind[x]) {
            case NiceKind::Leaf:
                break;
            case NiceKind::Introduce:
                stack.push_back({nd.children[x][0], drop_bit(m, position(bag, nd.vertex[x]))});
                break;
            case NiceKind::Forget: {
                int cx = nd.children[x][0];
                const auto& cb = nd.td.bags[cx];
                int p = position(cb, nd.vertex[x]);
                unsigned a = put_bit(m, p, 0), b = put_bit(m, p, 1);
                stack.push_back({cx, tab[cx][a] + gain(cb, p, a) == tab[x][m] ? a : b});
                break;
            }
            case NiceKind::Join:
                stack.push_back({nd.children[x][0], m});
                stack.push_back({nd.children[x][1], m});
                break;
        }
    }
    // normalise: lowest vertex of each component on side 0
    int comps = 0;
    auto cid = component_ids(g, &comps);
    std::vector<int> flip(comps, -1);
    for (Vertex v = 0; v < g.n(); ++v)
        if (flip[cid[v]] < 0) flip[cid[v]] = side[v];
    for (Vertex v = 0; v < g.n(); ++v) side[v] ^= flip[cid[v]];
    CutSolution s = cut_from_side(g, side);
    if (s.weight != best) throw Error(ErrorKind::PreconditionViolated, "internal audit failed: cut DP mismatch");
    return s;
}

CutSolution blind_maxcut(const Graph& g, const BlindCutOptions& opt) {
    g.total_edge_weight();
    TreeDecomposition t = block_cut_forest(g);
    const int k = t.size();
    std::vector<int> side(g.n(), -1);
    CutSolution total;
    if (k == 0) return cut_from_side(g, {});
    auto adj = t.adjacency();
    std::vector<int> order{t.root}, seen(k, 0);
    seen[t.root] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (int y : adj[order[i]])
            if (!seen[y]) {
                seen[y] = 1;
                order.push_back(y);
            }
    Weight sum = 0;
    for (int x : order) {
        const auto& bag = t.bags[x];
        Subgraph blk = induced_subgraph(g, bag);
        CutTraceEntry e;
        e.vertices = bag;
        CutSolution local;
        if (is_bipartite(blk.graph)) {
            e.solver = "bipartite";
            local = bipartite_maxcut(blk.graph);
        } else {
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
                e.solver = "treewidth";
                e.width = wd;
                local = tw_maxcut(blk.graph, td, CutTwOptions{std::max(opt.cutoff, 1)});
            } else if (blk.graph.n() <= opt.brute_limit) {
                e.solver = "brute";
                local = brute_maxcut(blk.graph);
            } else {
                std::string vs;
                for (Vertex v : bag) vs += (vs.empty() ? "" : ",") + std::to_string(v);
                throw Error(ErrorKind::BlindWidthExceeded, "non-bipartite block {" + vs + "} has treewidth bound " +
                                                               std::to_string(wd) + " > cutoff " +
                                                               std::to_string(opt.cutoff) + " and is too large for brute force");
            }
        }
        // flip so that an already placed vertex keeps its side
        int flip = 0;
        for (int i = 0; i < static_cast<int>(bag.size()); ++i)
            if (side[bag[i]] >= 0) {
                flip = side[bag[i]] ^ local.side[i];
                break;
            }
        for (int i = 0; i < static_cast<int>(bag.size()); ++i) {
            int sv = local.side[i] ^ flip;
            if (side[bag[i]] >= 0 && side[bag[i]] != sv)
                throw Error(ErrorKind::PreconditionViolated, "internal audit failed: blocks overlap in more than one vertex");
            side[bag[i]] = sv;
        }
        e.weight = local.weight;
        e.flipped = flip;
        sum = checked_add(sum, local.weight);
        total.trace.push_back(e);
    }
    CutSolution s = cut_from_side(g, side);
    s.trace = std::move(total.trace);
    if (s.weight != sum) throw Error(ErrorKind::PreconditionViolated, "internal audit failed: block weights do not add up");
    return s;
}

}  // namespace oddminor
