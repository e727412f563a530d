#include "oddminor/mis.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

#include "flow.hpp"
#include "nice_dp.hpp"

namespace oddminor {

bool is_independent(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<char> in(g.n(), 0);
    for (Vertex v : s) {
        if (v < 0 || v >= g.n() || in[v]) return false;
        in[v] = 1;
    }
    for (auto& e : g.edges())
        if (in[e.u] && in[e.v]) return false;
    return true;
}

Weight set_weight(const Graph& g, const std::vector<Vertex>& s) {
    Weight w = 0;
    for (Vertex v : s) w = checked_add(w, g.vertex_weight(v));
    return w;
}

MisSolution brute_mwis(const Graph& g) {
    const int n = g.n();
    if (n > 22) throw Error(ErrorKind::TooLarge, "brute_mwis handles at most 22 vertices");
    std::vector<unsigned> nb(n, 0);
    for (auto& e : g.edges()) {
        nb[e.u] |= 1u << e.v;
        nb[e.v] |= 1u << e.u;
    }
    MisSolution best;
    std::vector<Vertex> cur;
    std::function<void(int, unsigned, Weight)> rec = [&](int v, unsigned blocked, Weight w) {
        if (v == n) {
            if (w > best.weight || (w == best.weight && cur < best.vertices)) {
                best.weight = w;
                best.vertices = cur;
            }
            return;
        }
        if (!(blocked >> v & 1)) {
            cur.push_back(v);
            rec(v + 1, blocked | nb[v], checked_add(w, g.vertex_weight(v)));
            cur.pop_back();
        }
        rec(v + 1, blocked, w);
    };
    rec(0, 0, 0);
    return best;
}

MisSolution bipartite_mwis(const Graph& g) {
    auto col = bipartition_or_odd_cycle(g);
    if (!std::holds_alternative<TwoColouring>(col)) throw Error(ErrorKind::NotBipartite, "bipartite_mwis needs a bipartite graph");
    const auto& c = std::get<TwoColouring>(col).colour;
    const int n = g.n();
    const Weight total = g.total_vertex_weight();
    if (total >= detail::Dinic::kInf) throw Error(ErrorKind::Overflow, "weights too large for the flow network");
    detail::Dinic d(n + 2);
    const int S = n, T = n + 1;
    for (int v = 0; v < n; ++v) {
        if (c[v] == 1)
            d.add_arc(S, v, g.vertex_weight(v));
        else
            d.add_arc(v, T, g.vertex_weight(v));
    }
    for (auto& e : g.edges()) {
        int a = c[e.u] == 1 ? e.u : e.v, b = a == e.u ? e.v : e.u;
        d.add_arc(a, b, detail::Dinic::kInf);
    }
    MisSolution s;
    s.cover_weight = d.max_flow(S, T);
    auto reach = d.reachable(S);
    for (int v = 0; v < n; ++v)
        if ((c[v] == 1) == static_cast<bool>(reach[v])) s.vertices.push_back(v);
    s.weight = total - s.cover_weight;
    return s;
}

namespace {

// restrict a decomposition to the vertices with local[v] >= 0, relabelled
TreeDecomposition restrict_td(const TreeDecomposition& t, const std::vector<int>& local) {
    TreeDecomposition r = t;
    for (auto& bag : r.bags) {
        std::vector<Vertex> nb;
        for (Vertex v : bag)
            if (local[v] >= 0) nb.push_back(local[v]);
        std::sort(nb.begin(), nb.end());
        bag = std::move(nb);
    }
    return r;
}

}  // namespace

MisSolution tw_mwis(const Graph& g, const TreeDecomposition& t, const TwOptions& opt) {
    if (metrics(t).width > opt.max_width)
        throw Error(ErrorKind::WidthTooLarge, "decomposition width " + std::to_string(metrics(t).width) + " exceeds " +
                                                  std::to_string(opt.max_width));
    if (opt.max_width > 24) throw Error(ErrorKind::BadParameter, "max_width above 24 is not supported");
    if (auto bad = validate_decomposition(g, t))
        throw Error(ErrorKind::PreconditionViolated, "not a tree-decomposition: " + bad->message);
    if (g.n() == 0) return {};
    NiceDecomposition nd = make_nice(t);
    MisSolution s;
    s.weight = detail::mis_dp(g, nd, &s.vertices);
    if (!opt.canonical) return s;
    // greedy towards the lexicographically least optimum
    const int n = g.n();
    std::vector<char> banned(n, 0);
    std::vector<Vertex> chosen;
    Weight have = 0;
    for (Vertex v = 0; v < n && have != s.weight; ++v) {
        if (banned[v]) continue;
        std::vector<int> local(n, -1);
        std::vector<Vertex> rest;
        for (Vertex u = v + 1; u < n; ++u)
            if (!banned[u] && !g.has_edge(u, v)) {
                local[u] = static_cast<int>(rest.size());
                rest.push_back(u);
            }
        Weight with = checked_add(have, g.vertex_weight(v));
        Subgraph sub = induced_subgraph(g, rest);
        Weight best_rest = rest.empty() ? 0 : detail::mis_dp(sub.graph, make_nice(restrict_td(t, local)), nullptr);
        if (checked_add(with, best_rest) == s.weight) {
            chosen.push_back(v);
            have = with;
            for (Vertex u : g.neighbors(v)) banned[u] = 1;
        }
        banned[v] = 1;
    }
    s.vertices = chosen;
    return s;
}

namespace {

struct BlockSolver {
    const Graph& g;  // connected component, local ids
    const BlindOptions& opt;
    TreeDecomposition t;
    std::vector<std::vector<int>> kids;
    std::vector<int> parent;
    std::vector<Vertex> attach;
    std::vector<char> bip;
    std::vector<TreeDecomposition> block_td;  // local to the block's sorted vertex list
    std::vector<int> width;
    std::vector<Weight> in, out;

    BlockSolver(const Graph& g_, const BlindOptions& o) : g(g_), opt(o) {}

    // G_t+ with the given removed vertices, solved exactly; returns chosen vertices (host ids, pendants as -1-i)
    std::pair<Weight, std::vector<int>> solve_plus(int x, const std::vector<int>& removed_host, bool drop_pendants_at) {
        const auto& bag = t.bags[x];
        const int b = static_cast<int>(bag.size());
        // local numbering: block vertices 0..b-1, then pendants
        std::vector<int> pend_of;  // child index per pendant
        for (int i = 0; i < static_cast<int>(kids[x].size()); ++i) pend_of.push_back(i);
        std::vector<char> gone(b + pend_of.size(), 0);
        for (int h : removed_host) {
            auto it = std::lower_bound(bag.begin(), bag.end(), h);
            if (it != bag.end() && *it == h) gone[it - bag.begin()] = 1;
        }
        // pendants hanging at a removed neighbourhood centre are removed too
        if (drop_pendants_at)
            for (size_t i = 0; i < pend_of.size(); ++i)
                if (attach[kids[x][i]] == attach[x]) gone[b + i] = 1;
        std::vector<int> keep, local(b + pend_of.size(), -1);
        for (int i = 0; i < static_cast<int>(gone.size()); ++i)
            if (!gone[i]) {
                local[i] = static_cast<int>(keep.size());
                keep.push_back(i);
            }
        std::vector<std::pair<Vertex, Vertex>> es;
        for (int i = 0; i < b; ++i)
            for (int j = i + 1; j < b; ++j)
                if (local[i] >= 0 && local[j] >= 0 && g.has_edge(bag[i], bag[j])) es.push_back({local[i], local[j]});
        std::vector<int> pend_anchor(pend_of.size());
        for (size_t i = 0; i < pend_of.size(); ++i) {
            Vertex a = attach[kids[x][i]];
            pend_anchor[i] = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), a) - bag.begin());
            if (local[b + i] >= 0 && local[pend_anchor[i]] >= 0) es.push_back({local[b + i], local[pend_anchor[i]]});
        }
        Graph h(static_cast<int>(keep.size()), es);
        std::vector<Weight> w(keep.size());
        for (size_t q = 0; q < keep.size(); ++q) {
            int i = keep[q];
            if (i < b) {
                w[q] = g.vertex_weight(bag[i]);
                for (size_t p = 0; p < pend_of.size(); ++p)
                    if (pend_anchor[p] == i) w[q] = checked_add(w[q], in[kids[x][p]]);
            } else {
                w[q] = out[kids[x][i - b]];
            }
        }
        h.set_vertex_weights(w);
        MisSolution sol;
        if (bip[x]) {
            sol = bipartite_mwis(h);
        } else {
            // block decomposition plus one bag per pendant
            TreeDecomposition td = block_td[x];
            for (size_t p = 0; p < pend_of.size(); ++p) {
                int home = 0;
                for (int q = 0; q < td.size(); ++q)
                    if (std::binary_search(td.bags[q].begin(), td.bags[q].end(), pend_anchor[p])) {
                        home = q;
                        break;
                    }
                std::vector<Vertex> pb{pend_anchor[p], static_cast<Vertex>(b + p)};
                td.bags.push_back(pb);
                td.tree.push_back({home, td.size() - 1});
            }
            TwOptions two;
            two.max_width = std::max(opt.cutoff, 1);
            two.canonical = false;
            sol = tw_mwis(h, restrict_td(td, local), two);
        }
        std::vector<int> picked;
        for (Vertex q : sol.vertices) {
            int i = keep[q];
            picked.push_back(i < b ? bag[i] : -1 - (i - b));
        }
        return {sol.weight, picked};
    }

    std::vector<int> closed_nbhd_in_block(int x, Vertex v) {
        std::vector<int> r{v};
        for (Vertex u : g.neighbors(v))
            if (std::binary_search(t.bags[x].begin(), t.bags[x].end(), u)) r.push_back(u);
        return r;
    }

    Weight sum_in_at(int x, Vertex v) {
        Weight s = 0;
        for (int d : kids[x])
            if (attach[d] == v) s = checked_add(s, in[d]);
        return s;
    }

    void prepare(std::vector<MisTraceEntry>& trace, const std::vector<Vertex>& to_host) {
        t = block_cut_decomposition(g);
        const int k = t.size();
        auto adj = t.adjacency();
        parent.assign(k, -2);
        kids.assign(k, {});
        attach.assign(k, -1);
        std::vector<int> order{t.root};
        parent[t.root] = -1;
        for (size_t i = 0; i < order.size(); ++i)
            for (int y : adj[order[i]])
                if (parent[y] == -2) {
                    parent[y] = order[i];
                    kids[order[i]].push_back(y);
                    order.push_back(y);
                }
        for (int x = 0; x < k; ++x) {
            if (parent[x] < 0) {
                attach[x] = t.bags[x].front();
                continue;
            }
            std::vector<Vertex> inter;
            std::set_intersection(t.bags[x].begin(), t.bags[x].end(), t.bags[parent[x]].begin(),
                                  t.bags[parent[x]].end(), std::back_inserter(inter));
            attach[x] = inter.at(0);
        }
        bip.assign(k, 1);
        block_td.assign(k, {});
        width.assign(k, -1);
        for (int x = 0; x < k; ++x) {
            Subgraph blk = induced_subgraph(g, t.bags[x]);
            bip[x] = is_bipartite(blk.graph);
            if (bip[x]) continue;
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
                    // budget ran out: keep the heuristic bound
                }
            }
            if (wd > opt.cutoff) {
                std::string vs;
                for (Vertex v : t.bags[x]) vs += (vs.empty() ? "" : ",") + std::to_string(to_host[v]);
                throw Error(ErrorKind::BlindWidthExceeded, "non-bipartite block {" + vs + "} has treewidth bound " +
                                                               std::to_string(wd) + " > cutoff " +
                                                               std::to_string(opt.cutoff));
            }
            block_td[x] = td;
            width[x] = wd;
        }
        in.assign(k, 0);
        out.assign(k, 0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int x = *it;
            Vertex v = attach[x];
            out[x] = solve_plus(x, {v}, false).first;
            in[x] = checked_add(solve_plus(x, closed_nbhd_in_block(x, v), true).first, sum_in_at(x, v));
        }
        for (int x : order) {
            MisTraceEntry e;
            e.block = static_cast<int>(trace.size());
            for (Vertex v : t.bags[x]) e.vertices.push_back(to_host[v]);
            e.attach = to_host[attach[x]];
            e.solver = bip[x] ? "bipartite" : "treewidth";
            e.width = width[x];
            e.in = in[x];
            e.out = out[x];
            trace.push_back(e);
        }
    }

    // vertices of G_{T_x} minus v_x chosen in the given state
    void collect(int x, bool state_in, std::vector<Vertex>& acc) {
        Vertex v = attach[x];
        auto [w, picked] = state_in ? solve_plus(x, closed_nbhd_in_block(x, v), true) : solve_plus(x, {v}, false);
        std::vector<char> chosen_vertex(g.n(), 0);
        for (int p : picked)
            if (p >= 0) {
                acc.push_back(p);
                chosen_vertex[p] = 1;
            }
        if (state_in) chosen_vertex[v] = 1;
        for (int d : kids[x]) collect(d, chosen_vertex[attach[d]], acc);
    }

    MisSolution run(std::vector<MisTraceEntry>& trace, const std::vector<Vertex>& to_host) {
        prepare(trace, to_host);
        int r = t.root;
        Vertex v = attach[r];
        Weight take = checked_add(in[r], g.vertex_weight(v));
        MisSolution s;
        bool state_in = take >= out[r];
        s.weight = state_in ? take : out[r];
        if (state_in) s.vertices.push_back(v);
        collect(r, state_in, s.vertices);
        return s;
    }
};

}  // namespace

MisSolution blind_mwis(const Graph& g, const BlindOptions& opt) {
    MisSolution total;
    int comps = 0;
    auto cid = component_ids(g, &comps);
    std::vector<std::vector<Vertex>> members(comps);
    for (int v = 0; v < g.n(); ++v) members[cid[v]].push_back(v);
    for (auto& mem : members) {
        Subgraph sub = induced_subgraph(g, mem);
        BlockSolver bs(sub.graph, opt);
        MisSolution part = bs.run(total.trace, sub.to_host);
        for (Vertex v : part.vertices) total.vertices.push_back(sub.to_host[v]);
        total.weight = checked_add(total.weight, part.weight);
    }
    std::sort(total.vertices.begin(), total.vertices.end());
    // end-of-run audit
    if (!is_independent(g, total.vertices) || set_weight(g, total.vertices) != total.weight)
        throw Error(ErrorKind::PreconditionViolated, "internal audit failed: block DP produced an inconsistent set");
    return total;
}

}  // namespace oddminor
