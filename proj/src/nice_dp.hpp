#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "oddminor/graph.hpp"
#include "oddminor/treewidth.hpp"

namespace oddminor::detail {

inline constexpr Weight kNeg = std::numeric_limits<Weight>::min() / 4;

inline unsigned drop_bit(unsigned mask, int p) { return (mask & ((1u << p) - 1)) | ((mask >> (p + 1)) << p); }
inline unsigned put_bit(unsigned mask, int p, unsigned b) {
    return (mask & ((1u << p) - 1)) | (b << p) | ((mask >> p) << (p + 1));
}

inline int position(const std::vector<Vertex>& bag, Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Maximum weight independent set over a nice decomposition. Vertex weights are
// collected at forget nodes and at the root bag. Fills *set (sorted) when given.
inline Weight mis_dp(const Graph& g, const NiceDecomposition& nd, std::vector<Vertex>* set) {
    const int k = nd.td.size();
    std::vector<std::vector<Weight>> tab(k);
    auto order = nd.postorder();
    for (int x : order) {
        const auto& bag = nd.td.bags[x];
        const int b = static_cast<int>(bag.size());
        auto& t = tab[x];
        t.assign(std::size_t{1} << b, kNeg);
        switch (nd.kind[x]) {
            case NiceKind::Leaf:
                for (unsigned m = 0; m < t.size(); ++m) {
                    bool ok = true;
                    for (int i = 0; i < b && ok; ++i)
                        for (int j = i + 1; j < b && ok; ++j)
                            if ((m >> i & 1) && (m >> j & 1) && g.has_edge(bag[i], bag[j])) ok = false;
                    if (ok) t[m] = 0;
                }
                break;
            case NiceKind::Introduce: {
                const auto& c = tab[nd.children[x][0]];
                Vertex v = nd.vertex[x];
                int p = position(bag, v);
                unsigned nb = 0;
                for (int i = 0; i < b; ++i)
                    if (i != p && g.has_edge(v, bag[i])) nb |= 1u << i;
                for (unsigned m = 0; m < t.size(); ++m) {
                    if ((m >> p & 1) && (m & nb)) continue;
                    t[m] = c[drop_bit(m, p)];
                }
                break;
            }
            case NiceKind::Forget: {
                int cx = nd.children[x][0];
                const auto& c = tab[cx];
                Vertex v = nd.vertex[x];
                int p = position(nd.td.bags[cx], v);
                for (unsigned m = 0; m < t.size(); ++m) {
                    Weight a = c[put_bit(m, p, 0)], bb = c[put_bit(m, p, 1)];
                    if (bb > kNeg) bb = checked_add(bb, g.vertex_weight(v));
                    t[m] = std::max(a, bb);
                }
                break;
            }
            case NiceKind::Join: {
                const auto& c1 = tab[nd.children[x][0]];
                const auto& c2 = tab[nd.children[x][1]];
                for (unsigned m = 0; m < t.size(); ++m)
                    if (c1[m] > kNeg && c2[m] > kNeg) t[m] = checked_add(c1[m], c2[m]);
                break;
            }
        }
    }
    const int r = nd.td.root;
    const auto& rb = nd.td.bags[r];
    Weight best = kNeg;
    unsigned best_mask = 0;
    for (unsigned m = 0; m < tab[r].size(); ++m) {
        if (tab[r][m] == kNeg) continue;
        Weight w = tab[r][m];
        for (int i = 0; i < static_cast<int>(rb.size()); ++i)
            if (m >> i & 1) w = checked_add(w, g.vertex_weight(rb[i]));
        if (w > best) {
            best = w;
            best_mask = m;
        }
    }
    if (!set) return best;
    set->clear();
    for (int i = 0; i < static_cast<int>(rb.size()); ++i)
        if (best_mask >> i & 1) set->push_back(rb[i]);
    std::vector<std::pair<int, unsigned>> stack{{r, best_mask}};
    while (!stack.empty()) {
        auto [x, m] = stack.back();
        stack.pop_back();
        switch (nd.kind[x]) {
            case NiceKind::Leaf:
                break;
            case NiceKind::Introduce:
                stack.push_back({nd.children[x][0], drop_bit(m, position(nd.td.bags[x], nd.vertex[x]))});
                break;
            case NiceKind::Forget: {
                int cx = nd.children[x][0];
                Vertex v = nd.vertex[x];
                int p = position(nd.td.bags[cx], v);
                const auto& c = tab[cx];
                Weight bb = c[put_bit(m, p, 1)];
                if (bb > kNeg && checked_add(bb, g.vertex_weight(v)) == tab[x][m]) {
                    set->push_back(v);
                    stack.push_back({cx, put_bit(m, p, 1)});
                } else {
                    stack.push_back({cx, put_bit(m, p, 0)});
                }
                break;
            }
            case NiceKind::Join:
                stack.push_back({nd.children[x][0], m});
                stack.push_back({nd.children[x][1], m});
                break;
        }
    }
    std::sort(set->begin(), set->end());
    return best;
}

}  // namespace oddminor::detail
