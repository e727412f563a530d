#pragma once

// Dinic max-flow, internal helper shared by graph-core and the MIS solver.

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace oddminor::detail {

class Dinic {
public:
    static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

    explicit Dinic(int n) : g_(n), level_(n), it_(n) {}

    int add_arc(int u, int v, long long cap) {
        g_[u].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({v, cap});
        g_[v].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({u, 0});
        return static_cast<int>(arcs_.size()) - 2;
    }

    long long max_flow(int s, int t, long long limit = kInf) {
        long long total = 0;
        while (total < limit && bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            while (total < limit) {
                long long f = dfs(s, t, limit - total);
                if (f == 0) break;
                total += f;
            }
        }
        return total;
    }

    long long flow_on(int arc) const { return arcs_[arc ^ 1].cap; }
    long long residual(int arc) const { return arcs_[arc].cap; }
    int head(int arc) const { return arcs_[arc].to; }
    const std::vector<int>& out(int v) const { return g_[v]; }

    // vertices reachable from s in the residual network
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(g_.size(), 0);
        std::vector<int> st{s};
        seen[s] = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int a : g_[u])
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    st.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        long long cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : g_[u])
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[t] >= 0;
    }

    long long dfs(int u, int t, long long f) {
        if (u == t) return f;
        for (int& i = it_[u]; i < static_cast<int>(g_[u].size()); ++i) {
            int a = g_[u][i];
            int v = arcs_[a].to;
            if (arcs_[a].cap <= 0 || level_[v] != level_[u] + 1) continue;
            long long got = dfs(v, t, std::min(f, arcs_[a].cap));
            if (got > 0) {
                arcs_[a].cap -= got;
                arcs_[a ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> g_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> it_;
};

}  // namespace oddminor::detail
