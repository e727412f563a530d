#include "oddminor/generators.hpp"

#include <algorithm>

namespace oddminor {

Vertex Generated::at(int row, int col) const {
    auto it = std::find(coord.begin(), coord.end(), std::pair{row, col});
    return it == coord.end() ? -1 : static_cast<Vertex>(it - coord.begin());
}

namespace {

std::string coord_label(int r, int c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

struct GridBuilder {
    int n, m;
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex id(int i, int j) const { return (i - 1) * m + (j - 1); }

    GridBuilder(int n_, int m_) : n(n_), m(m_) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j) {
                if (j < m) edges.push_back({id(i, j), id(i, j + 1)});
                if (i < n) edges.push_back({id(i, j), id(i + 1, j)});
            }
    }

    Generated finish(int extra, const std::vector<std::string>& extra_names) const {
        Generated g;
        int total = n * m + extra;
        g.graph = Graph(total, edges);
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j) {
                g.coord.push_back({i, j});
                labels.push_back(coord_label(i, j));
            }
        for (int x = 0; x < extra; ++x) {
            g.coord.push_back({0, 0});
            labels.push_back(extra_names[x]);
            g.named[extra_names[x]] = n * m + x;
        }
        g.graph.set_labels(std::move(labels));
        return g;
    }
};

void need(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::BadParameter, what);
}

}  // namespace

Generated grid(int n, int m) {
    need(n >= 1 && m >= 1, "grid needs n, m >= 1");
    return GridBuilder(n, m).finish(0, {});
}

Generated elementary_wall(int k) {
    need(k >= 2, "wall order must be at least 2");
    const int rows = k, cols = 2 * k;
    auto id = [&](int i, int j) { return (i - 1) * cols + (j - 1); };
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            if (j < cols) es.push_back({id(i, j), id(i, j + 1)});
            // vertical edge number i in column j; odd columns lose odd edges, even columns even ones
            if (i < rows && (i % 2) != (j % 2)) es.push_back({id(i, j), id(i + 1, j)});
        }
    Graph full(rows * cols, es);
    // drop degree-one vertices (one pass suffices for this shape)
    std::vector<Vertex> keep;
    for (int v = 0; v < full.n(); ++v)
        if (full.degree(v) > 1) keep.push_back(v);
    Subgraph s = induced_subgraph(full, keep);
    Generated g;
    g.graph = std::move(s.graph);
    std::vector<std::string> labels;
    for (Vertex v : keep) {
        int i = v / cols + 1, j = v % cols + 1;
        g.coord.push_back({i, j});
        labels.push_back(coord_label(i, j));
    }
    g.graph.set_labels(std::move(labels));
    return g;
}

Generated spb_grid(int k) {
    need(k >= 2, "singly parity-breaking grid needs k >= 2");
    GridBuilder b(2 * k, 2 * k);
    b.edges.push_back({b.id(k, k), b.id(k + 1, k + 1)});
    Generated g = b.finish(0, {});
    g.tagged.push_back(make_edge(b.id(k, k), b.id(k + 1, k + 1)));
    return g;
}

Generated single_crossing_grid(int k) {
    need(k >= 1, "single-crossing grid needs k >= 1");
    GridBuilder b(2 * k, 2 * k);
    b.edges.push_back({b.id(k, k), b.id(k + 1, k + 1)});
    b.edges.push_back({b.id(k + 1, k), b.id(k, k + 1)});
    Generated g = b.finish(0, {});
    g.tagged = {make_edge(b.id(k, k), b.id(k + 1, k + 1)), make_edge(b.id(k + 1, k), b.id(k, k + 1))};
    return g;
}

Generated parity_crossing_grid(int i, int k) {
    need(i >= 1 && i <= 3, "parity-crossing index must be 1, 2 or 3");
    need(k >= 1, "parity-crossing grid needs k >= 1");
    GridBuilder b(2 * k, 2 * k);
    const int N = 4 * k * k;
    const Vertex kk = b.id(k, k), k1k1 = b.id(k + 1, k + 1), kk1 = b.id(k, k + 1), k1k = b.id(k + 1, k);
    Generated g;
    if (i == 1) {
        b.edges.push_back({kk, k1k1});
        b.edges.push_back({kk1, k1k});
        g = b.finish(0, {});
        g.tagged = {make_edge(kk, k1k1), make_edge(kk1, k1k)};
    } else if (i == 2) {
        const Vertex x = N;
        b.edges.push_back({kk, k1k1});
        b.edges.push_back({kk1, x});
        b.edges.push_back({x, k1k});
        g = b.finish(1, {"x"});
        g.tagged = {make_edge(kk, k1k1), make_edge(kk1, x), make_edge(x, k1k)};
    } else {
        const Vertex y = N, x = N + 1;
        b.edges.push_back({kk, y});
        b.edges.push_back({y, k1k1});
        b.edges.push_back({kk1, x});
        b.edges.push_back({x, k1k});
        b.edges.push_back({k1k1, x});
        g = b.finish(2, {"y", "x"});
        g.tagged = {make_edge(kk, y), make_edge(y, k1k1), make_edge(kk1, x), make_edge(x, k1k), make_edge(k1k1, x)};
    }
    return g;
}

Generated generate(const std::string& family, const std::vector<int>& params) {
    auto arity = [&](size_t a) { need(params.size() == a, family + " expects " + std::to_string(a) + " parameter(s)"); };
    if (family == "grid") {
        arity(2);
        return grid(params[0], params[1]);
    }
    if (family == "wall" || family == "elementary_wall") {
        arity(1);
        need(params[0] >= 3, "walls need k >= 3");
        return elementary_wall(params[0]);
    }
    if (family == "spb" || family == "spb_grid") {
        arity(1);
        return spb_grid(params[0]);
    }
    if (family == "cross" || family == "single_crossing_grid") {
        arity(1);
        return single_crossing_grid(params[0]);
    }
    if (family == "pcross" || family == "parity_crossing_grid") {
        arity(2);
        return parity_crossing_grid(params[0], params[1]);
    }
    throw Error(ErrorKind::BadParameter, "unknown family " + family);
}

}  // namespace oddminor
