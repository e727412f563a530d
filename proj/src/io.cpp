#include "oddminor/io.hpp"

#include <fstream>
#include <sstream>

namespace oddminor {

using nlohmann::json;

namespace {

bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        return true;
    }
    return false;
}

Error parse_error(int lineno, const std::string& what) {
    return Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) throw Error(ErrorKind::Parse, "empty input, expected \"n m\"");
    long long n = -1, m = -1;
    {
        std::istringstream ss(line);
        std::string rest;
        if (!(ss >> n >> m) || (ss >> rest) || n < 0 || m < 0) throw parse_error(lineno, "expected \"n m\"");
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    std::vector<Weight> ws;
    int weighted = -1;
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line, lineno)) throw parse_error(lineno, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream ss(line);
        long long u, v, w;
        std::string rest;
        if (!(ss >> u >> v)) throw parse_error(lineno, "expected \"u v [w]\"");
        bool has_w = static_cast<bool>(ss >> w);
        if (!has_w && !ss.eof()) throw parse_error(lineno, "bad weight");
        ss.clear();
        if (ss >> rest) throw parse_error(lineno, "trailing text");
        if (weighted < 0) weighted = has_w;
        if (weighted != has_w) throw parse_error(lineno, "weights must be given on every edge or none");
        if (u < 0 || v < 0 || u >= n || v >= n) throw parse_error(lineno, "vertex id out of range");
        if (u == v) throw Error(ErrorKind::LoopEdge, "line " + std::to_string(lineno) + ": loop at " + std::to_string(u));
        if (has_w && w < 0) throw Error(ErrorKind::NegativeWeight, "line " + std::to_string(lineno) + ": negative weight");
        es.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        if (has_w) ws.push_back(w);
    }
    if (next_line(in, line, lineno)) throw parse_error(lineno, "more edges than declared");
    Graph g(static_cast<int>(n), es);
    if (g.m() != static_cast<int>(es.size())) throw Error(ErrorKind::DuplicateEdge, "edge listed twice");
    if (weighted == 1) {
        std::vector<Weight> ew(g.m(), 0);
        for (size_t i = 0; i < es.size(); ++i) ew[g.edge_index(es[i].first, es[i].second)] = ws[i];
        g.set_edge_weights(std::move(ew));
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path + ": file not found or unreadable");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (int e = 0; e < g.m(); ++e) {
        out << g.edge(e).u << ' ' << g.edge(e).v;
        if (g.has_edge_weights()) out << ' ' << g.edge_weight(e);
        out << '\n';
    }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    write_text_file(path, ss.str());
}

Graph with_vertex_weights(const Graph& g, const json& w) {
    std::vector<Weight> vw(g.n(), 1);
    auto put = [&](long long v, const json& x) {
        if (v < 0 || v >= g.n()) throw Error(ErrorKind::Parse, "vertex weight for unknown vertex " + std::to_string(v));
        if (!x.is_number_integer()) throw Error(ErrorKind::Parse, "vertex weights must be integers");
        if (x.get<long long>() < 0) throw Error(ErrorKind::NegativeWeight, "negative vertex weight");
        vw[v] = x.get<long long>();
    };
    if (w.is_array()) {
        if (static_cast<int>(w.size()) != g.n()) throw Error(ErrorKind::Parse, "vertex weight array must have n entries");
        for (int v = 0; v < g.n(); ++v) put(v, w[v]);
    } else if (w.is_object()) {
        for (auto& [k, x] : w.items()) {
            try {
                put(std::stoll(k), x);
            } catch (const std::logic_error&) {
                throw Error(ErrorKind::Parse, "bad vertex id " + k);
            }
        }
    } else {
        throw Error(ErrorKind::Parse, "vertex weights must be an array or an object");
    }
    Graph out = g;
    out.set_vertex_weights(std::move(vw));
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path + ": file not found or unreadable");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

json labels_json(const Generated& gen) {
    json j = json::object();
    for (Vertex v = 0; v < gen.graph.n(); ++v) j[std::to_string(v)] = {gen.coord[v].first, gen.coord[v].second};
    for (auto& [name, v] : gen.named) j[std::to_string(v)] = name;
    return j;
}

json decomposition_json(const TreeDecomposition& t) {
    json j;
    j["bags"] = t.bags;
    json tree = json::array();
    for (auto [a, b] : t.tree) tree.push_back({a, b});
    j["tree"] = tree;
    j["root"] = t.root;
    auto mt = metrics(t);
    j["width"] = mt.width;
    j["adhesion"] = mt.adhesion;
    return j;
}

TreeDecomposition decomposition_from_json(const json& j) {
    try {
        TreeDecomposition t;
        t.bags = j.at("bags").get<std::vector<std::vector<Vertex>>>();
        for (auto& b : t.bags) std::sort(b.begin(), b.end());
        for (auto& e : j.at("tree")) t.tree.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        t.root = j.value("root", -1);
        return t;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("decomposition: ") + e.what());
    }
}

json expansion_json(const OddExpansion& e) {
    json j;
    json pat = json::array();
    for (auto& ed : e.pattern.edges()) pat.push_back({ed.u, ed.v});
    j["pattern"] = pat;
    j["pattern_n"] = e.pattern.n();
    json br = json::object();
    for (size_t v = 0; v < e.branch.size(); ++v) br[std::to_string(v)] = e.branch[v];
    j["branch"] = br;
    json im = json::object();
    for (size_t i = 0; i < e.edge_images.size(); ++i) im[std::to_string(i)] = {e.edge_images[i].first, e.edge_images[i].second};
    j["edge_images"] = im;
    json w = json::object();
    for (auto [v, c] : e.witness) w[std::to_string(v)] = c;
    j["witness"] = w;
    j["family"] = e.family;
    j["params"] = e.params;
    return j;
}

OddExpansion expansion_from_json(const json& j) {
    auto index = [](const std::string& k, size_t bound, const char* what) {
        size_t used = 0;
        long long i = -1;
        try {
            i = std::stoll(k, &used);
        } catch (const std::logic_error&) {
        }
        if (used != k.size() || i < 0 || static_cast<size_t>(i) >= bound)
            throw Error(ErrorKind::Parse, std::string("certificate: bad ") + what + " key " + k);
        return static_cast<size_t>(i);
    };
    try {
        OddExpansion e;
        std::vector<std::pair<Vertex, Vertex>> es;
        for (auto& p : j.at("pattern")) es.push_back({p.at(0).get<Vertex>(), p.at(1).get<Vertex>()});
        int pn = j.contains("pattern_n") ? j.at("pattern_n").get<int>() : 0;
        for (auto [a, b] : es) pn = std::max(pn, std::max(a, b) + 1);
        e.pattern = Graph(pn, es);
        if (e.pattern.m() != static_cast<int>(es.size()))
            throw Error(ErrorKind::Parse, "certificate: pattern repeats an edge");
        for (int i = 0; i < e.pattern.m(); ++i)
            if (make_edge(es[i].first, es[i].second) != e.pattern.edge(i))
                throw Error(ErrorKind::Parse, "certificate: pattern edges must be sorted");
        e.branch.assign(pn, {});
        for (auto& [k, v] : j.at("branch").items()) e.branch[index(k, pn, "branch")] = v.get<std::vector<Vertex>>();
        e.edge_images.assign(e.pattern.m(), {-1, -1});
        for (auto& [k, v] : j.at("edge_images").items())
            e.edge_images[index(k, e.pattern.m(), "edge image")] = {v.at(0).get<Vertex>(), v.at(1).get<Vertex>()};
        for (auto& [k, v] : j.at("witness").items()) {
            size_t used = 0;
            Vertex x = std::stoi(k, &used);
            if (used != k.size()) throw Error(ErrorKind::Parse, "certificate: bad witness key " + k);
            e.witness[x] = v.get<int>();
        }
        e.family = j.value("family", std::string());
        e.params = j.value("params", std::vector<int>{});
        return e;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("certificate: ") + ex.what());
    } catch (const std::logic_error& ex) {
        throw Error(ErrorKind::Parse, std::string("certificate: ") + ex.what());
    }
}

json report_json(const StructureReport& r) {
    json bl = json::array();
    for (auto& b : r.blocks) {
        json x;
        x["vertices"] = b.vertices;
        x["status"] = b.status;
        x["width"] = b.width;
        if (!b.note.empty()) x["note"] = b.note;
        bl.push_back(x);
    }
    json j;
    j["blocks"] = bl;
    j["decomposition"] = decomposition_json(r.decomposition);
    return j;
}

}  // namespace oddminor
