// Command-line front end. Exit codes: 0 ok, 1 error, 2 refusal (blind width exceeded or undecided).

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddminor/io.hpp"
#include "oddminor/maxcut.hpp"
#include "oddminor/mis.hpp"
#include "oddminor/treewidth.hpp"

using namespace oddminor;
using nlohmann::json;

namespace {

struct Refusal {
    std::string message;
    json detail;
};

struct Global {
    unsigned long long seed = 1;
    bool as_json = false;
    int threads = 1;
};

void emit(const Global& gl, const json& j, const std::string& text) {
    if (gl.as_json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::string join(const std::vector<Vertex>& v) {
    std::ostringstream ss;
    for (size_t i = 0; i < v.size(); ++i) ss << (i ? " " : "") << v[i];
    return ss.str();
}

BlindClass class_arg(const std::string& s) {
    auto a = parse_blind_class(s);
    if (!a) throw Error(ErrorKind::BadParameter, "unknown class " + s + " (expected B, P or BP)");
    return *a;
}

TreeDecomposition by_method(const Graph& g, const std::string& method) {
    if (method == "min-fill") return heuristic_decomposition(g, Heuristic::MinFill);
    if (method == "min-degree") return heuristic_decomposition(g, Heuristic::MinDegree);
    if (method == "block-cut") return block_cut_forest(g);
    if (method == "trivial") return trivial_decomposition(g);
    throw Error(ErrorKind::BadParameter, "unknown method " + method);
}

int default_threads() {
    if (const char* s = std::getenv("ODDMINOR_THREADS")) {
        try {
            int t = std::stoi(s);
            if (t >= 1) return t;
        } catch (const std::logic_error&) {
        }
        std::cerr << "warning: ignoring ODDMINOR_THREADS=" << s << '\n';
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Odd-minor structure toolkit: generators, decompositions, blind width, MIS, MaxCut, odd expansions."};
    app.require_subcommand(1);
    Global gl;
    gl.threads = default_threads();
    app.add_option("--seed", gl.seed, "seed for randomized searches")->capture_default_str();
    app.add_flag("--json", gl.as_json, "machine-readable output on stdout");
    app.add_option("--threads", gl.threads, "worker threads for per-block work (default from ODDMINOR_THREADS, else 1)")
        ->check(CLI::PositiveNumber);

    std::function<void()> run;

    // gen
    std::string family, out_path, labels_path;
    std::vector<int> params;
    auto* gen = app.add_subcommand("gen", "generate grid | wall | spb | cross | pcross");
    gen->add_option("family", family, "family name")->required();
    gen->add_option("params", params, "integer parameters (grid n m, wall k, spb k, cross k, pcross i k)")->required();
    gen->add_option("-o,--output", out_path, "edge-list file (stdout when absent)");
    gen->add_option("--labels", labels_path, "label side-file (default <output>.labels.json)");
    gen->callback([&] {
        run = [&] {
            Generated g = generate(family, params);
            json j;
            j["family"] = family;
            j["params"] = params;
            j["n"] = g.graph.n();
            j["m"] = g.graph.m();
            json tagged = json::array();
            for (auto& e : g.tagged) tagged.push_back({e.u, e.v});
            j["tagged"] = tagged;
            j["named"] = g.named;
            if (!out_path.empty()) {
                write_edge_list_file(out_path, g.graph);
                std::string lp = labels_path.empty() ? out_path + ".labels.json" : labels_path;
                write_text_file(lp, labels_json(g).dump(2) + "\n");
                j["output"] = out_path;
                j["labels"] = lp;
                std::ostringstream ss;
                ss << "wrote " << out_path << " (" << g.graph.n() << " vertices, " << g.graph.m() << " edges) and " << lp << '\n';
                emit(gl, j, ss.str());
            } else if (gl.as_json) {
                json es = json::array();
                for (auto& e : g.graph.edges()) es.push_back({e.u, e.v});
                j["edges"] = es;
                j["labels"] = labels_json(g);
                emit(gl, j, "");
            } else {
                if (!labels_path.empty()) write_text_file(labels_path, labels_json(g).dump(2) + "\n");
                write_edge_list(std::cout, g.graph);
            }
        };
    });

    // decompose
    std::string graph_path, method = "min-fill";
    auto* dec = app.add_subcommand("decompose", "tree decomposition of a graph");
    dec->add_option("graph", graph_path, "edge-list file")->required();
    dec->add_option("--method", method, "min-fill | min-degree | block-cut | trivial")->capture_default_str();
    dec->add_option("-o,--output", out_path, "write the decomposition JSON here");
    dec->callback([&] {
        run = [&] {
            Graph g = read_edge_list_file(graph_path);
            TreeDecomposition t = by_method(g, method);
            if (auto bad = validate_decomposition(g, t)) throw Error(ErrorKind::PreconditionViolated, bad->message);
            json j = decomposition_json(t);
            j["method"] = method;
            if (!out_path.empty()) write_text_file(out_path, decomposition_json(t).dump(2) + "\n");
            std::ostringstream ss;
            ss << "bags " << t.size() << " width " << j["width"].get<int>() << " adhesion " << j["adhesion"].get<int>() << '\n';
            emit(gl, j, ss.str());
        };
    });

    // blindwidth
    std::string cls = "B", td_path;
    bool oracle = false;
    auto* bw = app.add_subcommand("blindwidth", "blind width of a decomposition (or the exhaustive minimum)");
    bw->add_option("graph", graph_path, "edge-list file")->required();
    bw->add_option("--class", cls, "B | P | BP")->capture_default_str();
    bw->add_option("--td", td_path, "decomposition JSON (min-fill heuristic when absent)");
    bw->add_option("--method", method, "heuristic when --td is absent")->capture_default_str();
    bw->add_flag("--oracle", oracle, "exhaustive minimum over all decompositions (at most 8 vertices)");
    bw->callback([&] {
        run = [&] {
            Graph g = read_edge_list_file(graph_path);
            BlindClass a = class_arg(cls);
            json j;
            j["class"] = blind_class_name(a);
            std::ostringstream ss;
            if (oracle) {
                int v = blind_width_oracle(g, a);
                j["oracle"] = v;
                ss << "blind width (" << blind_class_name(a) << ", minimum) " << v << '\n';
            } else {
                TreeDecomposition t = td_path.empty() ? by_method(g, method) : decomposition_from_json(read_json_file(td_path));
                if (auto bad = validate_decomposition(g, t)) throw Error(ErrorKind::PreconditionViolated, "decomposition: " + bad->message);
                int v = blind_width(g, t, a);
                j["blind_width"] = v;
                j["width"] = metrics(t).width;
                ss << "blind width (" << blind_class_name(a) << ") " << v << " width " << metrics(t).width << '\n';
            }
            emit(gl, j, ss.str());
        };
    });

    // tw
    long long budget = 20'000'000;
    bool heuristic_only = false;
    auto* tw = app.add_subcommand("tw", "treewidth (exact branch and bound, or min-fill)");
    tw->add_option("graph", graph_path, "edge-list file")->required();
    tw->add_option("--budget", budget, "search budget of the exact solver")->capture_default_str();
    tw->add_flag("--heuristic", heuristic_only, "min-fill upper bound only");
    tw->callback([&] {
        run = [&] {
            Graph g = read_edge_list_file(graph_path);
            json j;
            j["lower_bound"] = treewidth_lower_bound(g);
            std::ostringstream ss;
            if (heuristic_only) {
                TreeDecomposition t = heuristic_decomposition(g, Heuristic::MinFill);
                j["upper_bound"] = metrics(t).width;
                j["decomposition"] = decomposition_json(t);
                ss << "treewidth <= " << metrics(t).width << " (lower bound " << j["lower_bound"].get<int>() << ")\n";
            } else {
                ExactOptions o;
                o.budget = budget;
                o.max_vertices = std::max(o.max_vertices, g.n());
                auto r = exact_treewidth(g, o);
                j["treewidth"] = r.width;
                j["order"] = r.order;
                j["decomposition"] = decomposition_json(r.decomposition);
                ss << "treewidth " << r.width << '\n';
            }
            emit(gl, j, ss.str());
        };
    });

    // mis
    std::string weights_path;
    int cutoff = 12;
    auto* mis = app.add_subcommand("mis", "maximum weight independent set by the block decomposition");
    mis->add_option("graph", graph_path, "edge-list file")->required();
    mis->add_option("--vertex-weights", weights_path, "JSON array or {id: weight} (unit weights when absent)");
    mis->add_option("--cutoff", cutoff, "treewidth cutoff for non-bipartite blocks")->capture_default_str();
    mis->callback([&] {
        run = [&] {
            Graph g = read_edge_list_file(graph_path);
            if (!weights_path.empty()) g = with_vertex_weights(g, read_json_file(weights_path));
            BlindOptions o;
            o.cutoff = cutoff;
            MisSolution s;
            try {
                s = blind_mwis(g, o);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BlindWidthExceeded) throw;
                throw Refusal{e.what(), json{{"refusal", "BlindWidthExceeded"}, {"message", e.what()}}};
            }
            json j;
            j["weight"] = s.weight;
            j["vertices"] = s.vertices;
            json tr = json::array();
            for (auto& t : s.trace)
                tr.push_back({{"block", t.block}, {"vertices", t.vertices}, {"attach", t.attach}, {"solver", t.solver},
                              {"width", t.width}, {"in", t.in}, {"out", t.out}});
            j["trace"] = tr;
            std::ostringstream ss;
            ss << "weight " << s.weight << "\nset " << join(s.vertices) << '\n';
            emit(gl, j, ss.str());
        };
    });

    // maxcut
    auto* mc = app.add_subcommand("maxcut", "maximum weight cut by the block decomposition");
    mc->add_option("graph", graph_path, "edge-list file (optional weight column)")->required();
    mc->add_option("--cutoff", cutoff, "treewidth cutoff for non-bipartite blocks")->capture_default_str();
    mc->callback([&] {
        run = [&] {
            Graph g = read_edge_list_file(graph_path);
            BlindCutOptions o;
            o.cutoff = cutoff;
            CutSolution s;
            try {
                s = blind_maxcut(g, o);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BlindWidthExceeded) throw;
                throw Refusal{e.what(), json{{"refusal", "BlindWidthExceeded"}, {"message", e.what()}}};
            }
            json j;
            j["weight"] = s.weight;
            j["side"] = s.side;
            j["cut_edges"] = s.cut_edges;
            json tr = json::array();
            for (auto& t : s.trace)
                tr.push_back({{"vertices", t.vertices}, {"solver", t.solver}, {"width", t.width}, {"weight", t.weight},
                              {"flipped", t.flipped}});
            j["trace"] = tr;
            std::vector<Vertex> one;
            for (Vertex v = 0; v < g.n(); ++v)
                if (s.side[v]) one.push_back(v);
            std::ostringstream ss;
            ss << "weight " << s.weight << "\nside " << join(one) << '\n';
            emit(gl, j, ss.str());
        };
    });

    // find-oddminor
    int k = 2, dcutoff = 8, extra = 4;
    long long wall_budget = FindWallOptions{}.budget;
    std::string cert_path = "cert.json";
    auto* fo = app.add_subcommand("find-oddminor", "odd expansion certificate or block decomposition");
    fo->add_option("graph", graph_path, "edge-list file")->required();
    fo->add_option("-k", k, "pattern order")->capture_default_str();
    fo->add_option("--class", cls, "B | BP")->capture_default_str();
    fo->add_option("-o,--output", cert_path, "certificate file")->capture_default_str();
    fo->add_option("--cutoff", dcutoff, "treewidth under which a block counts as small")->capture_default_str();
    fo->add_option("--extra-order", extra, "wall orders tried above the minimum")->capture_default_str();
    fo->add_option("--budget", wall_budget, "wall search budget")->capture_default_str();
    fo->callback([&] {
        run = [&] {
            Graph g = read_edge_list_file(graph_path);
            DetectOptions o;
            o.cutoff = dcutoff;
            o.extra_order = extra;
            o.wall.budget = wall_budget;
            o.wall.seed = gl.seed;
            o.threads = gl.threads;
            BlindDecision d = decide_blind_structure(g, k, class_arg(cls), o);
            json j;
            j["class"] = cls;
            j["k"] = k;
            j["seed"] = gl.seed;
            j["report"] = report_json(d.report);
            if (d.kind == BlindDecision::Kind::Undecided) {
                j["verdict"] = "undecided";
                j["blocking"] = d.blocking;
                throw Refusal{"undecided: block {" + join(d.blocking) + "} is neither small nor certified", j};
            }
            std::ostringstream ss;
            if (d.kind == BlindDecision::Kind::Expansion) {
                if (auto bad = verify_odd_expansion(g, *d.expansion))
                    throw Error(ErrorKind::PreconditionViolated, "internal: certificate failed verification: " + bad->message);
                write_text_file(cert_path, expansion_json(*d.expansion).dump(2) + "\n");
                j["verdict"] = "expansion";
                j["certificate"] = cert_path;
                ss << "odd " << d.expansion->family << " expansion written to " << cert_path << '\n';
            } else {
                j["verdict"] = "decomposition";
                ss << "decomposition: width " << metrics(d.report.decomposition).width << '\n';
                for (auto& b : d.report.blocks) ss << "  block {" << join(b.vertices) << "} " << b.status << '\n';
            }
            emit(gl, j, ss.str());
        };
    });

    // verify
    std::string cert_in;
    auto* ve = app.add_subcommand("verify", "check an odd-expansion certificate against a graph");
    ve->add_option("graph", graph_path, "edge-list file")->required();
    ve->add_option("certificate", cert_in, "certificate JSON")->required();
    bool rejected = false;
    ve->callback([&] {
        run = [&] {
            Graph g = read_edge_list_file(graph_path);
            OddExpansion e = expansion_from_json(read_json_file(cert_in));
            auto bad = verify_odd_expansion(g, e);
            json j;
            j["valid"] = !bad;
            if (bad) {
                j["condition"] = bad->condition;
                j["witness"] = bad->witness;
                j["message"] = bad->message;
                rejected = true;
            }
            emit(gl, j, bad ? "rejected: " + bad->message + "\n" : "valid\n");
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    try {
        run();
    } catch (const Refusal& r) {
        if (gl.as_json)
            std::cout << r.detail.dump(2) << '\n';
        std::cerr << r.message << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rejected ? 1 : 0;
}
