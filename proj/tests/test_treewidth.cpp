#include "doctest.h"
#include "helpers.hpp"

#include "oddminor/generators.hpp"
#include "oddminor/treewidth.hpp"

using namespace oddminor;

namespace {

// brute force treewidth: minimum over all elimination orders (n <= 8)
int brute_treewidth(const Graph& g) {
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    int best = g.n();
    do {
        best = std::min(best, metrics(decomposition_from_order(g, order)).width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("exact_treewidth examples") {
    std::mt19937_64 rng(1);
    Graph tree = th::random_tree(rng, 12);
    CHECK(exact_treewidth(tree).width == 1);
    for (int k = 2; k <= 4; ++k) {
        Graph g = grid(k, k).graph;
        auto r = exact_treewidth(g);
        CHECK(r.width == k);
        CHECK_FALSE(validate_decomposition(g, r.decomposition).has_value());
        CHECK(metrics(r.decomposition).width == k);
    }
    CHECK(exact_treewidth(th::complete(5)).width == 4);
    CHECK_THROWS_AS(exact_treewidth(grid(6, 6).graph), Error);
}

TEST_CASE("exact_treewidth matches brute force on small graphs") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 7;
        Graph g = th::random_graph(rng, n, 0.4);
        auto r = exact_treewidth(g);
        CHECK(r.width == brute_treewidth(g));
        CHECK_FALSE(validate_decomposition(g, r.decomposition).has_value());
        CHECK(metrics(r.decomposition).width == r.width);
    }
}

TEST_CASE("exact_treewidth budget is reported") {
    ExactOptions opt;
    opt.budget = 5;
    try {
        exact_treewidth(grid(5, 5).graph, opt);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExhausted);
    }
}

TEST_CASE("heuristic decompositions") {
    std::mt19937_64 rng(2);
    Graph tree = th::random_tree(rng, 15);
    CHECK(metrics(heuristic_decomposition(tree, Heuristic::MinDegree)).width == 1);
    CHECK(metrics(heuristic_decomposition(th::cycle(6), Heuristic::MinDegree)).width == 2);
    auto g44 = grid(4, 4).graph;
    auto t = heuristic_decomposition(g44, Heuristic::MinFill);
    CHECK_FALSE(validate_decomposition(g44, t).has_value());
    // regression bound frozen from the first run
    CHECK(metrics(t).width <= 6);
    CHECK(metrics(t).width == 4);
}

TEST_CASE("exact width never exceeds heuristic width") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = th::random_graph(rng, 6 + trial % 9, 0.3);
        int ex = exact_treewidth(g).width;
        for (auto h : {Heuristic::MinDegree, Heuristic::MinFill}) {
            auto t = heuristic_decomposition(g, h);
            CHECK_FALSE(validate_decomposition(g, t).has_value());
            CHECK(ex <= metrics(t).width);
        }
        CHECK(treewidth_lower_bound(g) <= ex);
    }
}

TEST_CASE("make_nice examples") {
    Graph e(2, {{0, 1}});
    TreeDecomposition one{{{0, 1}}, {}, 0};
    auto nd = make_nice(one);
    REQUIRE(nd.td.size() == 3);
    CHECK(is_nice(nd));
    int r = nd.td.root;
    CHECK(nd.kind[r] == NiceKind::Introduce);
    CHECK(nd.td.bags[r] == std::vector<Vertex>{0, 1});
    int mid = nd.children[r][0];
    CHECK(nd.kind[mid] == NiceKind::Introduce);
    CHECK(nd.vertex[mid] == 0);
    CHECK(nd.kind[nd.children[mid][0]] == NiceKind::Leaf);
    CHECK_FALSE(validate_decomposition(e, nd.td).has_value());
}

TEST_CASE("make_nice preserves validity and width") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = th::random_graph(rng, 3 + trial % 12, 0.3);
        auto t = heuristic_decomposition(g, trial % 2 ? Heuristic::MinFill : Heuristic::MinDegree);
        auto nd = make_nice(t);
        CHECK(is_nice(nd));
        CHECK_FALSE(validate_decomposition(g, nd.td).has_value());
        CHECK(metrics(nd.td).width == metrics(t).width);
        CHECK(nd.td.bags[nd.td.root] == t.bags[t.root]);
        CHECK(nd.td.size() <= 4 * (metrics(t).width + 2) * (g.n() + 1));
    }
}
