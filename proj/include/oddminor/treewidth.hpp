#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddminor/decomposition.hpp"

namespace oddminor {

struct ExactOptions {
    long long budget = 20'000'000;  // explored prefix sets before BudgetExhausted
    int max_vertices = 32;
};

struct ExactResult {
    int width = -1;
    TreeDecomposition decomposition;
    std::vector<Vertex> order;  // witnessing elimination order
};

ExactResult exact_treewidth(const Graph& g, const ExactOptions& opt = {});

enum class Heuristic { MinDegree, MinFill };

std::vector<Vertex> elimination_order(const Graph& g, Heuristic h);
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);
TreeDecomposition heuristic_decomposition(const Graph& g, Heuristic h);

// contraction degeneracy style lower bound
int treewidth_lower_bound(const Graph& g);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceDecomposition {
    TreeDecomposition td;            // rooted; td.root set
    std::vector<NiceKind> kind;
    std::vector<Vertex> vertex;      // introduced / forgotten vertex, -1 otherwise
    std::vector<std::vector<int>> children;
    std::vector<int> postorder() const;
};

NiceDecomposition make_nice(const TreeDecomposition& t);
bool is_nice(const NiceDecomposition& nd);

}  // namespace oddminor
