#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oddminor/error.hpp"

namespace oddminor {

using Vertex = int;
using Weight = long long;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;  // u < v always
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    // Duplicates are merged silently; loops throw LoopEdge.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }
    // edge index for each neighbour slot, parallel to neighbors(v)
    std::span<const int> incident(Vertex v) const {
        return {adj_eid_.data() + off_[v], adj_eid_.data() + off_[v + 1]};
    }
    int degree(Vertex v) const { return off_[v + 1] - off_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }
    // -1 when absent
    int edge_index(Vertex a, Vertex b) const;
    bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

    bool has_vertex_weights() const { return !vw_.empty(); }
    bool has_edge_weights() const { return !ew_.empty(); }
    bool has_labels() const { return !labels_.empty(); }
    // unit weight when no weights are attached
    Weight vertex_weight(Vertex v) const { return vw_.empty() ? 1 : vw_[v]; }
    Weight edge_weight(int e) const { return ew_.empty() ? 1 : ew_[e]; }
    const std::string& label(Vertex v) const;
    const std::vector<Weight>& vertex_weights() const { return vw_; }
    const std::vector<Weight>& edge_weights() const { return ew_; }
    const std::vector<std::string>& labels() const { return labels_; }

    void set_vertex_weights(std::vector<Weight> w);
    void set_edge_weights(std::vector<Weight> w);  // indexed like edges()
    void set_labels(std::vector<std::string> l);

    Weight total_vertex_weight() const;
    Weight total_edge_weight() const;

private:
    int n_ = 0;
    std::vector<int> off_{0};
    std::vector<Vertex> adj_;
    std::vector<int> adj_eid_;
    std::vector<Edge> edges_;
    std::vector<Weight> vw_;
    std::vector<Weight> ew_;
    std::vector<std::string> labels_;
};

struct BuildOptions {
    bool reject_duplicates = false;  // DuplicateEdge instead of merging
};

// Edge list input with arbitrary non-negative ids, compressed to 0..n-1 in increasing
// order (original ids kept as labels when they differ). First weight wins on duplicates.
Graph build_graph(const std::vector<std::pair<Vertex, Vertex>>& edge_list,
                  const std::optional<std::vector<Weight>>& edge_weights = std::nullopt,
                  const BuildOptions& opt = {});

// A subgraph together with the host id of each of its vertices.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_host;
};

// Induced subgraph; vertex i of the result is verts[i]. Weights and labels carry over.
Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts);
// Spanning subgraph keeping only the listed edge indices (weights carry over).
Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids);

struct TwoColouring {
    std::vector<int> colour;  // 1 or 2
};

struct OddCycle {
    std::vector<Vertex> cycle;
};

std::variant<TwoColouring, OddCycle> bipartition_or_odd_cycle(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_proper_colouring(const Graph& g, const TwoColouring& c);
bool is_odd_cycle(const Graph& g, const OddCycle& c);

std::vector<int> component_ids(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

Subgraph torso(const Graph& g, const std::vector<Vertex>& x);

struct PlanarityResult {
    bool planar = false;
    std::vector<std::vector<Vertex>> rotation;  // clockwise neighbour order, planar case
    std::vector<int> kuratowski;                // edge ids of a K5/K3,3 subdivision
};

PlanarityResult is_planar(const Graph& g);
bool check_embedding(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);
bool check_kuratowski(const Graph& g, const std::vector<int>& edge_ids);

struct PathPair {
    std::vector<Vertex> first;
    std::vector<Vertex> second;
};

struct NoPaths {
    std::optional<Vertex> cut;
};

std::variant<PathPair, NoPaths> two_disjoint_paths(const Graph& g,
                                                   const std::vector<Vertex>& sources,
                                                   const std::vector<Vertex>& targets);

std::vector<Vertex> bfs_path(const Graph& g, Vertex s, Vertex t,
                             const std::vector<char>* blocked = nullptr);

}  // namespace oddminor
