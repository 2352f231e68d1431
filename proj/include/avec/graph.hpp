#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avec/errors.hpp"

namespace avec {

// Undirected edge with endpoints stored as u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    // Validates endpoints, rejects loops and duplicates.
    static Graph make(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const { return edges_[idx]; }

    // Neighbors of v as (neighbor, edge index) pairs.
    const std::vector<std::pair<int, int>>& adjacency(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }
    std::optional<int> edge_index(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Graph(int n, std::vector<Edge> edges);

    int n_ = 0;
    std::vector<Edge> edges_;                          // sorted ascending
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

enum class GraphKind { path, star, cycle, complete, broom };

// Parses one of: path, star, cycle, complete, broom.
GraphKind parse_graph_kind(const std::string& name);

// Fixed labelings: path/cycle follow vertex order; star has center 0;
// broom(n) is the path 0-1-2 with leaves 3..n-1 attached to vertex 2.
Graph generate(GraphKind kind, int n);

Graph complement(const Graph& g);

bool is_connected(const Graph& g);

// Leaf count and end/internal edge classification of a tree.
struct TreeProfile {
    bool is_tree = false;
    int leaf_count = 0;               // t
    std::vector<int> end_edges;       // edge indices incident to a leaf
    std::vector<int> internal_edges;  // the rest
};

// Requires g connected. Non-trees get is_tree=false and empty edge sets.
TreeProfile tree_profile(const Graph& g);

bool is_tree(const Graph& g);

}  // namespace avec
