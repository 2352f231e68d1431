#pragma once

#include <optional>

#include "avec/connectivity.hpp"
#include "avec/graph.hpp"
#include "avec/weights.hpp"

namespace avec {

// Computed avec against the closed-form bounds for the graph's class.
struct BoundsReport {
    std::optional<double> value;  // avec(g, w) when a weighting was supplied
    double lower = 0.0;
    double upper = 0.0;
    bool attains_lower = false;
    bool attains_upper = false;
    std::optional<WeightFunction> witness;
};

// End edges get weight (n-1)/t, internal edges 0; minimizes avec over trees.
WeightFunction tree_min_weights(const Graph& t_graph);

// All weight n-1 on the chosen edge; avec = n-1 for any choice.
WeightFunction tree_max_weights(const Graph& t_graph, const Edge& e);

// Zero on a BFS spanning tree from vertex 0, total weight spread uniformly
// over the remaining edges; avec = 0. Only defined for non-trees.
WeightFunction spanning_tree_zero_weights(const Graph& g);

// Weight m/lambda on each edge of a minimum cut, 0 elsewhere; avec = m/lambda.
WeightFunction mincut_weights(const Graph& g);

// (n-1)(n+t) / (n t), the minimum avec of a tree with t leaves.
double tree_avec_min_formula(int n, int t);

BoundsReport bounds_for(const Graph& g, const std::optional<WeightFunction>& w = std::nullopt);

}  // namespace avec
