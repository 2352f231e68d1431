#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "avec/graph.hpp"
#include "avec/weights.hpp"

namespace avec {

// Default comparison tolerances for distance-derived quantities.
inline constexpr double kRelTolerance = 1e-9;
inline constexpr double kAbsTolerance = 1e-12;

inline bool nearly_equal(double a, double b, double rel = kRelTolerance,
                         double abs = kAbsTolerance) {
    double diff = a > b ? a - b : b - a;
    double scale = std::max(a > 0 ? a : -a, b > 0 ? b : -b);
    return diff <= std::max(abs, rel * scale);
}

// Per-vertex weighted eccentricities with their sum and mean.
struct EccentricityProfile {
    std::vector<double> ecc;  // e_w(v) indexed by vertex
    double total = 0.0;       // EX: sum in ascending vertex order
    double avec = 0.0;        // total / n
};

// Dijkstra from src; requires g connected and nonnegative weights.
std::vector<double> shortest_distances(const Graph& g, const WeightFunction& w, int src);

double weighted_distance(const Graph& g, const WeightFunction& w, int u, int v);

EccentricityProfile eccentricity_profile(const Graph& g, const WeightFunction& w);

// c(e) = 2 * n1 * n2 where n1, n2 count leaves on the two sides of T - e.
long long leaf_pair_count(const Graph& t_graph, const Edge& e);

// Both sides of  sum_{i != j} d(u_i, u_j) = sum_e c(e) w(e)  over leaf pairs.
// The left side is computed from shortest-path distances, the right from
// leaf counts, so the two routes are independent.
std::pair<double, double> leaf_distance_identity_check(const Graph& t_graph,
                                                       const WeightFunction& w);

}  // namespace avec
