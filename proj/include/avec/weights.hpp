#pragma once

#include <map>
#include <vector>

#include "avec/graph.hpp"

namespace avec {

// Relative tolerance for the normalization check sum(w) = m.
inline constexpr double kNormTolerance = 1e-9;

// Nonnegative edge weights over a fixed graph, indexed by edge index.
// Carries a copy of its domain graph; immutable after construction.
class WeightFunction {
public:
    // Weights given per edge index of g.
    static WeightFunction make(const Graph& g, std::vector<double> weights,
                               bool require_normalized = true);

    // Weights given as an explicit edge -> value map; the domain must equal E(g).
    static WeightFunction from_assignment(const Graph& g, const std::map<Edge, double>& assignment,
                               bool require_normalized = true);

    static WeightFunction all_ones(const Graph& g);

    const Graph& graph() const { return g_; }
    double operator[](int edge_idx) const { return w_[edge_idx]; }
    const std::vector<double>& values() const { return w_; }
    double total() const;

    bool is_normalized() const;

private:
    WeightFunction(Graph g, std::vector<double> w) : g_(std::move(g)), w_(std::move(w)) {}

    Graph g_;
    std::vector<double> w_;
};

// Throws DomainMismatch unless w's graph equals g.
void require_same_domain(const Graph& g, const WeightFunction& w);

}  // namespace avec
