#include "avec/weights.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace avec {

WeightFunction WeightFunction::make(const Graph& g, std::vector<double> weights,
                                    bool require_normalized) {
    if (static_cast<int>(weights.size()) != g.size())
        throw DomainMismatch("expected " + std::to_string(g.size()) + " weights, got " +
                             std::to_string(weights.size()));
    for (double x : weights)
        if (!(x >= 0.0)) throw NegativeWeight("edge weights must be nonnegative, got " + std::to_string(x));
    WeightFunction wf(g, std::move(weights));
    if (require_normalized && !wf.is_normalized())
        throw NotNormalized("weight total " + std::to_string(wf.total()) + " != m = " +
                            std::to_string(g.size()));
    return wf;
}

WeightFunction WeightFunction::from_assignment(const Graph& g, const std::map<Edge, double>& assignment,
                                    bool require_normalized) {
    if (static_cast<int>(assignment.size()) != g.size())
        throw DomainMismatch("assignment domain does not match the edge set");
    std::vector<double> w(g.size());
    for (const auto& [e, x] : assignment) {
        auto idx = g.edge_index(e.u, e.v);
        if (!idx) throw DomainMismatch("assignment names an edge not in the graph");
        w[*idx] = x;
    }
    return make(g, std::move(w), require_normalized);
}

WeightFunction WeightFunction::all_ones(const Graph& g) {
    return make(g, std::vector<double>(g.size(), 1.0));
}

double WeightFunction::total() const {
    return std::accumulate(w_.begin(), w_.end(), 0.0);
}

bool WeightFunction::is_normalized() const {
    const double m = static_cast<double>(g_.size());
    return std::abs(total() - m) <= kNormTolerance * std::max(m, 1.0);
}

void require_same_domain(const Graph& g, const WeightFunction& w) {
    if (!(w.graph() == g)) throw DomainMismatch("weight function domain is a different graph");
}

}  // namespace avec
