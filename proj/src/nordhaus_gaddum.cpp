#include "avec/nordhaus_gaddum.hpp"

#include "avec/connectivity.hpp"
#include "avec/metrics.hpp"

namespace avec {

std::string to_string(PairCase c) {
    switch (c) {
        case PairCase::tree_tree: return "tree_tree";
        case PairCase::tree_nontree: return "tree_nontree";
        case PairCase::nontree_nontree: return "nontree_nontree";
        case PairCase::complement_disconnected: return "complement_disconnected";
    }
    return "?";
}

PairCase classify_pair(const Graph& g) {
    if (!is_connected(g)) throw Disconnected("classify_pair requires a connected graph");
    Graph gbar = complement(g);
    if (!is_connected(gbar)) return PairCase::complement_disconnected;
    const bool g_tree = g.size() == g.order() - 1;
    const bool gbar_tree = gbar.size() == gbar.order() - 1;
    if (g_tree && gbar_tree) return PairCase::tree_tree;
    if (g_tree || gbar_tree) return PairCase::tree_nontree;
    return PairCase::nontree_nontree;
}

NGReport ng_bounds(const Graph& g) {
    NGReport report;
    report.kind = classify_pair(g);
    if (report.kind == PairCase::complement_disconnected)
        throw ComplementDisconnected("the complement is disconnected; no bounds apply");

    const int n = g.order();
    Graph gbar = complement(g);

    switch (report.kind) {
        case PairCase::tree_tree:
            // Only P4 is self-complementary among trees: n = 4, t = 2.
            report.sum_lower = 9.0 / 2.0;
            report.sum_upper = 6.0;
            report.prod_lower = 81.0 / 16.0;
            report.prod_upper = 9.0;
            break;
        case PairCase::tree_nontree: {
            const Graph& nontree = (g.size() == n - 1) ? gbar : g;
            const double mbar = nontree.size();
            const double lbar = edge_connectivity(nontree);
            report.sum_lower = 2.0 * (n - 1) * (n - 1) / (static_cast<double>(n) * (n - 2));
            report.sum_upper = (n - 1) * (n + 2.0 * (lbar - 1.0)) / (2.0 * lbar);
            report.prod_lower = 0.0;
            report.prod_upper = mbar * (n - 1) / lbar;
            break;
        }
        case PairCase::nontree_nontree: {
            const double ratio_g = static_cast<double>(g.size()) / edge_connectivity(g);
            const double ratio_gbar = static_cast<double>(gbar.size()) / edge_connectivity(gbar);
            report.sum_lower = 0.0;
            report.sum_upper = ratio_g + ratio_gbar;
            report.prod_lower = 0.0;
            report.prod_upper = ratio_g * ratio_gbar;
            break;
        }
        case PairCase::complement_disconnected:
            break;
    }
    return report;
}

namespace {

WeightFunction minimizing_weights(const Graph& g) {
    if (g.size() == g.order() - 1) return tree_min_weights(g);
    return spanning_tree_zero_weights(g);
}

WeightFunction maximizing_weights(const Graph& g) {
    if (g.size() == g.order() - 1) return tree_max_weights(g, g.edge(0));
    return mincut_weights(g);
}

}  // namespace

NGWitness ng_witnesses(const Graph& g, NGTarget target) {
    PairCase kind = classify_pair(g);
    if (kind == PairCase::complement_disconnected)
        throw CaseUnsupported("no witness pair exists when the complement is disconnected");

    Graph gbar = complement(g);
    WeightFunction wg = (target == NGTarget::sum_lower) ? minimizing_weights(g)
                                                        : maximizing_weights(g);
    WeightFunction wgbar = (target == NGTarget::sum_lower) ? minimizing_weights(gbar)
                                                           : maximizing_weights(gbar);
    double achieved =
        eccentricity_profile(g, wg).avec + eccentricity_profile(gbar, wgbar).avec;
    return {std::move(wg), std::move(wgbar), achieved};
}

}  // namespace avec
