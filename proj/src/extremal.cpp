#include "avec/extremal.hpp"

#include <queue>
#include <string>

#include "avec/metrics.hpp"

namespace avec {

WeightFunction tree_min_weights(const Graph& t_graph) {
    if (t_graph.order() < 3) throw OrderTooSmall("tree_min_weights requires n >= 3");
    auto profile = tree_profile(t_graph);
    if (!profile.is_tree) throw NotATree("tree_min_weights requires a tree");
    const double end_weight =
        static_cast<double>(t_graph.order() - 1) / static_cast<double>(profile.leaf_count);
    std::vector<double> w(t_graph.size(), 0.0);
    for (int i : profile.end_edges) w[i] = end_weight;
    return WeightFunction::make(t_graph, std::move(w));
}

WeightFunction tree_max_weights(const Graph& t_graph, const Edge& e) {
    if (!is_tree(t_graph)) throw NotATree("tree_max_weights requires a tree");
    auto idx = t_graph.edge_index(e.u, e.v);
    if (!idx) throw EdgeNotInGraph("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                   ") is not in the tree");
    std::vector<double> w(t_graph.size(), 0.0);
    w[*idx] = static_cast<double>(t_graph.order() - 1);
    return WeightFunction::make(t_graph, std::move(w));
}

WeightFunction spanning_tree_zero_weights(const Graph& g) {
    if (!is_connected(g)) throw Disconnected("spanning_tree_zero_weights requires a connected graph");
    if (g.size() == g.order() - 1) throw IsATree("a tree has no edges outside its spanning tree");

    // BFS spanning tree from vertex 0, fixed neighbor order.
    std::vector<char> in_tree_vertex(g.order(), 0), in_tree_edge(g.size(), 0);
    std::queue<int> q;
    q.push(0);
    in_tree_vertex[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& [nbr, idx] : g.adjacency(v)) {
            if (!in_tree_vertex[nbr]) {
                in_tree_vertex[nbr] = 1;
                in_tree_edge[idx] = 1;
                q.push(nbr);
            }
        }
    }
    const int spare = g.size() - (g.order() - 1);
    const double each = static_cast<double>(g.size()) / static_cast<double>(spare);
    std::vector<double> w(g.size(), 0.0);
    for (int i = 0; i < g.size(); ++i)
        if (!in_tree_edge[i]) w[i] = each;
    return WeightFunction::make(g, std::move(w));
}

WeightFunction mincut_weights(const Graph& g) {
    auto cut = min_edge_cut(g);
    const double each = static_cast<double>(g.size()) / static_cast<double>(cut.lambda);
    std::vector<double> w(g.size(), 0.0);
    for (const Edge& e : cut.edges) w[*g.edge_index(e.u, e.v)] = each;
    return WeightFunction::make(g, std::move(w));
}

double tree_avec_min_formula(int n, int t) {
    if (n < 3 || t < 2 || t > n - 1)
        throw ArgumentOutOfRange("requires n >= 3 and 2 <= t <= n-1, got n=" + std::to_string(n) +
                                 ", t=" + std::to_string(t));
    return static_cast<double>((n - 1) * (n + t)) / (static_cast<double>(n) * t);
}

BoundsReport bounds_for(const Graph& g, const std::optional<WeightFunction>& w) {
    if (!is_connected(g)) throw Disconnected("bounds_for requires a connected graph");
    if (g.order() < 2) throw OrderTooSmall("bounds_for requires n >= 2");

    BoundsReport report;
    const bool tree = g.size() == g.order() - 1;
    if (tree) {
        if (g.order() == 2) {
            // Single edge: the normalized weight is forced, avec = 1.
            report.lower = report.upper = 1.0;
        } else {
            auto profile = tree_profile(g);
            report.lower = tree_avec_min_formula(g.order(), profile.leaf_count);
            report.upper = static_cast<double>(g.order() - 1);
        }
    } else {
        report.lower = 0.0;
        report.upper = static_cast<double>(g.size()) / edge_connectivity(g);
    }

    if (w) {
        require_same_domain(g, *w);
        report.value = eccentricity_profile(g, *w).avec;
        report.attains_lower = nearly_equal(*report.value, report.lower);
        report.attains_upper = nearly_equal(*report.value, report.upper);
        if (report.attains_lower) {
            if (tree && g.order() >= 3)
                report.witness = tree_min_weights(g);
            else if (!tree)
                report.witness = spanning_tree_zero_weights(g);
        } else if (report.attains_upper) {
            report.witness = mincut_weights(g);
        }
    }
    return report;
}

}  // namespace avec
