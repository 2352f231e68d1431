#include "avec/metrics.hpp"

#include <limits>
#include <queue>
#include <string>

namespace avec {

namespace {

void require_metric_precondition(const Graph& g, const WeightFunction& w) {
    require_same_domain(g, w);
    if (g.order() < 2) throw OrderTooSmall("metric operations require n >= 2");
    if (!is_connected(g)) throw Disconnected("metric operations require a connected graph");
}

// Leaf counts on each side of every tree edge, via one DFS from vertex 0.
// For edge i with endpoints (u,v), side_down[i] counts leaves in the component
// of the endpoint farther from the root.
std::vector<long long> leaves_below(const Graph& t, std::vector<int>& total_leaves) {
    const int n = t.order();
    std::vector<long long> down(t.size(), 0);
    std::vector<long long> leaf_cnt(n, 0);
    std::vector<int> parent(n, -1), parent_edge(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (const auto& [nbr, idx] : t.adjacency(v)) {
            if (!seen[nbr]) {
                seen[nbr] = 1;
                parent[nbr] = v;
                parent_edge[nbr] = idx;
                stack.push_back(nbr);
            }
        }
    }
    int t_leaves = 0;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 1) ++t_leaves;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (t.degree(v) == 1) leaf_cnt[v] += 1;
        if (parent[v] >= 0) {
            down[parent_edge[v]] = leaf_cnt[v];
            leaf_cnt[parent[v]] += leaf_cnt[v];
        }
    }
    total_leaves.assign(1, t_leaves);
    return down;
}

}  // namespace

std::vector<double> shortest_distances(const Graph& g, const WeightFunction& w, int src) {
    require_metric_precondition(g, w);
    const int n = g.order();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<char> done(n, 0);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    dist[src] = 0.0;
    pq.emplace(0.0, src);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (const auto& [nbr, idx] : g.adjacency(v)) {
            double nd = d + w[idx];
            if (nd < dist[nbr]) {
                dist[nbr] = nd;
                pq.emplace(nd, nbr);
            }
        }
    }
    return dist;
}

double weighted_distance(const Graph& g, const WeightFunction& w, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw VertexOutOfRange("vertex index out of range");
    return shortest_distances(g, w, u)[v];
}

EccentricityProfile eccentricity_profile(const Graph& g, const WeightFunction& w) {
    require_metric_precondition(g, w);
    const int n = g.order();
    EccentricityProfile p;
    p.ecc.resize(n);
    for (int v = 0; v < n; ++v) {
        auto dist = shortest_distances(g, w, v);
        double e = 0.0;
        for (double d : dist) e = std::max(e, d);
        p.ecc[v] = e;
    }
    p.total = 0.0;
    for (int v = 0; v < n; ++v) p.total += p.ecc[v];
    p.avec = p.total / n;
    return p;
}

long long leaf_pair_count(const Graph& t_graph, const Edge& e) {
    if (!is_tree(t_graph)) throw NotATree("leaf_pair_count requires a tree");
    auto idx = t_graph.edge_index(e.u, e.v);
    if (!idx) throw EdgeNotInGraph("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                   ") is not in the tree");
    std::vector<int> total;
    auto down = leaves_below(t_graph, total);
    long long n1 = down[*idx];
    long long n2 = total[0] - n1;
    return 2 * n1 * n2;
}

std::pair<double, double> leaf_distance_identity_check(const Graph& t_graph,
                                                       const WeightFunction& w) {
    if (!is_tree(t_graph)) throw NotATree("leaf_distance_identity_check requires a tree");
    if (t_graph.order() < 3) throw OrderTooSmall("identity check requires n >= 3");
    require_same_domain(t_graph, w);

    std::vector<int> leaves;
    for (int v = 0; v < t_graph.order(); ++v)
        if (t_graph.degree(v) == 1) leaves.push_back(v);

    double lhs = 0.0;
    for (int u : leaves) {
        auto dist = shortest_distances(t_graph, w, u);
        for (int v : leaves)
            if (v != u) lhs += dist[v];
    }

    std::vector<int> total;
    auto down = leaves_below(t_graph, total);
    double rhs = 0.0;
    for (int i = 0; i < t_graph.size(); ++i) {
        long long n1 = down[i];
        long long n2 = total[0] - n1;
        rhs += static_cast<double>(2 * n1 * n2) * w[i];
    }
    return {lhs, rhs};
}

}  // namespace avec
