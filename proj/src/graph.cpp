#include "avec/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace avec {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    std::sort(edges_.begin(), edges_.end());
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        adj_[edges_[i].u].emplace_back(edges_[i].v, i);
        adj_[edges_[i].v].emplace_back(edges_[i].u, i);
    }
}

Graph Graph::make(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw OrderTooSmall("graph order must be at least 1, got " + std::to_string(n));
    std::vector<Edge> es;
    es.reserve(edges.size());
    std::set<Edge> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw VertexOutOfRange("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (a == b) throw LoopEdge("loop at vertex " + std::to_string(a));
        Edge e(a, b);
        if (!seen.insert(e).second)
            throw DuplicateEdge("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        es.push_back(e);
    }
    return Graph(n, std::move(es));
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
    for (const auto& [nbr, idx] : adj_[u])
        if (nbr == v) return idx;
    return std::nullopt;
}

GraphKind parse_graph_kind(const std::string& name) {
    if (name == "path") return GraphKind::path;
    if (name == "star") return GraphKind::star;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "complete") return GraphKind::complete;
    if (name == "broom") return GraphKind::broom;
    throw ParseError("unknown graph kind: " + name);
}

Graph generate(GraphKind kind, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case GraphKind::path:
            if (n < 2) throw OrderTooSmall("path requires n >= 2");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case GraphKind::star:
            if (n < 3) throw OrderTooSmall("star requires n >= 3");
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case GraphKind::cycle:
            if (n < 3) throw OrderTooSmall("cycle requires n >= 3");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            break;
        case GraphKind::complete:
            if (n < 2) throw OrderTooSmall("complete graph requires n >= 2");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
        case GraphKind::broom:
            if (n < 4) throw OrderTooSmall("broom requires n >= 4");
            edges.emplace_back(0, 1);
            edges.emplace_back(1, 2);
            for (int i = 3; i < n; ++i) edges.emplace_back(2, i);
            break;
    }
    return Graph::make(n, edges);
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::make(n, edges);
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& [nbr, idx] : g.adjacency(v)) {
            if (!seen[nbr]) {
                seen[nbr] = 1;
                ++count;
                q.push(nbr);
            }
        }
    }
    return count == n;
}

TreeProfile tree_profile(const Graph& g) {
    if (!is_connected(g)) throw Disconnected("tree_profile requires a connected graph");
    TreeProfile p;
    p.is_tree = (g.size() == g.order() - 1);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) ++p.leaf_count;
    if (!p.is_tree) return p;
    for (int i = 0; i < g.size(); ++i) {
        const Edge& e = g.edge(i);
        if (g.degree(e.u) == 1 || g.degree(e.v) == 1)
            p.end_edges.push_back(i);
        else
            p.internal_edges.push_back(i);
    }
    return p;
}

bool is_tree(const Graph& g) {
    return g.size() == g.order() - 1 && is_connected(g);
}

}  // namespace avec
