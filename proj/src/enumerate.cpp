#include "avec/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace avec {

namespace {

std::string encode_rooted(const Graph& t, int v, int parent) {
    std::vector<std::string> children;
    for (const auto& [nbr, idx] : t.adjacency(v))
        if (nbr != parent) children.push_back(encode_rooted(t, nbr, v));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (const auto& c : children) s += c;
    s += ")";
    return s;
}

// Center vertices of a tree: repeatedly strip leaves.
std::vector<int> tree_centers(const Graph& t) {
    const int n = t.order();
    if (n == 1) return {0};
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            for (const auto& [nbr, idx] : t.adjacency(v)) {
                if (!removed[nbr] && --degree[nbr] == 1) next.push_back(nbr);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

}  // namespace

std::string tree_certificate(const Graph& t_graph) {
    if (!is_tree(t_graph)) throw NotATree("tree_certificate requires a tree");
    auto centers = tree_centers(t_graph);
    if (centers.size() == 1) return encode_rooted(t_graph, centers[0], -1);
    std::string a = encode_rooted(t_graph, centers[0], centers[1]);
    std::string b = encode_rooted(t_graph, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

std::vector<Graph> all_free_trees(int n) {
    if (n < 1) throw ArgumentOutOfRange("n must be >= 1");
    std::vector<Graph> current{Graph::make(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& t : current) {
            for (int attach = 0; attach < t.order(); ++attach) {
                std::vector<std::pair<int, int>> edges;
                for (const Edge& e : t.edges()) edges.emplace_back(e.u, e.v);
                edges.emplace_back(attach, size - 1);
                Graph grown = Graph::make(size, edges);
                if (seen.insert(tree_certificate(grown)).second) next.push_back(grown);
            }
        }
        current = std::move(next);
    }
    return current;
}

std::vector<Graph> all_connected_graphs(int n) {
    if (n < 1) throw ArgumentOutOfRange("n must be >= 1");
    if (n > 6) throw ScopeTooLarge("exhaustive graph enumeration is limited to n <= 6");
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    const int p = static_cast<int>(all_pairs.size());
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << p); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < p; ++i)
            if (mask & (1ULL << i)) edges.push_back(all_pairs[i]);
        Graph g = Graph::make(n, edges);
        if (is_connected(g)) out.push_back(g);
    }
    return out;
}

}  // namespace avec
