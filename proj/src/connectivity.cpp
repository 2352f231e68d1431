#include "avec/connectivity.hpp"

#include <limits>
#include <queue>

namespace avec {

namespace {

// Unit-capacity flow network for an undirected graph: each edge becomes a
// forward/backward arc pair, both of capacity 1.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;                  // paired: arc i ^ 1 is the reverse
    std::vector<std::vector<int>> out;      // per-vertex arc indices

    explicit FlowNetwork(const Graph& g) : out(g.order()) {
        arcs.reserve(2 * g.size());
        for (const Edge& e : g.edges()) {
            out[e.u].push_back(static_cast<int>(arcs.size()));
            arcs.push_back({e.v, 1});
            out[e.v].push_back(static_cast<int>(arcs.size()));
            arcs.push_back({e.u, 1});
        }
    }

    void reset() {
        for (std::size_t i = 0; i < arcs.size(); i += 2) {
            arcs[i].cap = 1;
            arcs[i + 1].cap = 1;
        }
    }

    // One BFS augmentation; returns false when no augmenting path remains.
    bool augment(int s, int t) {
        std::vector<int> via(out.size(), -1);
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int v = q.front();
            q.pop();
            for (int a : out[v]) {
                if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
                    seen[arcs[a].to] = 1;
                    via[arcs[a].to] = a;
                    q.push(arcs[a].to);
                }
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s; v = arcs[via[v] ^ 1].to) {
            arcs[via[v]].cap -= 1;
            arcs[via[v] ^ 1].cap += 1;
        }
        return true;
    }

    int max_flow(int s, int t) {
        reset();
        int flow = 0;
        while (augment(s, t)) ++flow;
        return flow;
    }

    // Source side of the cut in the current residual graph.
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : out[v]) {
                if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
                    seen[arcs[a].to] = 1;
                    q.push(arcs[a].to);
                }
            }
        }
        return seen;
    }
};

void require_connectivity_precondition(const Graph& g) {
    if (g.order() < 2) throw OrderTooSmall("edge connectivity requires n >= 2");
    if (!is_connected(g)) throw Disconnected("edge connectivity requires a connected graph");
}

}  // namespace

int edge_connectivity(const Graph& g) {
    require_connectivity_precondition(g);
    FlowNetwork net(g);
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < g.order(); ++t) best = std::min(best, net.max_flow(0, t));
    return best;
}

CutSet min_edge_cut(const Graph& g) {
    require_connectivity_precondition(g);
    FlowNetwork net(g);
    int best = std::numeric_limits<int>::max();
    int best_t = -1;
    for (int t = 1; t < g.order(); ++t) {
        int f = net.max_flow(0, t);
        if (f < best) {
            best = f;
            best_t = t;
        }
    }
    net.max_flow(0, best_t);
    auto side = net.reachable(0);
    CutSet cut;
    for (const Edge& e : g.edges())
        if (side[e.u] != side[e.v]) cut.edges.push_back(e);
    cut.lambda = static_cast<int>(cut.edges.size());
    return cut;
}

}  // namespace avec
