#pragma once

#include <vector>

#include "avec/graph.hpp"

namespace avec {

// A disconnecting edge set together with its size.
struct CutSet {
    std::vector<Edge> edges;
    int lambda = 0;  // |edges|
};

// Edge connectivity via unit-capacity max flow: min over t != 0 of maxflow(0, t).
int edge_connectivity(const Graph& g);

// A minimum edge cut, read off the residual graph of the first sink attaining
// the minimum in the fixed pair-scan order (s = 0, t ascending).
CutSet min_edge_cut(const Graph& g);

}  // namespace avec
