#pragma once

#include <string>
#include <vector>

#include "avec/graph.hpp"

namespace avec {

// Canonical certificate of an unrooted tree (AHU encoding rooted at the
// center, or at both centers for bicentral trees). Equal certificates
// iff isomorphic.
std::string tree_certificate(const Graph& t_graph);

// All free (nonisomorphic) trees on n vertices, grown by leaf addition
// with certificate deduplication. Deterministic order.
std::vector<Graph> all_free_trees(int n);

// All connected labeled graphs on n vertices, by edge-subset enumeration.
std::vector<Graph> all_connected_graphs(int n);

}  // namespace avec
