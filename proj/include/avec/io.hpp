#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "avec/graph.hpp"
#include "avec/weights.hpp"

namespace avec {

// Edge-list text format: first line "n m", then m lines "u v [w]";
// a missing third column means weight 1.
struct ParsedGraph {
    Graph g;
    std::vector<double> weights;  // per edge index of g
    bool had_weights = false;     // any explicit third column present
};

ParsedGraph read_edge_list(std::istream& in);
ParsedGraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::optional<WeightFunction>& w = std::nullopt);

// Weights file: one "u v w" line per edge; must cover E(g) exactly.
std::vector<double> read_weights(std::istream& in, const Graph& g);
std::vector<double> read_weights_file(const std::string& path, const Graph& g);

void write_weights(std::ostream& out, const Graph& g, const WeightFunction& w);

}  // namespace avec
