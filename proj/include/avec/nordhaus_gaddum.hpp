#pragma once

#include <optional>
#include <string>

#include "avec/extremal.hpp"
#include "avec/graph.hpp"
#include "avec/weights.hpp"

namespace avec {

enum class PairCase { tree_tree, tree_nontree, nontree_nontree, complement_disconnected };

std::string to_string(PairCase c);

// Joint bounds for avec(G,w) + avec(Gbar,wbar) and the product, with each
// weighting normalized to its own graph's size.
struct NGReport {
    PairCase kind = PairCase::complement_disconnected;
    double sum_lower = 0.0, sum_upper = 0.0;
    double prod_lower = 0.0, prod_upper = 0.0;
    std::optional<WeightFunction> witness_g, witness_gbar;
    std::optional<double> achieved_sum, achieved_prod;
};

// Case from (is_tree(g), is_connected(complement), is_tree(complement)).
// When exactly one of the pair is a tree the case is tree_nontree,
// regardless of which side the tree is on; the bounds are applied with
// the tree in the role of G.
PairCase classify_pair(const Graph& g);

NGReport ng_bounds(const Graph& g);

enum class NGTarget { sum_lower, sum_upper };

struct NGWitness {
    WeightFunction weights_g;
    WeightFunction weights_gbar;
    double achieved = 0.0;
};

// Extremal weight pairs: the minimizing constructions for sum_lower, the
// maximizing ones (all weight on one edge / on a minimum cut) for sum_upper.
NGWitness ng_witnesses(const Graph& g, NGTarget target);

}  // namespace avec
