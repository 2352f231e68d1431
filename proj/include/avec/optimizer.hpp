#pragma once

#include <cstdint>

#include "avec/graph.hpp"
#include "avec/weights.hpp"

namespace avec {

enum class Direction { min, max };
enum class SearchMethod { grid, local_search };

struct OptimizationResult {
    double best_value = 0.0;
    WeightFunction best_weights;
    long long evaluations = 0;
    SearchMethod method = SearchMethod::grid;
    Direction direction = Direction::min;
};

// Exhaustive scan of the lattice {w = m*(k/r) : k >= 0, sum k = r} on the
// scaled weight simplex. Guarded against combinatorial blowup.
OptimizationResult grid_search(const Graph& g, Direction direction, int resolution);

// Random restarts plus pairwise mass-transfer descent: move delta from one
// edge to another while it improves, halving delta down to 1e-6 * m.
// Deterministic for a fixed seed.
OptimizationResult local_search(const Graph& g, Direction direction, int restarts,
                                std::uint64_t seed);

}  // namespace avec
