#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avec/graph.hpp"

namespace avec {

struct VerifyResult {
    long long structures = 0;  // graphs examined
    long long checks = 0;      // individual inequalities tested
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Tree bounds (lower and upper), the per-vertex eccentricity floor, the
// leaf eccentricity sum, the leaf-pair distance identity, and attainment of
// the extremal constructions, over all free trees with 3 <= n <= max_n and
// `samples` random normalized weightings each. max_n <= 10.
VerifyResult verify_trees(int max_n, int samples, std::uint64_t seed);

// Non-tree bounds 0 <= avec <= m/lambda over all connected non-tree graphs
// with 3 <= n <= max_n (labeled, exhaustive), plus attainment of the zero
// and min-cut constructions. max_n <= 6.
VerifyResult verify_graphs(int max_n, int samples, std::uint64_t seed);

// Sum/product bounds for trees with connected complement, 5 <= n <= max_n,
// against `samples` random weight pairs, plus exact witness attainment on
// brooms. max_n <= 10.
VerifyResult verify_ng(int max_n, int samples, std::uint64_t seed);

}  // namespace avec
