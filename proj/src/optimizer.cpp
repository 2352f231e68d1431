#include "avec/optimizer.hpp"

#include <cmath>
#include <string>

#include "avec/metrics.hpp"
#include "avec/rng.hpp"

namespace avec {

namespace {

double evaluate(const Graph& g, const std::vector<double>& w, long long& evaluations) {
    ++evaluations;
    auto wf = WeightFunction::make(g, w, /*require_normalized=*/false);
    return eccentricity_profile(g, wf).avec;
}

bool better(Direction dir, double candidate, double incumbent) {
    // Strict improvement with a floor so float noise cannot cycle the search.
    constexpr double kMinGain = 1e-12;
    return dir == Direction::min ? candidate < incumbent - kMinGain
                                 : candidate > incumbent + kMinGain;
}

// Number of lattice points C(r+m-1, m-1), saturating at the guard limit.
long long lattice_size(int r, int m, long long limit) {
    long long count = 1;
    for (int i = 1; i < m; ++i) {
        count = count * (r + i) / i;
        if (count > limit) return limit + 1;
    }
    return count;
}

}  // namespace

OptimizationResult grid_search(const Graph& g, Direction direction, int resolution) {
    if (!is_connected(g)) throw Disconnected("grid_search requires a connected graph");
    if (resolution < 1) throw ArgumentOutOfRange("grid resolution must be >= 1");
    const int m = g.size();
    constexpr long long kMaxPoints = 20'000'000;
    if (lattice_size(resolution, m, kMaxPoints) > kMaxPoints)
        throw TooManyEdges("grid of " + std::to_string(resolution) + "^" + std::to_string(m) +
                           " compositions exceeds the evaluation budget");

    const double total = static_cast<double>(m);
    std::vector<int> ticks(m, 0);
    std::vector<double> w(m), best_w;
    long long evaluations = 0;
    double best = 0.0;
    bool have_best = false;

    // Enumerate compositions of `resolution` into m nonnegative parts.
    auto visit = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == m - 1) {
            ticks[pos] = remaining;
            for (int i = 0; i < m; ++i)
                w[i] = total * static_cast<double>(ticks[i]) / resolution;
            double value = evaluate(g, w, evaluations);
            if (!have_best || better(direction, value, best)) {
                best = value;
                best_w = w;
                have_best = true;
            }
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            ticks[pos] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    visit(visit, 0, resolution);

    return {best, WeightFunction::make(g, best_w), evaluations, SearchMethod::grid, direction};
}

OptimizationResult local_search(const Graph& g, Direction direction, int restarts,
                                std::uint64_t seed) {
    if (!is_connected(g)) throw Disconnected("local_search requires a connected graph");
    if (restarts < 1) throw ArgumentOutOfRange("restarts must be >= 1");
    const int m = g.size();
    const double total = static_cast<double>(m);
    const double min_step = 1e-6 * total;

    SplitMix64 rng(seed);
    long long evaluations = 0;
    std::vector<double> best_w;
    double best = 0.0;
    bool have_best = false;

    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<double> w = random_simplex_point(m, total, rng);
        double value = evaluate(g, w, evaluations);

        double step = total / 4.0;
        while (step >= min_step) {
            // One sweep over ordered edge pairs; halve the step when a full
            // sweep accepts nothing.
            bool improved = false;
            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) {
                    if (b == a) continue;
                    const double moved = std::min(step, w[a]);
                    if (moved <= 0.0) break;
                    w[a] -= moved;
                    w[b] += moved;
                    double candidate = evaluate(g, w, evaluations);
                    if (better(direction, candidate, value)) {
                        value = candidate;
                        improved = true;
                    } else {
                        w[a] += moved;
                        w[b] -= moved;
                    }
                }
            }
            if (!improved) step /= 2.0;
        }

        if (!have_best || better(direction, value, best)) {
            best = value;
            best_w = w;
            have_best = true;
        }
    }

    return {best, WeightFunction::make(g, best_w, /*require_normalized=*/false), evaluations,
            SearchMethod::local_search, direction};
}

}  // namespace avec
