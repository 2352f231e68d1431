#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace avec {

// SplitMix64: tiny seeded generator, identical output on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1].
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Uniform point on the scaled simplex {w >= 0 : sum w = total} via
// normalized exponential draws.
inline std::vector<double> random_simplex_point(int dim, double total, SplitMix64& rng) {
    std::vector<double> w(dim);
    double sum = 0.0;
    for (int i = 0; i < dim; ++i) {
        w[i] = -std::log(rng.uniform01());
        sum += w[i];
    }
    for (int i = 0; i < dim; ++i) w[i] *= total / sum;
    return w;
}

}  // namespace avec
