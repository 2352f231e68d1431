#include "avec/verify.hpp"

#include <cmath>
#include <sstream>

#include "avec/connectivity.hpp"
#include "avec/enumerate.hpp"
#include "avec/extremal.hpp"
#include "avec/metrics.hpp"
#include "avec/nordhaus_gaddum.hpp"
#include "avec/rng.hpp"

namespace avec {

namespace {

constexpr double kSlack = 1e-9;

std::string describe(const Graph& g, const std::vector<double>* w = nullptr) {
    std::ostringstream out;
    out << "n=" << g.order() << " edges=[";
    for (int i = 0; i < g.size(); ++i) {
        if (i) out << ' ';
        out << g.edge(i).u << '-' << g.edge(i).v;
        if (w) out << ':' << (*w)[i];
    }
    out << ']';
    return out.str();
}

void record(VerifyResult& r, const std::string& what, const Graph& g,
            const std::vector<double>* w = nullptr) {
    r.violations.push_back(what + " on " + describe(g, w));
}

}  // namespace

VerifyResult verify_trees(int max_n, int samples, std::uint64_t seed) {
    if (max_n > 10) throw ScopeTooLarge("tree verification is limited to max_n <= 10");
    if (max_n < 3 || samples < 1) throw ArgumentOutOfRange("need max_n >= 3 and samples >= 1");
    SplitMix64 rng(seed);
    VerifyResult result;

    for (int n = 3; n <= max_n; ++n) {
        for (const Graph& t : all_free_trees(n)) {
            ++result.structures;
            auto profile = tree_profile(t);
            const int leaves = profile.leaf_count;
            const double lower = tree_avec_min_formula(n, leaves);
            const double upper = n - 1.0;

            // Extremal constructions attain their bounds.
            auto wmin = tree_min_weights(t);
            ++result.checks;
            if (std::abs(eccentricity_profile(t, wmin).avec - lower) > kSlack)
                record(result, "tree_min_weights misses the lower bound", t);
            for (const Edge& e : t.edges()) {
                auto wmax = tree_max_weights(t, e);
                ++result.checks;
                if (std::abs(eccentricity_profile(t, wmax).avec - upper) > kSlack)
                    record(result, "tree_max_weights misses n-1", t);
            }

            for (int s = 0; s < samples; ++s) {
                auto wv = random_simplex_point(t.size(), t.size(), rng);
                auto w = WeightFunction::make(t, wv);
                auto prof = eccentricity_profile(t, w);

                ++result.checks;
                if (prof.avec < lower - kSlack)
                    record(result, "avec below the tree lower bound", t, &wv);
                ++result.checks;
                if (prof.avec > upper + kSlack)
                    record(result, "avec above n-1", t, &wv);

                // Per-vertex floor and the leaf eccentricity sum.
                double leaf_ecc_sum = 0.0;
                bool floor_ok = true;
                for (int v = 0; v < n; ++v) {
                    if (prof.ecc[v] < (n - 1.0) / leaves - kSlack) floor_ok = false;
                    if (t.degree(v) == 1) leaf_ecc_sum += prof.ecc[v];
                }
                ++result.checks;
                if (!floor_ok) record(result, "vertex eccentricity below (n-1)/t", t, &wv);
                ++result.checks;
                if (leaf_ecc_sum < 2.0 * (n - 1.0) - kSlack)
                    record(result, "leaf eccentricity sum below 2(n-1)", t, &wv);

                auto [lhs, rhs] = leaf_distance_identity_check(t, w);
                ++result.checks;
                if (!nearly_equal(lhs, rhs))
                    record(result, "leaf distance identity mismatch", t, &wv);
            }
        }
    }
    return result;
}

VerifyResult verify_graphs(int max_n, int samples, std::uint64_t seed) {
    if (max_n > 6) throw ScopeTooLarge("graph verification is limited to max_n <= 6");
    if (max_n < 3 || samples < 1) throw ArgumentOutOfRange("need max_n >= 3 and samples >= 1");
    SplitMix64 rng(seed);
    VerifyResult result;

    for (int n = 3; n <= max_n; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            if (g.size() == n - 1) continue;  // trees are covered by verify_trees
            ++result.structures;
            const double ratio = static_cast<double>(g.size()) / edge_connectivity(g);

            ++result.checks;
            if (eccentricity_profile(g, spanning_tree_zero_weights(g)).avec != 0.0)
                record(result, "spanning_tree_zero_weights gives nonzero avec", g);
            ++result.checks;
            if (std::abs(eccentricity_profile(g, mincut_weights(g)).avec - ratio) > kSlack)
                record(result, "mincut_weights misses m/lambda", g);

            for (int s = 0; s < samples; ++s) {
                auto wv = random_simplex_point(g.size(), g.size(), rng);
                auto w = WeightFunction::make(g, wv);
                double avec_value = eccentricity_profile(g, w).avec;
                ++result.checks;
                if (avec_value < 0.0 || avec_value > ratio + kSlack)
                    record(result, "avec outside [0, m/lambda]", g, &wv);
            }
        }
    }
    return result;
}

VerifyResult verify_ng(int max_n, int samples, std::uint64_t seed) {
    if (max_n > 10) throw ScopeTooLarge("NG verification is limited to max_n <= 10");
    if (max_n < 5 || samples < 1) throw ArgumentOutOfRange("need max_n >= 5 and samples >= 1");
    SplitMix64 rng(seed);
    VerifyResult result;

    for (int n = 5; n <= max_n; ++n) {
        for (const Graph& t : all_free_trees(n)) {
            Graph tbar = complement(t);
            if (!is_connected(tbar)) continue;
            ++result.structures;
            auto report = ng_bounds(t);

            for (int s = 0; s < samples; ++s) {
                auto wv = random_simplex_point(t.size(), t.size(), rng);
                auto wbarv = random_simplex_point(tbar.size(), tbar.size(), rng);
                double a = eccentricity_profile(t, WeightFunction::make(t, wv)).avec;
                double b = eccentricity_profile(tbar, WeightFunction::make(tbar, wbarv)).avec;
                ++result.checks;
                if (a + b < report.sum_lower - kSlack || a + b > report.sum_upper + kSlack)
                    record(result, "NG sum outside its bounds", t, &wv);
                ++result.checks;
                if (a * b < report.prod_lower - kSlack || a * b > report.prod_upper + kSlack)
                    record(result, "NG product outside its bounds", t, &wv);
            }
        }

        // Broom witnesses attain both sum bounds exactly.
        Graph broom = generate(GraphKind::broom, n);
        if (is_connected(complement(broom))) {
            auto report = ng_bounds(broom);
            ++result.checks;
            if (std::abs(ng_witnesses(broom, NGTarget::sum_lower).achieved - report.sum_lower) >
                kSlack)
                record(result, "broom witness misses the NG sum lower bound", broom);
            ++result.checks;
            if (std::abs(ng_witnesses(broom, NGTarget::sum_upper).achieved - report.sum_upper) >
                kSlack)
                record(result, "broom witness misses the NG sum upper bound", broom);
        }
    }
    return result;
}

}  // namespace avec
