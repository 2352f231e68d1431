// Acceptance suite: each criterion prints exactly one PASS/FAIL line.
// Exit code is the number of failed criteria.

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "avec/connectivity.hpp"
#include "avec/enumerate.hpp"
#include "avec/extremal.hpp"
#include "avec/metrics.hpp"
#include "avec/nordhaus_gaddum.hpp"
#include "avec/optimizer.hpp"
#include "avec/rng.hpp"

using namespace avec;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!pass && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

// --- 1. Tree lower bound and attainment ------------------------------------

void criterion1() {
    SplitMix64 rng(1);
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 9 && ok; ++n) {
        for (const Graph& t : all_free_trees(n)) {
            double bound = tree_avec_min_formula(n, tree_profile(t).leaf_count);
            if (std::abs(eccentricity_profile(t, tree_min_weights(t)).avec - bound) > 1e-9) {
                ok = false;
                detail = "witness misses the bound at n=" + std::to_string(n);
                break;
            }
            for (int s = 0; s < 100; ++s) {
                auto w = WeightFunction::make(t, random_simplex_point(t.size(), t.size(), rng));
                if (eccentricity_profile(t, w).avec < bound - 1e-9) {
                    ok = false;
                    detail = "random weighting beats the bound at n=" + std::to_string(n);
                    break;
                }
            }
            if (!ok) break;
        }
    }
    report(1, "tree lower bound (n-1)(n+t)/(nt) with witness attainment", ok, detail);
}

// --- 2. Tree upper bound n-1 ------------------------------------------------

void criterion2() {
    SplitMix64 rng(2);
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 9 && ok; ++n) {
        for (const Graph& t : all_free_trees(n)) {
            for (const Edge& e : t.edges()) {
                if (eccentricity_profile(t, tree_max_weights(t, e)).avec != n - 1.0) {
                    ok = false;
                    detail = "tree_max_weights not exact at n=" + std::to_string(n);
                    break;
                }
            }
            for (int s = 0; s < 100 && ok; ++s) {
                auto wv = random_simplex_point(t.size(), t.size(), rng);
                double max_w = 0.0;
                for (double x : wv) max_w = std::max(max_w, x);
                double a = eccentricity_profile(t, WeightFunction::make(t, wv)).avec;
                if (a > n - 1.0 + 1e-9) {
                    ok = false;
                    detail = "avec above n-1";
                } else if (max_w <= n - 1.0 - 1e-3 && !(a < n - 1.0)) {
                    ok = false;
                    detail = "avec not strictly below n-1 despite spread weights";
                }
            }
            if (!ok) break;
        }
    }
    report(2, "tree upper bound n-1 with exact and strict cases", ok, detail);
}

// --- 3. Corollary endpoints -------------------------------------------------

void criterion3() {
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 12; ++n) {
        Graph star = generate(GraphKind::star, n);
        Graph path = generate(GraphKind::path, n);
        double star_avec = eccentricity_profile(star, tree_min_weights(star)).avec;
        double path_avec = eccentricity_profile(path, tree_min_weights(path)).avec;
        if (std::abs(star_avec - (2.0 - 1.0 / n)) > 1e-12 ||
            std::abs(path_avec - ((n + 1) / 2.0 - 1.0 / n)) > 1e-12) {
            ok = false;
            detail = "mismatch at n=" + std::to_string(n);
        }
    }
    report(3, "star gives 2-1/n and path gives (n+1)/2-1/n", ok, detail);
}

// --- 4. Non-tree bounds -----------------------------------------------------

void criterion4() {
    SplitMix64 rng(4);
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 6 && ok; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            if (g.size() == n - 1) continue;
            double ratio = static_cast<double>(g.size()) / edge_connectivity(g);
            if (eccentricity_profile(g, spanning_tree_zero_weights(g)).avec != 0.0) {
                ok = false;
                detail = "zero construction not exactly zero";
                break;
            }
            if (std::abs(eccentricity_profile(g, mincut_weights(g)).avec - ratio) > 1e-9) {
                ok = false;
                detail = "min-cut construction misses m/lambda";
                break;
            }
            for (int s = 0; s < 50; ++s) {
                auto w = WeightFunction::make(g, random_simplex_point(g.size(), g.size(), rng));
                double a = eccentricity_profile(g, w).avec;
                if (a < 0.0 || a > ratio + 1e-9) {
                    ok = false;
                    detail = "avec outside [0, m/lambda]";
                    break;
                }
            }
            if (!ok) break;
        }
    }
    report(4, "non-tree bounds 0 <= avec <= m/lambda with both witnesses", ok, detail);
}

// --- 5. Even cycles ---------------------------------------------------------

void criterion5() {
    bool ok = true;
    std::string detail;
    for (int k = 2; k <= 6; ++k) {
        Graph cycle = generate(GraphKind::cycle, 2 * k);
        double a = eccentricity_profile(cycle, WeightFunction::all_ones(cycle)).avec;
        double ratio = static_cast<double>(cycle.size()) / edge_connectivity(cycle);
        if (a != static_cast<double>(k) || ratio != static_cast<double>(k)) {
            ok = false;
            detail = "k=" + std::to_string(k);
        }
    }
    report(5, "avec(C_2k, all-ones) = k = m/lambda exactly", ok, detail);
}

// --- 6. Edge connectivity vs brute force -------------------------------------

bool subsets_disconnect(const Graph& g, int k, std::vector<int>& pick, int pos, int from) {
    if (pos == k) {
        std::vector<std::pair<int, int>> kept;
        for (int i = 0; i < g.size(); ++i) {
            bool removed = false;
            for (int j = 0; j < k; ++j)
                if (pick[j] == i) removed = true;
            if (!removed) kept.emplace_back(g.edge(i).u, g.edge(i).v);
        }
        return !is_connected(Graph::make(g.order(), kept));
    }
    for (int i = from; i < g.size(); ++i) {
        pick[pos] = i;
        if (subsets_disconnect(g, k, pick, pos + 1, i + 1)) return true;
    }
    return false;
}

int brute_lambda(const Graph& g) {
    for (int k = 1; k <= g.size(); ++k) {
        std::vector<int> pick(k);
        if (subsets_disconnect(g, k, pick, 0, 0)) return k;
    }
    return g.size();
}

void criterion6() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 5 && ok; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            if (edge_connectivity(g) != brute_lambda(g)) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n);
                break;
            }
        }
    }
    std::vector<Graph> extras{generate(GraphKind::complete, 6), generate(GraphKind::cycle, 8)};
    for (int n = 4; n <= 9; ++n) extras.push_back(generate(GraphKind::broom, n));
    for (const Graph& g : extras) {
        if (edge_connectivity(g) != brute_lambda(g)) {
            ok = false;
            detail = "mismatch on a named graph";
        }
    }
    report(6, "edge_connectivity agrees with cut-set enumeration", ok, detail);
}

// --- 7. Nordhaus-Gaddum -----------------------------------------------------

void criterion7() {
    SplitMix64 rng(7);
    bool ok = true;
    std::string detail;

    auto p4 = generate(GraphKind::path, 4);
    auto rp4 = ng_bounds(p4);
    auto p4_lower = ng_witnesses(p4, NGTarget::sum_lower);
    auto p4_upper = ng_witnesses(p4, NGTarget::sum_upper);
    double p4_prod_lower = eccentricity_profile(p4, p4_lower.weights_g).avec *
                           eccentricity_profile(complement(p4), p4_lower.weights_gbar).avec;
    double p4_prod_upper = eccentricity_profile(p4, p4_upper.weights_g).avec *
                           eccentricity_profile(complement(p4), p4_upper.weights_gbar).avec;
    if (std::abs(rp4.sum_lower - 4.5) > 1e-12 || std::abs(rp4.sum_upper - 6.0) > 1e-12 ||
        std::abs(rp4.prod_lower - 81.0 / 16.0) > 1e-12 || std::abs(rp4.prod_upper - 9.0) > 1e-12 ||
        std::abs(p4_lower.achieved - 4.5) > 1e-9 || std::abs(p4_upper.achieved - 6.0) > 1e-9 ||
        std::abs(p4_prod_lower - 81.0 / 16.0) > 1e-9 || std::abs(p4_prod_upper - 9.0) > 1e-9) {
        ok = false;
        detail = "P4 numbers";
    }

    auto broom = generate(GraphKind::broom, 7);
    auto rb = ng_bounds(broom);
    if (std::abs(ng_witnesses(broom, NGTarget::sum_lower).achieved - 72.0 / 35.0) > 1e-9 ||
        std::abs(ng_witnesses(broom, NGTarget::sum_upper).achieved - 21.0) > 1e-9 ||
        std::abs(rb.sum_upper - 21.0) > 1e-12) {
        ok = false;
        detail = "broom(7) numbers";
    }

    for (int n = 5; n <= 9 && ok; ++n) {
        for (const Graph& t : all_free_trees(n)) {
            Graph tbar = complement(t);
            if (!is_connected(tbar)) continue;
            auto r = ng_bounds(t);
            for (int s = 0; s < 50; ++s) {
                auto w = WeightFunction::make(t, random_simplex_point(t.size(), t.size(), rng));
                auto wbar = WeightFunction::make(
                    tbar, random_simplex_point(tbar.size(), tbar.size(), rng));
                double a = eccentricity_profile(t, w).avec;
                double b = eccentricity_profile(tbar, wbar).avec;
                if (a + b < r.sum_lower - 1e-9 || a + b > r.sum_upper + 1e-9 ||
                    a * b < -1e-12 || a * b > r.prod_upper + 1e-9) {
                    ok = false;
                    detail = "random pair violation at n=" + std::to_string(n);
                    break;
                }
            }
            if (!ok) break;
        }
    }
    report(7, "Nordhaus-Gaddum numbers for P4, broom(7), and random tree pairs", ok, detail);
}

// --- 8. Optimizer concordance -----------------------------------------------

void criterion8() {
    bool ok = true;
    std::string detail;

    struct GridCheck {
        Graph g;
        int resolution;
    };
    Graph paw = Graph::make(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    std::vector<GridCheck> grids{{generate(GraphKind::path, 4), 12},
                                 {generate(GraphKind::path, 3), 6},
                                 {generate(GraphKind::cycle, 4), 8},
                                 {paw, 8}};
    for (const auto& [g, r] : grids) {
        auto bounds = bounds_for(g);
        double step = static_cast<double>(g.size()) / r;
        if (std::abs(grid_search(g, Direction::min, r).best_value - bounds.lower) > step ||
            std::abs(grid_search(g, Direction::max, r).best_value - bounds.upper) > step) {
            ok = false;
            detail = "grid search off by more than one step";
        }
    }

    std::vector<Graph> locals;
    for (int n = 3; n <= 7; ++n)
        for (const Graph& t : all_free_trees(n)) locals.push_back(t);
    locals.push_back(generate(GraphKind::cycle, 4));
    locals.push_back(generate(GraphKind::cycle, 5));
    locals.push_back(generate(GraphKind::cycle, 6));
    locals.push_back(generate(GraphKind::complete, 4));
    for (const Graph& g : locals) {
        auto bounds = bounds_for(g);
        if (std::abs(local_search(g, Direction::min, 20, 42).best_value - bounds.lower) > 1e-4 ||
            std::abs(local_search(g, Direction::max, 20, 42).best_value - bounds.upper) > 1e-4) {
            ok = false;
            std::ostringstream os;
            os << "local search missed a closed form on n=" << g.order() << " m=" << g.size();
            detail = os.str();
        }
    }
    report(8, "grid and local searches reproduce the closed-form extremes", ok, detail);
}

// --- 9. Leaf distance identity ----------------------------------------------

void criterion9() {
    SplitMix64 rng(9);
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 10 && ok; ++n) {
        for (const Graph& t : all_free_trees(n)) {
            for (int s = 0; s < 100; ++s) {
                auto w = WeightFunction::make(t, random_simplex_point(t.size(), t.size(), rng));
                auto [lhs, rhs] = leaf_distance_identity_check(t, w);
                if (!nearly_equal(lhs, rhs)) {
                    ok = false;
                    detail = "sides differ at n=" + std::to_string(n);
                    break;
                }
            }
            if (!ok) break;
        }
    }
    report(9, "leaf-pair distance identity holds on all trees up to n=10", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures;
}
