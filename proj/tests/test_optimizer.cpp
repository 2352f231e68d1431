#include <doctest.h>

#include <cmath>

#include "avec/extremal.hpp"
#include "avec/metrics.hpp"
#include "avec/optimizer.hpp"

using namespace avec;

TEST_CASE("grid_search hits known extremes") {
    Graph p4 = generate(GraphKind::path, 4);
    auto rmin = grid_search(p4, Direction::min, 12);
    CHECK(rmin.best_value == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(rmin.best_weights.is_normalized());

    Graph p2 = generate(GraphKind::path, 2);
    CHECK(grid_search(p2, Direction::max, 4).best_value == doctest::Approx(1.0));

    Graph c4 = generate(GraphKind::cycle, 4);
    CHECK(grid_search(c4, Direction::max, 8).best_value == doctest::Approx(2.0));
    CHECK(grid_search(c4, Direction::min, 8).best_value == doctest::Approx(0.0));
}

TEST_CASE("grid_search guards the lattice size") {
    Graph k6 = generate(GraphKind::complete, 6);  // m = 15
    CHECK_THROWS_AS(grid_search(k6, Direction::min, 64), TooManyEdges);
}

TEST_CASE("grid best value is reproduced by re-evaluating its weights") {
    Graph c5 = generate(GraphKind::cycle, 5);
    auto r = grid_search(c5, Direction::max, 6);
    CHECK(eccentricity_profile(c5, r.best_weights).avec ==
          doctest::Approx(r.best_value).epsilon(1e-12));
    CHECK(r.evaluations > 0);
}

TEST_CASE("local_search reaches closed forms") {
    for (int n : {4, 5, 6}) {
        Graph t = generate(GraphKind::broom, n);
        auto rmax = local_search(t, Direction::max, 5, 42);
        CHECK(rmax.best_value == doctest::Approx(n - 1.0).epsilon(1e-6));
    }

    Graph broom7 = generate(GraphKind::broom, 7);
    auto rmin = local_search(broom7, Direction::min, 20, 42);
    CHECK(std::abs(rmin.best_value - 72.0 / 35.0) < 1e-4);

    Graph k4 = generate(GraphKind::complete, 4);
    CHECK(local_search(k4, Direction::min, 5, 42).best_value < 1e-6);
}

TEST_CASE("local_search is deterministic for a fixed seed") {
    Graph c5 = generate(GraphKind::cycle, 5);
    auto a = local_search(c5, Direction::min, 3, 1234);
    auto b = local_search(c5, Direction::min, 3, 1234);
    CHECK(a.best_value == b.best_value);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.best_weights.values() == b.best_weights.values());
}

TEST_CASE("search results respect the theorems") {
    for (int n : {4, 5}) {
        Graph path = generate(GraphKind::path, n);
        double lower = tree_avec_min_formula(n, 2);
        CHECK(local_search(path, Direction::min, 5, 7).best_value >= lower - 1e-9);
        CHECK(local_search(path, Direction::max, 5, 7).best_value <= n - 1.0 + 1e-9);
    }
    Graph c6 = generate(GraphKind::cycle, 6);
    CHECK(local_search(c6, Direction::max, 5, 7).best_value <= 3.0 + 1e-9);
    CHECK(local_search(c6, Direction::min, 5, 7).best_value >= -1e-12);
}

TEST_CASE("grid and local search agree on small graphs") {
    Graph p3 = generate(GraphKind::path, 3);
    double step = 2.0 / 6.0;
    for (auto dir : {Direction::min, Direction::max}) {
        double g = grid_search(p3, dir, 6).best_value;
        double l = local_search(p3, dir, 5, 42).best_value;
        CHECK(std::abs(g - l) <= step);
    }
}

TEST_CASE("optimizer argument validation") {
    Graph p3 = generate(GraphKind::path, 3);
    CHECK_THROWS_AS(grid_search(p3, Direction::min, 0), ArgumentOutOfRange);
    CHECK_THROWS_AS(local_search(p3, Direction::min, 0, 1), ArgumentOutOfRange);
    Graph disconnected = Graph::make(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(grid_search(disconnected, Direction::min, 4), Disconnected);
    CHECK_THROWS_AS(local_search(disconnected, Direction::min, 1, 1), Disconnected);
}
