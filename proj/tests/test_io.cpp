#include <doctest.h>

#include <sstream>

#include "avec/extremal.hpp"
#include "avec/io.hpp"
#include "avec/metrics.hpp"

using namespace avec;

TEST_CASE("edge list parsing") {
    std::istringstream in("4 3\n0 1\n1 2\n2 3\n");
    auto parsed = read_edge_list(in);
    CHECK(parsed.g.order() == 4);
    CHECK(parsed.g.size() == 3);
    CHECK_FALSE(parsed.had_weights);
    CHECK(parsed.weights == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("edge list with weights and comments") {
    std::istringstream in("# a triangle\n3 3\n0 1 0.5\n1 2 1.5\n\n0 2 1.0\n");
    auto parsed = read_edge_list(in);
    CHECK(parsed.had_weights);
    CHECK(parsed.weights[*parsed.g.edge_index(1, 2)] == 1.5);
}

TEST_CASE("edge list errors") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty), ParseError);
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(truncated), ParseError);
    std::istringstream loop("2 1\n0 0\n");
    CHECK_THROWS_AS(read_edge_list(loop), LoopEdge);
    std::istringstream bad("x y\n");
    CHECK_THROWS_AS(read_edge_list(bad), ParseError);
}

TEST_CASE("write/read round trip preserves avec") {
    Graph broom = generate(GraphKind::broom, 7);
    auto w = tree_min_weights(broom);
    double before = eccentricity_profile(broom, w).avec;

    std::ostringstream out;
    write_edge_list(out, broom, w);
    std::istringstream in(out.str());
    auto parsed = read_edge_list(in);
    CHECK(parsed.g == broom);
    auto w2 = WeightFunction::make(parsed.g, parsed.weights);
    CHECK(eccentricity_profile(parsed.g, w2).avec == doctest::Approx(before).epsilon(1e-13));
}

TEST_CASE("weights file round trip") {
    Graph c4 = generate(GraphKind::cycle, 4);
    auto w = mincut_weights(c4);
    std::ostringstream out;
    write_weights(out, c4, w);
    std::istringstream in(out.str());
    auto values = read_weights(in, c4);
    CHECK(values == w.values());
}

TEST_CASE("weights file domain errors") {
    Graph p3 = generate(GraphKind::path, 3);
    std::istringstream missing("0 1 2.0\n");
    CHECK_THROWS_AS(read_weights(missing, p3), DomainMismatch);
    std::istringstream extra("0 1 2.0\n1 2 0.0\n0 2 1.0\n");
    CHECK_THROWS_AS(read_weights(extra, p3), DomainMismatch);
    std::istringstream duplicate("0 1 2.0\n0 1 0.0\n1 2 0.0\n");
    CHECK_THROWS_AS(read_weights(duplicate, p3), DomainMismatch);
}
