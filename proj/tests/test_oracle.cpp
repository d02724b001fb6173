#include "orderedmim/generators.hpp"
#include "orderedmim/oracle.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace orderedmim;

TEST_CASE("brute matching on paths") {
    CHECK(brute_max_induced_matching(testutil::path_graph(4)).weight == 1.0);
    const auto p5 = brute_max_induced_matching(testutil::path_graph(5));
    CHECK(p5.weight == 2.0);
    CHECK(testutil::is_induced_matching_direct(testutil::path_graph(5), p5.edges));
}

TEST_CASE("brute matching on the worked example") {
    const auto ex = testutil::worked_example();
    const auto sol = brute_max_induced_matching(ex.graph);
    CHECK(sol.weight == 7.0);
    std::set<EdgeId> picked(sol.edges.begin(), sol.edges.end());
    CHECK(picked == std::set<EdgeId>{0, 6});
}

TEST_CASE("brute matching equals full subset enumeration") {
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const VertexId n = 2 + static_cast<VertexId>(rng.below(6));
        const Graph g = with_random_edge_weights(random_graph(n, 0.5, rng), trial);
        if (g.edge_count() > 12)
            continue;
        CHECK(testutil::rel_equal(brute_max_induced_matching(g).weight,
                                  testutil::max_induced_matching_by_subsets(g)));
    }
}

TEST_CASE("brute matching dominates any other matching produced here") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const auto inst = generate(GraphClass::Cocomparability, 2 + static_cast<VertexId>(rng.below(9)),
                                   0.1 + 0.8 * rng.uniform01(), seed);
        const Graph g = with_random_edge_weights(inst.graph, seed + 1);
        const auto brute = brute_max_induced_matching(g, g.edge_count());
        const auto fast = max_weight_induced_matching(g, inst.witness);
        CHECK(brute.weight >= fast.weight - 1e-12);
    }
}

TEST_CASE("brute matching respects its size bound") {
    const Graph big = testutil::path_graph(30); // 29 edges
    CHECK_THROWS_AS(brute_max_induced_matching(big), std::invalid_argument);
    CHECK_NOTHROW(brute_max_induced_matching(big, 29));
    SECTION("environment override") {
        REQUIRE(setenv("ORDEREDMIM_BRUTE_LIMIT", "40", 1) == 0);
        CHECK(brute_force_limit() == 40);
        CHECK_NOTHROW(brute_max_induced_matching(big));
        REQUIRE(setenv("ORDEREDMIM_BRUTE_LIMIT", "nope", 1) == 0);
        CHECK_THROWS_AS(brute_force_limit(), std::invalid_argument);
        REQUIRE(unsetenv("ORDEREDMIM_BRUTE_LIMIT") == 0);
        CHECK(brute_force_limit() == 24);
    }
}

TEST_CASE("brute independent set on small graphs") {
    Graph bar3 = testutil::edgeless_graph(3);
    bar3.set_vertex_weights({1.0, 2.0, 3.0});
    const auto all = brute_max_independent_set(bar3);
    CHECK(all.weight == 6.0);
    CHECK(all.vertices == std::vector<VertexId>{0, 1, 2});

    Graph k3 = testutil::complete_graph(3);
    k3.set_vertex_weights({1.0, 2.0, 3.0});
    CHECK(brute_max_independent_set(k3).weight == 3.0);

    // five-cycle with unit weights: at most two pairwise nonadjacent vertices
    CHECK(brute_max_independent_set(testutil::cycle_graph(5)).weight ==
          testutil::max_independent_set_by_subsets(testutil::cycle_graph(5)));
    CHECK(brute_max_independent_set(testutil::cycle_graph(5)).weight == 2.0);

    CHECK_THROWS_AS(brute_max_independent_set(testutil::edgeless_graph(30)), std::invalid_argument);
}

TEST_CASE("explicit-square pipeline agrees with the oracles") {
    const auto ex = testutil::worked_example();
    const auto via_square = induced_matching_via_explicit_square(ex.graph, ex.sigma);
    CHECK(via_square.weight == 7.0);
    CHECK(via_square.edges == std::vector<EdgeId>{0, 6});

    const Graph p5 = testutil::path_graph(5);
    CHECK(induced_matching_via_explicit_square(p5, Ordering::identity(5)).weight ==
          brute_max_induced_matching(p5).weight);

    CHECK_THROWS_AS(induced_matching_via_explicit_square(testutil::path_graph(3), Ordering::identity(3), 1),
                    std::invalid_argument);
}
