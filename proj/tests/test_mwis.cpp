#include "orderedmim/generators.hpp"
#include "orderedmim/mwis.hpp"
#include "orderedmim/oracle.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace orderedmim;

namespace {

/// Walks the working list after every insertion: weights must be
/// nondecreasing left to right, and every chain must be an independent set.
struct SweepAuditor {
    const Graph& g;
    const Ordering& sigma;

    void operator()(std::int32_t i, const ChainSweepState& tau) const {
        double last = 0.0;
        bool first = true;
        for (std::int32_t at = tau.head; at != -1; at = tau.next[static_cast<std::size_t>(at)]) {
            const double w = tau.set_weight[static_cast<std::size_t>(at)];
            if (!first)
                REQUIRE(w >= last);
            last = w;
            first = false;
        }
        std::vector<VertexId> chain;
        for (std::int32_t at = i; at != -1; at = tau.predecessor[static_cast<std::size_t>(at)])
            chain.push_back(sigma.vertex_at(at));
        REQUIRE(testutil::is_independent_set_direct(g, chain));
        // chain positions strictly decrease, and weights add up
        double expect = 0.0;
        for (VertexId v : chain)
            expect += g.vertex_weight(v);
        REQUIRE(testutil::rel_equal(expect, tau.set_weight[static_cast<std::size_t>(i)]));
    }
};

} // namespace

TEST_CASE("independent set on trivial graphs") {
    Graph single = testutil::edgeless_graph(1);
    single.set_vertex_weights({3.0});
    const auto sol = max_weight_independent_set(single, Ordering::identity(1));
    CHECK(sol.weight == 3.0);
    CHECK(sol.vertices == std::vector<VertexId>{0});

    const auto empty = max_weight_independent_set(testutil::edgeless_graph(0), Ordering::identity(0));
    CHECK(empty.weight == 0.0);
    CHECK(empty.vertices.empty());
}

TEST_CASE("independent set on the weighted path") {
    Graph p3 = testutil::path_graph(3);
    p3.set_vertex_weights({1.0, 5.0, 1.0});
    const auto sol = max_weight_independent_set(p3, Ordering::identity(3));
    CHECK(sol.weight == 5.0);
    CHECK(sol.vertices == std::vector<VertexId>{1});
    CHECK(sol.weight == testutil::max_independent_set_by_subsets(p3));
}

TEST_CASE("independent set on a weighted clique picks the heaviest vertex") {
    Graph k3 = testutil::complete_graph(3);
    k3.set_vertex_weights({2.0, 1.0, 1.0});
    const auto sol = max_weight_independent_set(k3, Ordering::identity(3));
    CHECK(sol.weight == 2.0);
    CHECK(sol.vertices == std::vector<VertexId>{0});
}

TEST_CASE("independent set rejects bad inputs") {
    Graph umbrella = testutil::make_graph(3, {{0, 2}});
    CHECK_THROWS_AS(max_weight_independent_set(umbrella, Ordering::identity(3)), std::invalid_argument);
    // reordered so the long edge no longer spans the isolated vertex
    CHECK_NOTHROW(max_weight_independent_set(umbrella, Ordering::from_permutation({1, 0, 2})));
}

TEST_CASE("independent set matches the oracle on generated instances") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng(seed * 13 + 7);
        const VertexId n = 1 + static_cast<VertexId>(rng.below(16));
        const auto inst = generate(GraphClass::Cocomparability, n, 0.1 + 0.8 * rng.uniform01(), seed);
        const Graph g = with_random_vertex_weights(inst.graph, seed + 1);
        const auto fast = max_weight_independent_set(g, inst.witness);
        const auto brute = brute_max_independent_set(g, n);
        INFO("seed " << seed);
        REQUIRE(testutil::rel_equal(fast.weight, brute.weight));
        REQUIRE(testutil::is_independent_set_direct(g, fast.vertices));
        double total = 0.0;
        for (VertexId v : fast.vertices)
            total += g.vertex_weight(v);
        REQUIRE(testutil::rel_equal(total, fast.weight));
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("sweep keeps its internal invariants on audited runs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed + 3);
        const VertexId n = 1 + static_cast<VertexId>(rng.below(12));
        const auto inst = generate(GraphClass::Interval, n, 0.2 + 0.6 * rng.uniform01(), seed);
        const Graph g = with_random_vertex_weights(inst.graph, seed + 5);
        max_weight_independent_set(g, inst.witness, SweepAuditor{g, inst.witness});
    }
}

TEST_CASE("sweep scan work is bounded by twice edges plus vertices") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed + 17);
        const VertexId n = 2 + static_cast<VertexId>(rng.below(40));
        const auto inst = generate(GraphClass::Cocomparability, n, 0.1 + 0.8 * rng.uniform01(), seed);
        const Graph g = with_random_vertex_weights(inst.graph, seed);
        const auto sol = max_weight_independent_set(g, inst.witness);
        const auto m = static_cast<std::uint64_t>(g.edge_count());
        CHECK(sol.ops.scan_steps + sol.ops.insert_steps <= 2 * m + 2 * static_cast<std::uint64_t>(n));
        CHECK(sol.ops.total() <= 8 * (m + static_cast<std::uint64_t>(n) + 1));
    }
}

TEST_CASE("unweighted graphs default to unit weights") {
    const Graph p5 = testutil::path_graph(5);
    const auto sol = max_weight_independent_set(p5, Ordering::identity(5));
    CHECK(sol.weight == 3.0); // alternate vertices
}
