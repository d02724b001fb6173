#include "orderedmim/generators.hpp"
#include "orderedmim/line_square.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace orderedmim;

TEST_CASE("is_2k2 on paths") {
    const Graph p4 = testutil::path_graph(4); // edges 0:ab 1:bc 2:cd
    CHECK_FALSE(is_2k2(p4, 0, 2));            // bc joins them
    const Graph p5 = testutil::path_graph(5); // edges 0..3
    CHECK(is_2k2(p5, 0, 3));
    CHECK(is_2k2(p5, 3, 0));
    CHECK_FALSE(is_2k2(p5, 0, 1)); // share b
    CHECK_FALSE(is_2k2(p5, 0, 2));
}

TEST_CASE("is_2k2 on the worked example") {
    const auto ex = testutil::worked_example();
    CHECK(is_2k2(ex.graph, 0, 6)); // ab vs uv
    CHECK(is_2k2(ex.graph, 2, 6)); // ed vs uv
    CHECK_FALSE(is_2k2(ex.graph, 0, 1));
    CHECK_THROWS_AS(is_2k2(ex.graph, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_2k2(ex.graph, 0, 7), std::invalid_argument);
    CHECK_THROWS_AS(is_2k2(ex.graph, -1, 0), std::invalid_argument);
}

TEST_CASE("line_graph small cases") {
    Graph p3_line = line_graph(testutil::path_graph(3));
    REQUIRE(p3_line.has_vertex_weights()); // inherits unit edge weights
    p3_line.clear_vertex_weights();
    CHECK(p3_line == testutil::complete_graph(2));

    const Graph k3_line = line_graph(testutil::complete_graph(3));
    CHECK(k3_line.vertex_count() == 3);
    CHECK(k3_line.edge_count() == 3); // a triangle again

    // all star edges share the center
    const Graph star_line = line_graph(testutil::star_graph(4));
    CHECK(star_line.vertex_count() == 4);
    CHECK(star_line.edge_count() == 6);

    // weights ride along as vertex weights
    const auto ex = testutil::worked_example();
    const Graph lg = line_graph(ex.graph);
    REQUIRE(lg.has_vertex_weights());
    CHECK(lg.vertex_weight(0) == 5.0);
    CHECK(lg.vertex_weight(2) == 1.5);
}

TEST_CASE("square small cases") {
    CHECK(square(testutil::path_graph(3)) == testutil::complete_graph(3));
    for (VertexId n = 2; n <= 5; ++n) {
        Graph sq = square(testutil::complete_graph(n));
        // a complete graph has diameter one already, but edge ids may differ
        CHECK(sq.vertex_count() == n);
        CHECK(sq.edge_count() == n * (n - 1) / 2);
    }

    const Graph c6sq = square(testutil::cycle_graph(6));
    for (VertexId v = 0; v < 6; ++v)
        CHECK(c6sq.degree(v) == 4);
}

TEST_CASE("square adjacency equals distance at most two") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const VertexId n = 2 + static_cast<VertexId>(rng.below(10));
        const Graph g = random_graph(n, 0.3, rng);
        const Graph sq = square(g);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) {
                const int d = testutil::bfs_distance(g, u, v);
                CHECK(sq.has_edge(u, v) == (d >= 1 && d <= 2));
            }
    }
}

TEST_CASE("line_square equals the composed construction") {
    Rng rng(23);
    int largest = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const VertexId n = 2 + static_cast<VertexId>(rng.below(12));
        const Graph g = random_graph(n, 0.2 + 0.6 * rng.uniform01(), rng);
        if (g.edge_count() > 200)
            continue;
        largest = std::max(largest, static_cast<int>(g.edge_count()));
        const Graph direct = line_square(g);
        const Graph composed = square(line_graph(g));
        REQUIRE(direct.vertex_count() == composed.vertex_count());
        for (EdgeId i = 0; i < g.edge_count(); ++i)
            for (EdgeId j = i + 1; j < g.edge_count(); ++j)
                CHECK(direct.has_edge(i, j) == composed.has_edge(i, j));
        // non-adjacency is exactly the 2K2 predicate, checked directly on
        // endpoint sets
        const auto pairs = testutil::edge_pair_set(g);
        for (EdgeId i = 0; i < g.edge_count(); ++i)
            for (EdgeId j = i + 1; j < g.edge_count(); ++j) {
                const Edge& e = g.edge(i);
                const Edge& f = g.edge(j);
                const std::set<VertexId> endpoints{e.u, e.v, f.u, f.v};
                bool joined = false;
                for (VertexId x : {e.u, e.v})
                    for (VertexId y : {f.u, f.v})
                        if (pairs.count({x, y}))
                            joined = true;
                const bool two_k2 = endpoints.size() == 4 && !joined;
                CHECK(direct.has_edge(i, j) == !two_k2);
                CHECK(is_2k2(g, i, j) == two_k2);
            }
    }
    CHECK(largest >= 30);
}

TEST_CASE("line_square of the path on five vertices") {
    const Graph sq = line_square(testutil::path_graph(5));
    int nonadjacent = 0;
    for (EdgeId i = 0; i < 4; ++i)
        for (EdgeId j = i + 1; j < 4; ++j)
            if (!sq.has_edge(i, j))
                ++nonadjacent;
    CHECK(nonadjacent == 1);
    CHECK_FALSE(sq.has_edge(0, 3)); // the outer pair
}

TEST_CASE("line_square of the worked example") {
    const auto ex = testutil::worked_example();
    const Graph sq = line_square(ex.graph);
    std::set<std::pair<EdgeId, EdgeId>> nonadjacent;
    for (EdgeId i = 0; i < 7; ++i)
        for (EdgeId j = i + 1; j < 7; ++j)
            if (!sq.has_edge(i, j))
                nonadjacent.insert({i, j});
    // enumerating all 21 pairs: uv is split from ab, be, and ed; every other
    // pair shares an endpoint or is joined by an edge
    CHECK(nonadjacent == std::set<std::pair<EdgeId, EdgeId>>{{0, 6}, {1, 6}, {2, 6}});
    for (auto [i, j] : nonadjacent)
        CHECK(is_2k2(ex.graph, i, j));
    REQUIRE(sq.has_vertex_weights());
    CHECK(sq.vertex_weight(6) == 2.0);
}

TEST_CASE("induced matchings are independent sets of the square of the line graph") {
    Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const VertexId n = 2 + static_cast<VertexId>(rng.below(6));
        const Graph g = random_graph(n, 0.5, rng);
        if (g.edge_count() > 12)
            continue;
        const Graph sq = line_square(g);
        const EdgeId m = g.edge_count();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<EdgeId> chosen;
            for (EdgeId e = 0; e < m; ++e)
                if ((mask >> e) & 1u)
                    chosen.push_back(e);
            CHECK(testutil::is_induced_matching_direct(g, chosen) ==
                  testutil::is_independent_set_direct(sq, chosen));
        }
    }
}
