#include "orderedmim/generators.hpp"
#include "orderedmim/graph.hpp"
#include "orderedmim/graph_io.hpp"
#include "orderedmim/patterns.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace orderedmim;
using testutil::make_graph;

TEST_CASE("parse_graph reads a single weighted edge") {
    const Graph g = parse_graph("2 1\n0 1 5.0");
    REQUIRE(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edge(0).u == 0);
    CHECK(g.edge(0).v == 1);
    CHECK(g.edge(0).weight == 5.0);
}

TEST_CASE("parse_graph reads an edgeless graph") {
    const Graph g = parse_graph("1 0");
    REQUIRE(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse_graph skips comments and blank lines") {
    const Graph g = parse_graph("# header comment\n\n3 2\n0 1\n\n# trailing\n1 2 2.5\n");
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edge(0).weight == 1.0);
    CHECK(g.edge(1).weight == 2.5);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse_graph rejects malformed input") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("2"), ParseError);
    CHECK_THROWS_AS(parse_graph("two 1\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 1 1"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1"), ParseError);      // fewer lines than m
    CHECK_THROWS_AS(parse_graph("2 0\n0 1"), ParseError);      // more lines than m
    CHECK_THROWS_AS(parse_graph("2 1\n0 0"), ParseError);      // self-loop
    CHECK_THROWS_AS(parse_graph("2 1\n0 2"), ParseError);      // id out of range
    CHECK_THROWS_AS(parse_graph("2 1\n0 -1"), ParseError);     // negative id
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 0"), ParseError);    // zero weight
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 -2"), ParseError);   // negative weight
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 x"), ParseError);    // bad weight token
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0"), ParseError); // duplicate, reversed
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n0 1 2"), ParseError);
}

TEST_CASE("serialize_graph canonical forms") {
    CHECK(serialize_graph(testutil::edgeless_graph(1)) == "1 0\n");
    const Graph g = parse_graph("3 2\n# c\n2 0 5.0\n0 1");
    CHECK(serialize_graph(g) == "3 2\n2 0 5\n0 1\n");
    // idempotent after the first pass
    CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
}

TEST_CASE("parse then serialize round-trips generated graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        for (GraphClass c : kAllGraphClasses) {
            const auto inst = generate(c, 1 + static_cast<VertexId>(seed % 9), 0.5, seed);
            const Graph weighted = with_random_edge_weights(inst.graph, seed);
            CHECK(parse_graph(serialize_graph(weighted)) == weighted);
        }
    }
}

TEST_CASE("worked example file parses to seven edges") {
    const std::string text = "7 7\n0 1 5\n1 4 1\n4 3 1.5\n1 2 1\n3 2 1\n2 5 1\n5 6 2\n";
    const Graph g = parse_graph(text);
    REQUIRE(g.edge_count() == 7);
    CHECK(g == testutil::worked_example().graph);
}

TEST_CASE("ordering parse and serialize") {
    const Ordering sigma = parse_ordering("2 0 1\n", 3);
    CHECK(sigma.vertex_at(0) == 2);
    CHECK(sigma.position_of(1) == 2);
    CHECK(serialize_ordering(sigma) == "2 0 1\n");
    CHECK_THROWS_AS(parse_ordering("0 1", 3), ParseError);       // too few
    CHECK_THROWS_AS(parse_ordering("0 1 1", 3), ParseError);     // repeat
    CHECK_THROWS_AS(parse_ordering("0 1 3", 3), ParseError);     // out of range
    CHECK_THROWS_AS(parse_ordering("0 1 2 0", 3), ParseError);   // too many
}

TEST_CASE("vertex weight file round-trip") {
    const auto w = parse_vertex_weights("1 2.5\n0 1\n2 0.25\n", 3);
    CHECK(w == std::vector<double>{1.0, 2.5, 0.25});
    CHECK(parse_vertex_weights(serialize_vertex_weights(w), 3) == w);
    CHECK_THROWS_AS(parse_vertex_weights("0 1\n", 2), ParseError);          // missing vertex
    CHECK_THROWS_AS(parse_vertex_weights("0 1\n0 2\n", 2), ParseError);     // duplicate
    CHECK_THROWS_AS(parse_vertex_weights("0 1\n1 -1\n", 2), ParseError);    // non-positive
}

TEST_CASE("graph invariants are enforced at construction") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1, 1.0}, {1, 0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(1, {}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(1, {}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("adjacency matches the edge list") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(10, 0.4, rng);
        const AdjacencyMatrix adj(g);
        const auto pairs = testutil::edge_pair_set(g);
        for (VertexId u = 0; u < 10; ++u)
            for (VertexId v = 0; v < 10; ++v) {
                CHECK(g.has_edge(u, v) == (pairs.count({u, v}) > 0));
                CHECK(adj(u, v) == g.has_edge(u, v));
            }
    }
}

TEST_CASE("complement of a triangle is edgeless") {
    CHECK(complement(testutil::complete_graph(3)).edge_count() == 0);
}

TEST_CASE("complement of the path on four vertices") {
    // P4 a-b-c-d; the complement's edges enumerate to {ac, ad, bd}
    const Graph co = complement(testutil::path_graph(4));
    REQUIRE(co.edge_count() == 3);
    CHECK(co.has_edge(0, 2));
    CHECK(co.has_edge(0, 3));
    CHECK(co.has_edge(1, 3));
}

TEST_CASE("complement is an involution") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_graph(3 + static_cast<VertexId>(trial % 8), 0.5, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("generators are deterministic in the seed") {
    for (GraphClass c : kAllGraphClasses) {
        const auto first = generate(c, 12, 0.6, 99);
        const auto second = generate(c, 12, 0.6, 99);
        CHECK(serialize_graph(first.graph) == serialize_graph(second.graph));
        CHECK(first.witness == second.witness);
        const auto other = generate(c, 12, 0.6, 100);
        CHECK((serialize_graph(other.graph) != serialize_graph(first.graph) || other.witness != first.witness));
    }
}

TEST_CASE("generator edge cases") {
    const auto single = generate(GraphClass::Threshold, 1, 0.5, 3);
    CHECK(single.graph.vertex_count() == 1);
    CHECK(single.graph.edge_count() == 0);
    CHECK(single.witness.size() == 1);

    const auto sparse = generate(GraphClass::Interval, 20, 0.0, 3);
    CHECK(sparse.graph.edge_count() == 0);

    CHECK_THROWS_AS(generate(GraphClass::Interval, 0, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate(GraphClass::Interval, 5, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(graph_class_from_string("perfect"), std::invalid_argument);
}

TEST_CASE("every generated witness passes its class check") {
    for (GraphClass c : kAllGraphClasses)
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const double density = (seed % 10) / 10.0 + 0.05;
            const auto inst = generate(c, 2 + static_cast<VertexId>(seed % 14), std::min(density, 1.0), seed);
            const auto check = verify_class_ordering(inst.graph, inst.witness, c);
            INFO("class " << to_string(c) << " seed " << seed);
            CHECK(check.ok);
        }
}

TEST_CASE("generated graphs match their class by the forbidden-subgraph tests") {
    // ties the generators (and the pattern tables) to independent
    // characterizations on small instances
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const VertexId n = 2 + static_cast<VertexId>(seed % 7);
        CHECK(testutil::is_chordal_direct(generate(GraphClass::Chordal, n, 0.7, seed).graph));
        CHECK(testutil::is_interval_direct(generate(GraphClass::Interval, n, 0.7, seed).graph));
        CHECK(testutil::is_split_direct(generate(GraphClass::Split, n, 0.7, seed).graph));
        CHECK(testutil::is_threshold_direct(generate(GraphClass::Threshold, n, 0.7, seed).graph));
    }
}
