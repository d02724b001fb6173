#pragma once

#include "orderedmim/chain_sweep.hpp"
#include "orderedmim/cocomp.hpp"
#include "orderedmim/graph.hpp"
#include "orderedmim/line_square.hpp"
#include "orderedmim/ordering_rules.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace orderedmim {

struct InducedMatchingSolution {
    double weight = 0.0;
    std::vector<EdgeId> edges;                      // ascending ordering position
    std::vector<double> set_weights;                // accumulated weight per processed position
    std::vector<std::int32_t> predecessor_position; // chain link per position, -1 at chain start
    EdgeOrdering order;                             // the edge ordering the sweep ran over
    OpCounters ops;
};

struct MatchingOptions {
    /// Cross-check every stamp-array verdict against the explicit 2K2
    /// predicate; throws std::logic_error on disagreement. Slow, for tests.
    bool audit_against_2k2 = false;
};

namespace detail {

/// The two iteration-keyed vertex stamp arrays driving the implicit square-
/// of-the-line-graph adjacency test. After marking edge ab, an edge tk is a
/// non-neighbour in the square of the line graph exactly when none of the
/// four slots carries the current stamp: tk then shares no endpoint with ab
/// and no edge of g joins {a,b} to {t,k}.
class EdgePairMarker {
public:
    EdgePairMarker(const Graph& g, const EdgeOrdering& order, bool audit)
        : g_(g), order_(order), audit_(audit),
          stamp_a_(static_cast<std::size_t>(g.vertex_count()), 0),
          stamp_b_(static_cast<std::size_t>(g.vertex_count()), 0) {
        endpoints_.reserve(static_cast<std::size_t>(order.size()));
        for (EdgeId pos = 0; pos < order.size(); ++pos)
            endpoints_.push_back(order.oriented(order.edge_at(pos)));
    }

    std::uint64_t mark(std::int32_t pos) {
        current_ = static_cast<std::uint32_t>(pos) + 1;
        current_pos_ = pos;
        const auto [a, b] = endpoints_[static_cast<std::size_t>(pos)];
        std::uint64_t writes = 0;
        for (const auto& n : g_.incident(a)) {
            stamp_a_[static_cast<std::size_t>(n.to)] = current_;
            ++writes;
        }
        for (const auto& n : g_.incident(b)) {
            stamp_b_[static_cast<std::size_t>(n.to)] = current_;
            ++writes;
        }
        return writes;
    }

    bool is_marked(std::int32_t pos) const {
        const auto [t, k] = endpoints_[static_cast<std::size_t>(pos)];
        const bool adjacent = stamp_a_[static_cast<std::size_t>(t)] == current_ ||
                              stamp_a_[static_cast<std::size_t>(k)] == current_ ||
                              stamp_b_[static_cast<std::size_t>(t)] == current_ ||
                              stamp_b_[static_cast<std::size_t>(k)] == current_;
        if (audit_) {
            const bool expected = !is_2k2(g_, order_.edge_at(current_pos_), order_.edge_at(pos));
            if (adjacent != expected)
                throw std::logic_error("stamp-array adjacency disagrees with the 2K2 predicate");
        }
        return adjacent;
    }

private:
    const Graph& g_;
    const EdgeOrdering& order_;
    bool audit_;
    std::vector<std::uint32_t> stamp_a_;
    std::vector<std::uint32_t> stamp_b_;
    std::vector<EdgeOrdering::Oriented> endpoints_;
    std::uint32_t current_ = 0;
    std::int32_t current_pos_ = 0;
};

} // namespace detail

/// Maximum weight induced matching given an umbrella-free ordering: runs the
/// chained sweep over the lexicographic edge ordering, deciding adjacency in
/// the square of the line graph implicitly through the stamp arrays. The
/// square is never materialized. O(m + sum of square degrees), hence O(mn).
inline InducedMatchingSolution max_weight_induced_matching(const Graph& g, const Ordering& sigma,
                                                           const MatchingOptions& options = {}) {
    for (const Edge& e : g.edges())
        if (!(e.weight > 0.0))
            throw std::invalid_argument("max_weight_induced_matching: edge weights must be positive");
    if (!verify_umbrella_free(g, sigma).ok)
        throw std::invalid_argument("max_weight_induced_matching: ordering has an umbrella");

    InducedMatchingSolution sol;
    OpCounters order_ops;
    sol.order = lex_edge_order(g, sigma, &order_ops);

    const EdgeId m = g.edge_count();
    std::vector<double> weights(static_cast<std::size_t>(m));
    for (EdgeId pos = 0; pos < m; ++pos)
        weights[static_cast<std::size_t>(pos)] = g.edge(sol.order.edge_at(pos)).weight;

    detail::EdgePairMarker marker(g, sol.order, options.audit_against_2k2);
    ChainSweepResult sweep = chain_sweep(weights, marker);

    sol.weight = sweep.best_weight();
    for (std::int32_t pos : sweep.best_chain())
        sol.edges.push_back(sol.order.edge_at(pos));
    sol.set_weights = std::move(sweep.set_weight);
    sol.predecessor_position = std::move(sweep.predecessor);
    sol.ops = sweep.ops;
    return sol;
}

struct Deg2Profile {
    std::vector<std::int64_t> degree2;               // exact degree in the square of the line graph
    std::vector<std::int64_t> neighbor_degree_bound; // per-edge bound: degrees summed over both endpoints' other neighbours
    std::int64_t total_degree2 = 0;
    std::int64_t aggregate_bound = 0;                // 2 * m * max degree
};

/// Per-edge square-of-the-line-graph degrees with their bounds. Small
/// instances are measured on the explicit square; larger ones by marking the
/// two endpoint neighbourhoods and counting edges incident to the marked
/// set, which costs the sum of the per-edge bounds.
inline Deg2Profile deg2_profile(const Graph& g, EdgeId explicit_limit = 5000) {
    const EdgeId m = g.edge_count();
    Deg2Profile prof;
    prof.degree2.assign(static_cast<std::size_t>(m), 0);
    prof.neighbor_degree_bound.assign(static_cast<std::size_t>(m), 0);
    prof.aggregate_bound = 2 * static_cast<std::int64_t>(m) * static_cast<std::int64_t>(g.max_degree());

    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        std::int64_t bound = 0;
        for (const auto& n : g.incident(ed.u))
            if (n.to != ed.v)
                bound += g.degree(n.to);
        for (const auto& n : g.incident(ed.v))
            if (n.to != ed.u)
                bound += g.degree(n.to);
        prof.neighbor_degree_bound[static_cast<std::size_t>(e)] = bound;
    }

    if (m <= explicit_limit) {
        const Graph sq = line_square(g);
        for (EdgeId e = 0; e < m; ++e)
            prof.degree2[static_cast<std::size_t>(e)] = sq.degree(e);
    } else {
        // an edge is adjacent to e=ab in the square of the line graph iff it
        // touches {a,b} or a neighbour of a or b
        std::vector<std::uint32_t> vertex_mark(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<std::uint32_t> edge_mark(static_cast<std::size_t>(m), 0);
        for (EdgeId e = 0; e < m; ++e) {
            const std::uint32_t cur = static_cast<std::uint32_t>(e) + 1;
            const Edge& ed = g.edge(e);
            std::vector<VertexId> marked{ed.u, ed.v};
            vertex_mark[static_cast<std::size_t>(ed.u)] = cur;
            vertex_mark[static_cast<std::size_t>(ed.v)] = cur;
            for (VertexId endpoint : {ed.u, ed.v})
                for (const auto& n : g.incident(endpoint))
                    if (vertex_mark[static_cast<std::size_t>(n.to)] != cur) {
                        vertex_mark[static_cast<std::size_t>(n.to)] = cur;
                        marked.push_back(n.to);
                    }
            std::int64_t count = 0;
            for (VertexId v : marked)
                for (const auto& n : g.incident(v))
                    if (n.via != e && edge_mark[static_cast<std::size_t>(n.via)] != cur) {
                        edge_mark[static_cast<std::size_t>(n.via)] = cur;
                        ++count;
                    }
            prof.degree2[static_cast<std::size_t>(e)] = count;
        }
    }
    for (std::int64_t d : prof.degree2)
        prof.total_degree2 += d;
    return prof;
}

} // namespace orderedmim
