#pragma once

#include "orderedmim/graph.hpp"
#include "orderedmim/patterns.hpp"

#include <cassert>
#include <cstdint>
#include <deque>
#include <optional>
#include <queue>
#include <vector>

namespace orderedmim {

/// Umbrella-freeness check dedicated to large instances: for each edge, sweep
/// the vertices strictly between its endpoints. Costs the sum of edge spans
/// instead of the generic cubic triple scan.
inline OrderingCheck verify_umbrella_free(const Graph& g, const Ordering& sigma) {
    if (sigma.size() != g.vertex_count())
        throw std::invalid_argument("verify_umbrella_free: ordering does not cover the graph's vertex set");
    for (const Edge& e : g.edges()) {
        VertexId plo = sigma.position_of(e.u);
        VertexId phi = sigma.position_of(e.v);
        if (plo > phi)
            std::swap(plo, phi);
        const VertexId x = sigma.vertex_at(plo);
        const VertexId z = sigma.vertex_at(phi);
        for (VertexId p = plo + 1; p < phi; ++p) {
            const VertexId y = sigma.vertex_at(p);
            if (!g.has_edge(x, y) && !g.has_edge(y, z))
                return {false, PatternWitness{x, y, z, kUmbrella.id}};
        }
    }
    return {true, std::nullopt};
}

namespace detail {

/// Transitive-orientation attempt on a graph given as an adjacency matrix
/// plus adjacency lists. Orients one undecided edge, closes under forcing,
/// repeats. Forcing within a round treats edges decided in earlier rounds as
/// absent; that is what makes the round-by-round union transitive. Returns
/// the orientation as arcs, or nothing on a forcing contradiction.
class TransitiveOrienter {
public:
    TransitiveOrienter(VertexId n, const AdjacencyMatrix& adj, const std::vector<std::vector<VertexId>>& neighbors)
        : n_(n), adj_(adj), neighbors_(neighbors),
          round_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
          forward_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    std::optional<std::vector<std::pair<VertexId, VertexId>>> run() {
        for (VertexId u = 0; u < n_; ++u)
            for (VertexId v : neighbors_[static_cast<std::size_t>(u)]) {
                if (v < u || round_at(u, v) != 0)
                    continue;
                ++current_round_;
                if (!close_over(u, v))
                    return std::nullopt;
            }
        std::vector<std::pair<VertexId, VertexId>> arcs;
        for (VertexId u = 0; u < n_; ++u)
            for (VertexId v : neighbors_[static_cast<std::size_t>(u)])
                if (v > u)
                    arcs.emplace_back(forward_at(u, v) ? std::pair{u, v} : std::pair{v, u});
        return arcs;
    }

private:
    std::size_t cell(VertexId a, VertexId b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    std::uint32_t round_at(VertexId a, VertexId b) const { return round_[cell(a, b)]; }

    bool forward_at(VertexId a, VertexId b) const { return forward_[cell(a, b)] != 0; }

    // in the current round's graph: undecided edges plus this round's own
    bool present(VertexId a, VertexId b) const {
        if (a == b || adj_(a, b))
            return false; // not a complement edge at all
        const std::uint32_t r = round_at(a, b);
        return r == 0 || r == current_round_;
    }

    void orient(VertexId from, VertexId to) {
        round_[cell(from, to)] = current_round_;
        round_[cell(to, from)] = current_round_;
        forward_[cell(from, to)] = 1;
        forward_[cell(to, from)] = 0;
        queue_.emplace_back(from, to);
    }

    // Returns false on contradiction. force(a,b) requests arc a->b.
    bool force(VertexId a, VertexId b) {
        const std::uint32_t r = round_at(a, b);
        if (r == current_round_)
            return forward_at(a, b); // opposite direction already fixed -> fail
        if (r != 0)
            return true; // settled in an earlier round; out of scope here
        orient(a, b);
        return true;
    }

    bool close_over(VertexId u, VertexId v) {
        queue_.clear();
        orient(u, v);
        while (!queue_.empty()) {
            auto [a, b] = queue_.front();
            queue_.pop_front();
            // a->b forces a->c whenever ac is in this round's graph and bc is not
            for (VertexId c : neighbors_[static_cast<std::size_t>(a)]) {
                if (c == b || !present(a, c) || present(b, c))
                    continue;
                if (!force(a, c))
                    return false;
            }
            // a->b forces c->b whenever cb is in this round's graph and ca is not
            for (VertexId c : neighbors_[static_cast<std::size_t>(b)]) {
                if (c == a || !present(c, b) || present(c, a))
                    continue;
                if (!force(c, b))
                    return false;
            }
        }
        return true;
    }

    VertexId n_;
    const AdjacencyMatrix& adj_;
    const std::vector<std::vector<VertexId>>& neighbors_;
    std::vector<std::uint32_t> round_;
    std::vector<std::uint8_t> forward_;
    std::uint32_t current_round_ = 0;
    std::deque<std::pair<VertexId, VertexId>> queue_;
};

/// Deterministic topological order (smallest vertex id first among sources).
inline std::optional<std::vector<VertexId>> topological_order(VertexId n,
                                                              const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(n));
    std::vector<VertexId> indegree(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : arcs) {
        out[static_cast<std::size_t>(a)].push_back(b);
        ++indegree[static_cast<std::size_t>(b)];
    }
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0)
            ready.push(v);
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const VertexId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (VertexId w : out[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(w)] == 0)
                ready.push(w);
    }
    if (static_cast<VertexId>(order.size()) != n)
        return std::nullopt; // cycle
    return order;
}

} // namespace detail

/// Attempts to build an umbrella-free ordering by transitively orienting the
/// complement and topologically sorting the result. Returns nothing when the
/// graph admits none. Any ordering returned has passed verify_umbrella_free.
inline std::optional<Ordering> compute_cocomp_ordering(const Graph& g) {
    const VertexId n = g.vertex_count();
    if (n == 0)
        return Ordering::identity(0);
    AdjacencyMatrix adj(g);
    std::vector<std::vector<VertexId>> comp_neighbors(static_cast<std::size_t>(n));
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && !adj(u, v))
                comp_neighbors[static_cast<std::size_t>(u)].push_back(v);

    detail::TransitiveOrienter orienter(n, adj, comp_neighbors);
    auto arcs = orienter.run();
    if (!arcs)
        return std::nullopt;
    auto order = detail::topological_order(n, *arcs);
    if (!order) {
        assert(false && "consistent forcing produced a cyclic orientation");
        return std::nullopt;
    }
    Ordering sigma = Ordering::from_permutation(std::move(*order));
    if (!verify_umbrella_free(g, sigma).ok) {
        assert(false && "transitive orientation produced an umbrella");
        return std::nullopt;
    }
    return sigma;
}

} // namespace orderedmim
