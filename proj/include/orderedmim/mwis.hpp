#pragma once

#include "orderedmim/chain_sweep.hpp"
#include "orderedmim/cocomp.hpp"
#include "orderedmim/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace orderedmim {

struct IndependentSetSolution {
    double weight = 0.0;
    std::vector<VertexId> vertices;                 // ascending ordering position
    std::vector<double> set_weights;                // accumulated weight per processed position
    std::vector<std::int32_t> predecessor_position; // chain link per position, -1 at chain start
    OpCounters ops;
};

namespace detail {

/// Iteration-keyed stamp array over vertex ids; never cleared between
/// iterations, so a reset is one counter bump.
class VertexNeighborMarker {
public:
    VertexNeighborMarker(const Graph& g, const Ordering& sigma)
        : g_(g), sigma_(sigma), stamp_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    std::uint64_t mark(std::int32_t pos) {
        current_ = static_cast<std::uint32_t>(pos) + 1;
        const VertexId v = sigma_.vertex_at(pos);
        const auto inc = g_.incident(v);
        for (const auto& n : inc)
            stamp_[static_cast<std::size_t>(n.to)] = current_;
        return inc.size();
    }

    bool is_marked(std::int32_t pos) const {
        return stamp_[static_cast<std::size_t>(sigma_.vertex_at(pos))] == current_;
    }

private:
    const Graph& g_;
    const Ordering& sigma_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t current_ = 0;
};

inline void require_positive_vertex_weights(const Graph& g) {
    if (!g.has_vertex_weights())
        return;
    for (double w : *g.vertex_weights())
        if (!(w > 0.0))
            throw std::invalid_argument("max_weight_independent_set: vertex weights must be positive");
}

template <class Observer>
IndependentSetSolution run_mwis_sweep(const Graph& g, const Ordering& sigma, Observer&& observe) {
    const VertexId n = g.vertex_count();
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (VertexId pos = 0; pos < n; ++pos)
        weights[static_cast<std::size_t>(pos)] = g.vertex_weight(sigma.vertex_at(pos));

    VertexNeighborMarker marker(g, sigma);
    ChainSweepResult sweep = chain_sweep(weights, marker, observe);

    IndependentSetSolution sol;
    sol.weight = sweep.best_weight();
    for (std::int32_t pos : sweep.best_chain())
        sol.vertices.push_back(sigma.vertex_at(pos));
    sol.set_weights = std::move(sweep.set_weight);
    sol.predecessor_position = std::move(sweep.predecessor);
    sol.ops = sweep.ops;
    return sol;
}

} // namespace detail

/// Maximum weight independent set given an umbrella-free ordering. The
/// ordering is verified up front and rejected if it has an umbrella; the
/// sweep itself runs in O(m + n).
template <class Observer = NoOpSweepObserver>
IndependentSetSolution max_weight_independent_set(const Graph& g, const Ordering& sigma, Observer&& observe = {}) {
    detail::require_positive_vertex_weights(g);
    if (!verify_umbrella_free(g, sigma).ok)
        throw std::invalid_argument("max_weight_independent_set: ordering has an umbrella");
    return detail::run_mwis_sweep(g, sigma, observe);
}

} // namespace orderedmim
