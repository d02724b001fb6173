#pragma once

#include "orderedmim/counters.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace orderedmim {

/// Snapshot of the sweep's working list handed to an observer after each
/// iteration, for invariant auditing in tests.
struct ChainSweepState {
    std::span<const std::int32_t> next;
    std::span<const std::int32_t> prev;
    std::int32_t head;
    std::int32_t tail;
    std::span<const double> set_weight;
    std::span<const std::int32_t> predecessor;
};

struct ChainSweepResult {
    std::vector<double> set_weight;          // accumulated weight per element
    std::vector<std::int32_t> predecessor;   // chain link per element, -1 at the start
    std::int32_t last = -1;                  // heaviest element after the final iteration
    OpCounters ops;

    double best_weight() const { return last < 0 ? 0.0 : set_weight[static_cast<std::size_t>(last)]; }

    /// The chain ending at `last`, in ascending processing order.
    std::vector<std::int32_t> best_chain() const {
        std::vector<std::int32_t> chain;
        for (std::int32_t e = last; e >= 0; e = predecessor[static_cast<std::size_t>(e)])
            chain.push_back(e);
        std::reverse(chain.begin(), chain.end());
        return chain;
    }
};

struct NoOpSweepObserver {
    void operator()(std::int32_t, const ChainSweepState&) const {}
};

/// Greedy chained sweep over elements 0..count-1 in index order. At each
/// step the rightmost non-neighbour u in the working list tau extends the
/// chain (set_weight[i] = weights[i] + set_weight[u]); the element is then
/// inserted so tau stays sorted by nondecreasing accumulated weight. The
/// heaviest chain ends at the right end of tau.
///
/// Marker contract: mark(i) stamps the neighbourhood of element i and returns
/// the number of stamp writes; is_marked(j) answers "is j a neighbour of the
/// element marked last". Ties in tau are broken by keeping earlier-processed
/// elements to the left, which bounds the insertion walk by the neighbour
/// scan that preceded it.
template <class Marker, class Observer = NoOpSweepObserver>
ChainSweepResult chain_sweep(std::span<const double> weights, Marker&& marker, Observer&& observe = {}) {
    const auto count = static_cast<std::int32_t>(weights.size());
    ChainSweepResult r;
    r.set_weight.assign(static_cast<std::size_t>(count), 0.0);
    r.predecessor.assign(static_cast<std::size_t>(count), -1);
    std::vector<std::int32_t> next(static_cast<std::size_t>(count), -1);
    std::vector<std::int32_t> prev(static_cast<std::size_t>(count), -1);
    std::int32_t head = -1, tail = -1;

    for (std::int32_t i = 0; i < count; ++i) {
        ++r.ops.iterations;
        r.ops.stamp_writes += marker.mark(i);

        std::int32_t u = tail;
        while (u != -1 && marker.is_marked(u)) {
            u = prev[static_cast<std::size_t>(u)];
            ++r.ops.scan_steps;
        }

        double w = weights[static_cast<std::size_t>(i)];
        if (u != -1) {
            w += r.set_weight[static_cast<std::size_t>(u)];
            r.predecessor[static_cast<std::size_t>(i)] = u;
        }
        r.set_weight[static_cast<std::size_t>(i)] = w;

        // insert before the first strictly heavier element, scanning right
        // from u; everything passed here was stamped by the scan above
        std::int32_t at = (u != -1) ? next[static_cast<std::size_t>(u)] : head;
        while (at != -1 && r.set_weight[static_cast<std::size_t>(at)] <= w) {
            at = next[static_cast<std::size_t>(at)];
            ++r.ops.insert_steps;
        }
        if (at == -1) { // append at tail
            prev[static_cast<std::size_t>(i)] = tail;
            next[static_cast<std::size_t>(i)] = -1;
            if (tail != -1)
                next[static_cast<std::size_t>(tail)] = i;
            else
                head = i;
            tail = i;
        } else {
            const std::int32_t before = prev[static_cast<std::size_t>(at)];
            prev[static_cast<std::size_t>(i)] = before;
            next[static_cast<std::size_t>(i)] = at;
            prev[static_cast<std::size_t>(at)] = i;
            if (before != -1)
                next[static_cast<std::size_t>(before)] = i;
            else
                head = i;
        }
        observe(i, ChainSweepState{next, prev, head, tail, r.set_weight, r.predecessor});
    }
    r.last = tail;
    return r;
}

} // namespace orderedmim
