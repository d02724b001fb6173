#pragma once

#include "orderedmim/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orderedmim {

/// Thin wrapper over mt19937_64 with hand-rolled mappings, so identical
/// seeds give identical graphs on every platform (the standard library's
/// distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform in (0, 10]; strictly positive by construction.
    double positive_weight() { return 10.0 * (1.0 - uniform01()); }

private:
    std::mt19937_64 engine_;
};

inline std::vector<VertexId> random_permutation(VertexId n, Rng& rng) {
    std::vector<VertexId> p(static_cast<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i;
    for (VertexId i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return p;
}

/// Erdos-Renyi style graph, unit weights. No witness ordering.
inline Graph random_graph(VertexId n, double edge_probability, Rng& rng) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.bernoulli(edge_probability))
                edges.push_back({u, v, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

struct GeneratedInstance {
    Graph graph;
    Ordering witness;
};

namespace detail {

// Each builder works on construction indices 0..n-1 and returns the edge
// list plus the witness order over construction indices. Labels are shuffled
// afterwards so vertex ids and witness positions never coincide by accident.

struct Blueprint {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> witness; // construction indices in witness order
};

/// Intervals sorted by left endpoint; the left-endpoint order avoids both
/// forbidden interval patterns. Interval length scales with density.
inline Blueprint build_interval(VertexId n, double density, Rng& rng) {
    struct Iv {
        double left, right;
        VertexId idx;
    };
    std::vector<Iv> ivs;
    ivs.reserve(static_cast<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i) {
        const double left = rng.uniform01();
        const double len = density * rng.uniform01();
        ivs.push_back({left, left + len, i});
    }
    std::sort(ivs.begin(), ivs.end(), [](const Iv& a, const Iv& b) {
        return a.left < b.left || (a.left == b.left && a.idx < b.idx);
    });

    Blueprint bp;
    for (const Iv& iv : ivs)
        bp.witness.push_back(iv.idx);
    if (density <= 0.0)
        return bp;

    // plane sweep over endpoint events; on activation connect to the actives
    struct Event {
        double coord;
        bool closing;
        VertexId sorted_pos;
    };
    std::vector<Event> events;
    events.reserve(2 * static_cast<std::size_t>(n));
    for (VertexId p = 0; p < n; ++p) {
        events.push_back({ivs[static_cast<std::size_t>(p)].left, false, p});
        events.push_back({ivs[static_cast<std::size_t>(p)].right, true, p});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.coord != b.coord)
            return a.coord < b.coord;
        if (a.closing != b.closing)
            return !a.closing; // openings first: closed intervals touch
        return a.sorted_pos < b.sorted_pos;
    });
    std::vector<VertexId> active;
    for (const Event& ev : events) {
        const VertexId idx = ivs[static_cast<std::size_t>(ev.sorted_pos)].idx;
        if (ev.closing) {
            active.erase(std::find(active.begin(), active.end(), ev.sorted_pos));
        } else {
            for (VertexId other : active)
                bp.edges.emplace_back(ivs[static_cast<std::size_t>(other)].idx, idx);
            active.push_back(ev.sorted_pos);
        }
    }
    return bp;
}

/// Each new vertex attaches to a random clique of the current graph (a
/// random anchor plus a density-thinned subset of the anchor's own clique),
/// so earlier neighbourhoods stay cliques along the construction order.
inline Blueprint build_chordal(VertexId n, double density, Rng& rng) {
    Blueprint bp;
    std::vector<std::vector<VertexId>> base_clique(static_cast<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i) {
        bp.witness.push_back(i);
        if (i == 0 || density <= 0.0)
            continue;
        const VertexId anchor = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(i)));
        std::vector<VertexId> attach{anchor};
        for (VertexId w : base_clique[static_cast<std::size_t>(anchor)])
            if (rng.bernoulli(density))
                attach.push_back(w);
        for (VertexId w : attach)
            bp.edges.emplace_back(w, i);
        base_clique[static_cast<std::size_t>(i)] = std::move(attach);
    }
    return bp;
}

/// Clique side first, independent side second; cross edges thinned by
/// density. That order avoids both forbidden split patterns.
inline Blueprint build_split(VertexId n, double density, Rng& rng) {
    std::vector<bool> in_clique(static_cast<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i)
        in_clique[static_cast<std::size_t>(i)] = rng.bernoulli(0.5);
    Blueprint bp;
    for (VertexId i = 0; i < n; ++i)
        if (in_clique[static_cast<std::size_t>(i)])
            bp.witness.push_back(i);
    for (VertexId i = 0; i < n; ++i)
        if (!in_clique[static_cast<std::size_t>(i)])
            bp.witness.push_back(i);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            const bool cu = in_clique[static_cast<std::size_t>(u)];
            const bool cv = in_clique[static_cast<std::size_t>(v)];
            if (cu && cv)
                bp.edges.emplace_back(u, v);
            else if (cu != cv && rng.bernoulli(density))
                bp.edges.emplace_back(u, v);
        }
    return bp;
}

/// Dominating-or-isolated insertion sequence; the witness runs newest to
/// oldest, where a vertex adjacent to anything earlier dominates everything
/// earlier.
inline Blueprint build_threshold(VertexId n, double density, Rng& rng) {
    Blueprint bp;
    for (VertexId i = 1; i < n; ++i)
        if (rng.bernoulli(density))
            for (VertexId j = 0; j < i; ++j)
                bp.edges.emplace_back(j, i);
    for (VertexId i = n - 1; i >= 0; --i)
        bp.witness.push_back(i);
    return bp;
}

/// Complement of the comparability graph of a random partial order: a random
/// DAG on the construction order, transitively closed; edges are the
/// incomparable pairs, and the construction order itself is umbrella-free.
inline Blueprint build_cocomparability(VertexId n, double density, Rng& rng) {
    const double arc_probability = 1.0 - density;
    std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (rng.bernoulli(arc_probability))
                out[static_cast<std::size_t>(i)].push_back(j);

    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reach(static_cast<std::size_t>(n),
                                                  std::vector<std::uint64_t>(words, 0));
    for (VertexId i = n - 1; i >= 0; --i) {
        auto& row = reach[static_cast<std::size_t>(i)];
        for (VertexId j : out[static_cast<std::size_t>(i)]) {
            row[static_cast<std::size_t>(j) >> 6] |= std::uint64_t{1} << (j & 63);
            const auto& sub = reach[static_cast<std::size_t>(j)];
            for (std::size_t w = 0; w < words; ++w)
                row[w] |= sub[w];
        }
    }
    Blueprint bp;
    for (VertexId i = 0; i < n; ++i) {
        bp.witness.push_back(i);
        const auto& row = reach[static_cast<std::size_t>(i)];
        for (VertexId j = i + 1; j < n; ++j)
            if (!((row[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u))
                bp.edges.emplace_back(i, j);
    }
    return bp;
}

} // namespace detail

/// Random member of the class together with a witness ordering that is
/// pattern-free for the class by construction. Deterministic in the seed.
inline GeneratedInstance generate(GraphClass c, VertexId n, double density, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("generate: need at least one vertex");
    if (!(density >= 0.0) || !(density <= 1.0))
        throw std::invalid_argument("generate: density must lie in [0, 1]");
    Rng rng(seed);
    detail::Blueprint bp;
    switch (c) {
    case GraphClass::Chordal: bp = detail::build_chordal(n, density, rng); break;
    case GraphClass::Interval: bp = detail::build_interval(n, density, rng); break;
    case GraphClass::Split: bp = detail::build_split(n, density, rng); break;
    case GraphClass::Threshold: bp = detail::build_threshold(n, density, rng); break;
    case GraphClass::Cocomparability: bp = detail::build_cocomparability(n, density, rng); break;
    default: throw std::invalid_argument("generate: unsupported graph class");
    }

    const std::vector<VertexId> label = random_permutation(n, rng);
    std::vector<Edge> edges;
    edges.reserve(bp.edges.size());
    for (const auto& [u, v] : bp.edges)
        edges.push_back({label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)], 1.0});
    std::vector<VertexId> perm;
    perm.reserve(bp.witness.size());
    for (VertexId idx : bp.witness)
        perm.push_back(label[static_cast<std::size_t>(idx)]);

    return {Graph::from_edges(n, std::move(edges)), Ordering::from_permutation(std::move(perm))};
}

/// Copy with fresh edge weights drawn uniformly from (0, 10].
inline Graph with_random_edge_weights(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges)
        e.weight = rng.positive_weight();
    Graph out = Graph::from_edges(g.vertex_count(), std::move(edges));
    if (g.has_vertex_weights())
        out.set_vertex_weights(*g.vertex_weights());
    return out;
}

/// Copy with fresh vertex weights drawn uniformly from (0, 10].
inline Graph with_random_vertex_weights(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> weights(static_cast<std::size_t>(g.vertex_count()));
    for (double& w : weights)
        w = rng.positive_weight();
    Graph out = g;
    out.set_vertex_weights(std::move(weights));
    return out;
}

} // namespace orderedmim
