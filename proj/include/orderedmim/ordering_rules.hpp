#pragma once

#include "orderedmim/counters.hpp"
#include "orderedmim/graph.hpp"
#include "orderedmim/graph_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orderedmim {

/// Lexicographic edge ordering induced by a vertex ordering: edges sorted by
/// (position of earlier endpoint, position of later endpoint).
///
/// Built by a two-pass linear scan rather than a comparison sort: a bucket
/// pass leaves every adjacency list sorted by position, then a sweep over the
/// ordering appends each edge at its earlier endpoint. Runs in O(m + n).
inline EdgeOrdering lex_edge_order(const Graph& g, const Ordering& sigma, OpCounters* ops = nullptr) {
    if (sigma.size() != g.vertex_count())
        throw std::invalid_argument("lex_edge_order: ordering does not cover the graph's vertex set");
    const VertexId n = g.vertex_count();
    OpCounters local;
    OpCounters& c = ops ? *ops : local;

    // after this pass, by_position[v] lists v's neighbours in sigma order
    std::vector<std::vector<Graph::Incidence>> by_position(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v)
        by_position[static_cast<std::size_t>(v)].reserve(g.incident(v).size());
    for (VertexId pos = 0; pos < n; ++pos) {
        ++c.iterations;
        const VertexId w = sigma.vertex_at(pos);
        for (const auto& inc : g.incident(w)) {
            by_position[static_cast<std::size_t>(inc.to)].push_back({w, inc.via});
            ++c.appends;
        }
    }

    std::vector<EdgeId> perm;
    perm.reserve(static_cast<std::size_t>(g.edge_count()));
    for (VertexId pos = 0; pos < n; ++pos) {
        ++c.iterations;
        const VertexId v = sigma.vertex_at(pos);
        for (const auto& inc : by_position[static_cast<std::size_t>(v)]) {
            ++c.scan_steps;
            if (sigma.position_of(inc.to) > pos) {
                perm.push_back(inc.via);
                ++c.appends;
            }
        }
    }
    return EdgeOrdering::from_permutation(g, sigma, std::move(perm));
}

enum class DominationRelation { Less, Greater, Incomparable, Equal };

/// Domination partial order on edges: one edge precedes another when both of
/// its endpoints are no later in the vertex ordering. Endpoints may be given
/// in either orientation.
inline DominationRelation domination_compare(const Ordering& sigma, std::pair<VertexId, VertexId> e,
                                             std::pair<VertexId, VertexId> f) {
    auto normalize = [&sigma](std::pair<VertexId, VertexId> p) {
        if (sigma.precedes(p.second, p.first))
            std::swap(p.first, p.second);
        return p;
    };
    e = normalize(e);
    f = normalize(f);
    if (e == f)
        return DominationRelation::Equal;
    const VertexId elo = sigma.position_of(e.first), ehi = sigma.position_of(e.second);
    const VertexId flo = sigma.position_of(f.first), fhi = sigma.position_of(f.second);
    if (elo <= flo && ehi <= fhi)
        return DominationRelation::Less;
    if (flo <= elo && fhi <= ehi)
        return DominationRelation::Greater;
    return DominationRelation::Incomparable;
}

/// A linear extension of the domination order. The lexicographic ordering is
/// one: if both endpoints of e are no later than f's, e sorts first. Fixing
/// this particular extension keeps downstream results deterministic.
inline EdgeOrdering domination_edge_order(const Graph& g, const Ordering& sigma, OpCounters* ops = nullptr) {
    return lex_edge_order(g, sigma, ops);
}

/// One line of edge ids, or (with endpoints=true) one "u v" line per edge in
/// ordering position, endpoints oriented earlier-first.
inline std::string serialize_edge_ordering(const EdgeOrdering& pi, bool endpoints = false) {
    std::string out;
    if (!endpoints) {
        for (EdgeId pos = 0; pos < pi.size(); ++pos) {
            if (pos)
                out += " ";
            out += std::to_string(pi.edge_at(pos));
        }
        out += "\n";
        return out;
    }
    for (EdgeId pos = 0; pos < pi.size(); ++pos) {
        const auto ori = pi.oriented(pi.edge_at(pos));
        out += std::to_string(ori.lo) + " " + std::to_string(ori.hi) + "\n";
    }
    return out;
}

} // namespace orderedmim
