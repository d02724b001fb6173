#pragma once

#include "orderedmim/graph.hpp"

#include <stdexcept>
#include <vector>

namespace orderedmim {

/// True iff the two edges span four distinct vertices and no edge of g joins
/// an endpoint of one to an endpoint of the other, i.e. they induce a 2K2.
inline bool is_2k2(const Graph& g, EdgeId ei, EdgeId ej) {
    if (ei == ej)
        throw std::invalid_argument("is_2k2: edge ids must be distinct");
    const Edge& a = g.edge(ei);
    const Edge& b = g.edge(ej);
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        return false;
    return !g.has_edge(a.u, b.u) && !g.has_edge(a.u, b.v) && !g.has_edge(a.v, b.u) && !g.has_edge(a.v, b.v);
}

/// Graph on g's edge ids; two are adjacent iff the edges share an endpoint.
/// Vertex weights are the corresponding edge weights.
inline Graph line_graph(const Graph& g) {
    const EdgeId m = g.edge_count();
    std::vector<Edge> edges;
    // Two distinct edges of a simple graph share at most one endpoint, so
    // collecting incident pairs per vertex emits each line edge once.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                edges.push_back({inc[i].via, inc[j].via, 1.0});
    }
    std::vector<double> weights(static_cast<std::size_t>(m));
    for (EdgeId e = 0; e < m; ++e)
        weights[static_cast<std::size_t>(e)] = g.edge(e).weight;
    return Graph::from_edges(m, std::move(edges), std::move(weights));
}

/// Same vertex set; adjacency iff distance at most two in g. Vertex weights
/// are preserved; edge weights reset to 1.
inline Graph square(const Graph& g) {
    const VertexId n = g.vertex_count();
    std::vector<Edge> edges;
    std::vector<VertexId> stamp(static_cast<std::size_t>(n), -1);
    for (VertexId u = 0; u < n; ++u) {
        for (const auto& step1 : g.incident(u)) {
            if (step1.to > u && stamp[static_cast<std::size_t>(step1.to)] != u) {
                stamp[static_cast<std::size_t>(step1.to)] = u;
                edges.push_back({u, step1.to, 1.0});
            }
            for (const auto& step2 : g.incident(step1.to)) {
                const VertexId w = step2.to;
                if (w > u && stamp[static_cast<std::size_t>(w)] != u) {
                    stamp[static_cast<std::size_t>(w)] = u;
                    edges.push_back({u, w, 1.0});
                }
            }
        }
    }
    Graph sq = Graph::from_edges(n, std::move(edges));
    if (g.has_vertex_weights())
        sq.set_vertex_weights(*g.vertex_weights());
    return sq;
}

/// Square of the line graph, built directly from the 2K2 predicate without
/// materializing the (possibly much denser) line graph. Vertices are g's
/// edge ids, weighted by edge weight.
inline Graph line_square(const Graph& g) {
    const EdgeId m = g.edge_count();
    std::vector<Edge> edges;
    for (EdgeId i = 0; i < m; ++i)
        for (EdgeId j = i + 1; j < m; ++j)
            if (!is_2k2(g, i, j))
                edges.push_back({i, j, 1.0});
    std::vector<double> weights(static_cast<std::size_t>(m));
    for (EdgeId e = 0; e < m; ++e)
        weights[static_cast<std::size_t>(e)] = g.edge(e).weight;
    return Graph::from_edges(m, std::move(edges), std::move(weights));
}

} // namespace orderedmim
