#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orderedmim {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Undirected edge with a strictly positive weight (1.0 when the input
/// carries no weight column).
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double weight = 1.0;

    bool operator==(const Edge&) const = default;
};

/// Simple undirected graph. Vertex ids are dense 0..n-1, edge ids are dense
/// 0..m-1 in insertion (file) order, and per-vertex adjacency is kept sorted
/// by neighbour id. Immutable once built; weight setters are construction
/// helpers and must not race with readers.
class Graph {
public:
    struct Incidence {
        VertexId to;
        EdgeId via;

        bool operator==(const Incidence&) const = default;
    };

    Graph() = default;

    static Graph from_edges(VertexId n, std::vector<Edge> edges) {
        if (n < 0)
            throw std::invalid_argument("graph: negative vertex count");
        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.adjacency_.assign(static_cast<std::size_t>(n), {});
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edges_[static_cast<std::size_t>(e)];
            if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
                throw std::invalid_argument("graph: endpoint out of range");
            if (ed.u == ed.v)
                throw std::invalid_argument("graph: self-loop");
            if (!(ed.weight > 0.0) || !std::isfinite(ed.weight))
                throw std::invalid_argument("graph: edge weight must be positive and finite");
            g.adjacency_[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
            g.adjacency_[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
        }
        for (auto& inc : g.adjacency_) {
            std::sort(inc.begin(), inc.end(),
                      [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
            for (std::size_t i = 1; i < inc.size(); ++i)
                if (inc[i].to == inc[i - 1].to)
                    throw std::invalid_argument("graph: duplicate edge");
        }
        return g;
    }

    static Graph from_edges(VertexId n, std::vector<Edge> edges, std::vector<double> vertex_weights) {
        Graph g = from_edges(n, std::move(edges));
        g.set_vertex_weights(std::move(vertex_weights));
        return g;
    }

    VertexId vertex_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }

    const Edge& edge(EdgeId e) const {
        if (e < 0 || e >= edge_count())
            throw std::invalid_argument("graph: edge id out of range");
        return edges_[static_cast<std::size_t>(e)];
    }

    std::span<const Incidence> incident(VertexId v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }

    VertexId degree(VertexId v) const {
        return static_cast<VertexId>(incident(v).size());
    }

    VertexId max_degree() const {
        VertexId d = 0;
        for (VertexId v = 0; v < n_; ++v)
            d = std::max(d, static_cast<VertexId>(adjacency_[static_cast<std::size_t>(v)].size()));
        return d;
    }

    bool has_edge(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }

    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& inc = adjacency_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(inc.begin(), inc.end(), v,
                                   [](const Incidence& a, VertexId b) { return a.to < b; });
        if (it != inc.end() && it->to == v)
            return it->via;
        return std::nullopt;
    }

    bool has_vertex_weights() const { return vertex_weights_.has_value(); }

    /// 1.0 for every vertex unless explicit weights were attached.
    double vertex_weight(VertexId v) const {
        check_vertex(v);
        return vertex_weights_ ? (*vertex_weights_)[static_cast<std::size_t>(v)] : 1.0;
    }

    const std::optional<std::vector<double>>& vertex_weights() const { return vertex_weights_; }

    void set_vertex_weights(std::vector<double> w) {
        if (static_cast<VertexId>(w.size()) != n_)
            throw std::invalid_argument("graph: vertex weight count mismatch");
        for (double x : w)
            if (!(x > 0.0) || !std::isfinite(x))
                throw std::invalid_argument("graph: vertex weight must be positive and finite");
        vertex_weights_ = std::move(w);
    }

    void clear_vertex_weights() { vertex_weights_.reset(); }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("graph: vertex id out of range");
    }

    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::optional<std::vector<double>> vertex_weights_;
};

/// Flat bit-matrix snapshot of a graph's adjacency, for O(1) pair queries in
/// triple scans and brute-force searches.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(const Graph& g) : n_(g.vertex_count()) {
        const std::size_t words = (static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) + 63) / 64;
        bits_.assign(words, 0);
        for (const Edge& e : g.edges()) {
            set(e.u, e.v);
            set(e.v, e.u);
        }
    }

    bool operator()(VertexId u, VertexId v) const {
        const std::size_t i = static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }

    VertexId size() const { return n_; }

private:
    void set(VertexId u, VertexId v) {
        const std::size_t i = static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
        bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    VertexId n_;
    std::vector<std::uint64_t> bits_;
};

/// Permutation of a graph's vertices together with the inverse lookup.
class Ordering {
public:
    Ordering() = default;

    static Ordering identity(VertexId n) {
        std::vector<VertexId> perm(static_cast<std::size_t>(n));
        for (VertexId i = 0; i < n; ++i)
            perm[static_cast<std::size_t>(i)] = i;
        return from_permutation(std::move(perm));
    }

    static Ordering from_permutation(std::vector<VertexId> perm) {
        Ordering o;
        const VertexId n = static_cast<VertexId>(perm.size());
        o.inverse_.assign(static_cast<std::size_t>(n), -1);
        for (VertexId pos = 0; pos < n; ++pos) {
            const VertexId v = perm[static_cast<std::size_t>(pos)];
            if (v < 0 || v >= n || o.inverse_[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("ordering: not a permutation of 0..n-1");
            o.inverse_[static_cast<std::size_t>(v)] = pos;
        }
        o.perm_ = std::move(perm);
        return o;
    }

    VertexId size() const { return static_cast<VertexId>(perm_.size()); }

    VertexId vertex_at(VertexId pos) const { return perm_[static_cast<std::size_t>(pos)]; }

    VertexId position_of(VertexId v) const { return inverse_[static_cast<std::size_t>(v)]; }

    bool precedes(VertexId u, VertexId v) const { return position_of(u) < position_of(v); }

    const std::vector<VertexId>& permutation() const { return perm_; }

    bool operator==(const Ordering&) const = default;

private:
    std::vector<VertexId> perm_;
    std::vector<VertexId> inverse_;
};

/// Permutation of a graph's edges (the vertices of the square of the line
/// graph). Each edge carries its endpoints oriented by the source vertex
/// ordering: lo precedes hi.
class EdgeOrdering {
public:
    struct Oriented {
        VertexId lo;
        VertexId hi;
    };

    EdgeOrdering() = default;

    static EdgeOrdering from_permutation(const Graph& g, const Ordering& sigma, std::vector<EdgeId> perm) {
        if (sigma.size() != g.vertex_count())
            throw std::invalid_argument("edge ordering: vertex ordering does not match graph");
        EdgeOrdering o;
        const EdgeId m = static_cast<EdgeId>(perm.size());
        if (m != g.edge_count())
            throw std::invalid_argument("edge ordering: not a permutation of the edge set");
        o.inverse_.assign(static_cast<std::size_t>(m), -1);
        for (EdgeId pos = 0; pos < m; ++pos) {
            const EdgeId e = perm[static_cast<std::size_t>(pos)];
            if (e < 0 || e >= m || o.inverse_[static_cast<std::size_t>(e)] != -1)
                throw std::invalid_argument("edge ordering: not a permutation of the edge set");
            o.inverse_[static_cast<std::size_t>(e)] = pos;
        }
        o.perm_ = std::move(perm);
        o.oriented_.resize(static_cast<std::size_t>(m));
        for (EdgeId e = 0; e < m; ++e) {
            const Edge& ed = g.edge(e);
            Oriented ori{ed.u, ed.v};
            if (sigma.precedes(ori.hi, ori.lo))
                std::swap(ori.lo, ori.hi);
            o.oriented_[static_cast<std::size_t>(e)] = ori;
        }
        return o;
    }

    EdgeId size() const { return static_cast<EdgeId>(perm_.size()); }

    EdgeId edge_at(EdgeId pos) const { return perm_[static_cast<std::size_t>(pos)]; }

    EdgeId position_of(EdgeId e) const { return inverse_[static_cast<std::size_t>(e)]; }

    Oriented oriented(EdgeId e) const { return oriented_[static_cast<std::size_t>(e)]; }

    const std::vector<EdgeId>& permutation() const { return perm_; }

private:
    std::vector<EdgeId> perm_;
    std::vector<EdgeId> inverse_;
    std::vector<Oriented> oriented_;
};

enum class GraphClass {
    Chordal,
    Interval,
    Split,
    Threshold,
    Cocomparability,
};

inline std::string_view to_string(GraphClass c) {
    switch (c) {
    case GraphClass::Chordal: return "chordal";
    case GraphClass::Interval: return "interval";
    case GraphClass::Split: return "split";
    case GraphClass::Threshold: return "threshold";
    case GraphClass::Cocomparability: return "cocomparability";
    }
    throw std::invalid_argument("unsupported graph class");
}

inline GraphClass graph_class_from_string(std::string_view s) {
    if (s == "chordal") return GraphClass::Chordal;
    if (s == "interval") return GraphClass::Interval;
    if (s == "split") return GraphClass::Split;
    if (s == "threshold") return GraphClass::Threshold;
    if (s == "cocomparability") return GraphClass::Cocomparability;
    throw std::invalid_argument("unsupported graph class: " + std::string(s));
}

inline constexpr std::array<GraphClass, 5> kAllGraphClasses{
    GraphClass::Chordal, GraphClass::Interval, GraphClass::Split,
    GraphClass::Threshold, GraphClass::Cocomparability};

/// Complement on the same vertex set: uv is an edge iff it is not one in g.
/// All weights reset to 1.
inline Graph complement(const Graph& g) {
    const VertexId n = g.vertex_count();
    AdjacencyMatrix adj(g);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!adj(u, v))
                edges.push_back({u, v, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

} // namespace orderedmim
