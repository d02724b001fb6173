#pragma once

#include "orderedmim/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace orderedmim {

enum class PairRequirement : std::uint8_t { Edge, NonEdge };

/// Ordered three-vertex template. For a triple x < y < z of positions, the
/// requirements apply to the pairs (x,y), (x,z), (y,z) in that order. All
/// three pairs are fully specified; there is no don't-care state.
struct Pattern {
    PairRequirement xy;
    PairRequirement xz;
    PairRequirement yz;
    std::uint8_t id; // stable 1-based id used in reports

    bool operator==(const Pattern&) const = default;
};

// The five templates, numbered as reported by the CLI. Pattern 4 is the
// umbrella (xz present, both inner pairs absent); pattern 5 is a stable
// triple and therefore independent of the ordering.
inline constexpr Pattern kPattern1{PairRequirement::NonEdge, PairRequirement::Edge, PairRequirement::Edge, 1};
inline constexpr Pattern kPattern2{PairRequirement::Edge, PairRequirement::NonEdge, PairRequirement::NonEdge, 2};
inline constexpr Pattern kPattern3{PairRequirement::NonEdge, PairRequirement::NonEdge, PairRequirement::Edge, 3};
inline constexpr Pattern kPattern4{PairRequirement::NonEdge, PairRequirement::Edge, PairRequirement::NonEdge, 4};
inline constexpr Pattern kPattern5{PairRequirement::NonEdge, PairRequirement::NonEdge, PairRequirement::NonEdge, 5};

inline constexpr Pattern kUmbrella = kPattern4;
inline constexpr Pattern kStableTriple = kPattern5;

inline constexpr std::array<Pattern, 5> kAllPatterns{kPattern1, kPattern2, kPattern3, kPattern4, kPattern5};

namespace detail {
inline constexpr std::array<Pattern, 1> kChordalPatterns{kPattern1};
inline constexpr std::array<Pattern, 2> kIntervalPatterns{kPattern1, kPattern4};
inline constexpr std::array<Pattern, 2> kSplitPatterns{kPattern1, kPattern3};
inline constexpr std::array<Pattern, 2> kThresholdPatterns{kPattern1, kPattern2};
inline constexpr std::array<Pattern, 1> kCocomparabilityPatterns{kPattern4};
} // namespace detail

/// Forbidden pattern set characterizing each class.
inline std::span<const Pattern> class_patterns(GraphClass c) {
    switch (c) {
    case GraphClass::Chordal: return detail::kChordalPatterns;
    case GraphClass::Interval: return detail::kIntervalPatterns;
    case GraphClass::Split: return detail::kSplitPatterns;
    case GraphClass::Threshold: return detail::kThresholdPatterns;
    case GraphClass::Cocomparability: return detail::kCocomparabilityPatterns;
    }
    throw std::invalid_argument("unsupported graph class");
}

/// Matched triple, listed in ordering positions: x precedes y precedes z.
struct PatternWitness {
    VertexId x;
    VertexId y;
    VertexId z;
    std::uint8_t pattern_id;

    bool operator==(const PatternWitness&) const = default;
};

struct OrderingCheck {
    bool ok = true;
    std::optional<PatternWitness> witness;
};

namespace detail {

inline void require_matching_ordering(const Graph& g, const Ordering& sigma) {
    if (sigma.size() != g.vertex_count())
        throw std::invalid_argument("ordering does not cover the graph's vertex set");
}

inline std::optional<PatternWitness> find_pattern_in(const AdjacencyMatrix& adj, const Ordering& sigma,
                                                     const Pattern& p) {
    const VertexId n = sigma.size();
    const auto& perm = sigma.permutation();
    const bool exy = p.xy == PairRequirement::Edge;
    const bool exz = p.xz == PairRequirement::Edge;
    const bool eyz = p.yz == PairRequirement::Edge;
    for (VertexId i = 0; i < n; ++i) {
        const VertexId x = perm[static_cast<std::size_t>(i)];
        for (VertexId j = i + 1; j < n; ++j) {
            const VertexId y = perm[static_cast<std::size_t>(j)];
            if (adj(x, y) != exy)
                continue;
            for (VertexId k = j + 1; k < n; ++k) {
                const VertexId z = perm[static_cast<std::size_t>(k)];
                if (adj(x, z) == exz && adj(y, z) == eyz)
                    return PatternWitness{x, y, z, p.id};
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Lexicographically smallest (by positions) triple matching p, if any.
inline std::optional<PatternWitness> find_pattern(const Graph& g, const Ordering& sigma, const Pattern& p) {
    detail::require_matching_ordering(g, sigma);
    AdjacencyMatrix adj(g);
    return detail::find_pattern_in(adj, sigma, p);
}

/// True iff sigma avoids every pattern in the set; otherwise reports the
/// first witness in set order.
inline OrderingCheck verify_pattern_free(const Graph& g, const Ordering& sigma, std::span<const Pattern> patterns) {
    detail::require_matching_ordering(g, sigma);
    AdjacencyMatrix adj(g);
    for (const Pattern& p : patterns)
        if (auto w = detail::find_pattern_in(adj, sigma, p))
            return {false, w};
    return {true, std::nullopt};
}

inline OrderingCheck verify_class_ordering(const Graph& g, const Ordering& sigma, GraphClass c) {
    return verify_pattern_free(g, sigma, class_patterns(c));
}

namespace detail {

class OrderingSearch {
public:
    OrderingSearch(const Graph& g, std::span<const Pattern> patterns)
        : adj_(g), patterns_(patterns.begin(), patterns.end()), n_(g.vertex_count()) {
        prefix_.reserve(static_cast<std::size_t>(n_));
        used_.assign(static_cast<std::size_t>(n_), false);
    }

    std::optional<std::vector<VertexId>> run() {
        if (extend())
            return prefix_;
        return std::nullopt;
    }

private:
    // A violating triple always involves the newest position, so prefixes are
    // checked incrementally and pruned as soon as one appears.
    bool placement_ok() const {
        const VertexId t = static_cast<VertexId>(prefix_.size()) - 1;
        const VertexId z = prefix_[static_cast<std::size_t>(t)];
        for (VertexId i = 0; i < t; ++i) {
            const VertexId x = prefix_[static_cast<std::size_t>(i)];
            const bool xz = adj_(x, z);
            for (VertexId j = i + 1; j < t; ++j) {
                const VertexId y = prefix_[static_cast<std::size_t>(j)];
                const bool yz = adj_(y, z);
                const bool xy = adj_(x, y);
                for (const Pattern& p : patterns_)
                    if (xy == (p.xy == PairRequirement::Edge) && xz == (p.xz == PairRequirement::Edge) &&
                        yz == (p.yz == PairRequirement::Edge))
                        return false;
            }
        }
        return true;
    }

    bool extend() {
        if (static_cast<VertexId>(prefix_.size()) == n_)
            return true;
        for (VertexId v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)])
                continue;
            used_[static_cast<std::size_t>(v)] = true;
            prefix_.push_back(v);
            if (placement_ok() && extend())
                return true;
            prefix_.pop_back();
            used_[static_cast<std::size_t>(v)] = false;
        }
        return false;
    }

    AdjacencyMatrix adj_;
    std::vector<Pattern> patterns_;
    VertexId n_;
    std::vector<VertexId> prefix_;
    std::vector<bool> used_;
};

} // namespace detail

/// Exhaustive search over permutations (with prefix pruning) for an ordering
/// avoiding every pattern in the set. Intended for small graphs only.
inline std::optional<Ordering> exists_pattern_free_ordering(const Graph& g, std::span<const Pattern> patterns,
                                                            VertexId max_n = 9) {
    if (g.vertex_count() > max_n)
        throw std::invalid_argument("exists_pattern_free_ordering: graph above the size bound");
    detail::OrderingSearch search(g, patterns);
    if (auto perm = search.run())
        return Ordering::from_permutation(std::move(*perm));
    return std::nullopt;
}

} // namespace orderedmim
