#pragma once

#include "orderedmim/cocomp.hpp"
#include "orderedmim/graph.hpp"
#include "orderedmim/line_square.hpp"
#include "orderedmim/mwim.hpp"
#include "orderedmim/mwis.hpp"
#include "orderedmim/ordering_rules.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exhaustive reference solvers. Deliberately naive and structurally
// independent of the fast sweeps they are used to check; they share only the
// pairwise 2K2 predicate, which is the ground-truth adjacency definition.

namespace orderedmim {

/// Size bound for the brute-force solvers, overridable through the
/// ORDEREDMIM_BRUTE_LIMIT environment variable.
inline int brute_force_limit(int fallback = 24) {
    if (const char* env = std::getenv("ORDEREDMIM_BRUTE_LIMIT")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("ORDEREDMIM_BRUTE_LIMIT is not an integer");
        }
    }
    return fallback;
}

struct BruteMatchingSolution {
    double weight = 0.0;
    std::vector<EdgeId> edges;
};

struct BruteSetSolution {
    double weight = 0.0;
    std::vector<VertexId> vertices;
};

namespace detail {

class MatchingEnumerator {
public:
    explicit MatchingEnumerator(const Graph& g) : g_(g), m_(g.edge_count()) {
        suffix_weight_.assign(static_cast<std::size_t>(m_) + 1, 0.0);
        for (EdgeId e = m_ - 1; e >= 0; --e)
            suffix_weight_[static_cast<std::size_t>(e)] =
                suffix_weight_[static_cast<std::size_t>(e) + 1] + g.edge(e).weight;
    }

    BruteMatchingSolution run() {
        recurse(0, 0.0);
        return best_;
    }

private:
    void recurse(EdgeId idx, double weight) {
        if (weight > best_.weight) {
            best_.weight = weight;
            best_.edges = chosen_;
        }
        if (idx == m_)
            return;
        if (weight + suffix_weight_[static_cast<std::size_t>(idx)] <= best_.weight)
            return;
        bool feasible = true;
        for (EdgeId c : chosen_)
            if (!is_2k2(g_, c, idx)) {
                feasible = false;
                break;
            }
        if (feasible) {
            chosen_.push_back(idx);
            recurse(idx + 1, weight + g_.edge(idx).weight);
            chosen_.pop_back();
        }
        recurse(idx + 1, weight);
    }

    const Graph& g_;
    EdgeId m_;
    std::vector<double> suffix_weight_;
    std::vector<EdgeId> chosen_;
    BruteMatchingSolution best_;
};

} // namespace detail

/// Exact maximum weight induced matching by include/exclude recursion with
/// pairwise 2K2 feasibility pruning.
inline BruteMatchingSolution brute_max_induced_matching(const Graph& g, std::optional<int> max_edges = {}) {
    const int limit = max_edges ? *max_edges : brute_force_limit();
    if (g.edge_count() > limit)
        throw std::invalid_argument("brute_max_induced_matching: edge count above the size bound");
    detail::MatchingEnumerator search(g);
    return search.run();
}

/// Exact maximum weight independent set by branch and bound over vertices.
inline BruteSetSolution brute_max_independent_set(const Graph& g, std::optional<int> max_vertices = {}) {
    const int limit = max_vertices ? *max_vertices : brute_force_limit();
    const VertexId n = g.vertex_count();
    if (n > limit)
        throw std::invalid_argument("brute_max_independent_set: vertex count above the size bound");

    std::vector<double> suffix(static_cast<std::size_t>(n) + 1, 0.0);
    for (VertexId v = n - 1; v >= 0; --v)
        suffix[static_cast<std::size_t>(v)] = suffix[static_cast<std::size_t>(v) + 1] + g.vertex_weight(v);

    AdjacencyMatrix adj(g);
    BruteSetSolution best;
    std::vector<VertexId> chosen;
    auto recurse = [&](auto&& self, VertexId idx, double weight) -> void {
        if (weight > best.weight) {
            best.weight = weight;
            best.vertices = chosen;
        }
        if (idx == n)
            return;
        if (weight + suffix[static_cast<std::size_t>(idx)] <= best.weight)
            return;
        bool feasible = true;
        for (VertexId c : chosen)
            if (adj(c, idx)) {
                feasible = false;
                break;
            }
        if (feasible) {
            chosen.push_back(idx);
            self(self, idx + 1, weight + g.vertex_weight(idx));
            chosen.pop_back();
        }
        self(self, idx + 1, weight);
    };
    recurse(recurse, 0, 0.0);
    return best;
}

/// The explicit counterpart of the implicit matching sweep: materializes the
/// square of the line graph, reinterprets the lexicographic edge ordering as
/// a vertex ordering of it, and runs the independent-set sweep there. Result
/// contract identical to max_weight_induced_matching.
inline InducedMatchingSolution induced_matching_via_explicit_square(const Graph& g, const Ordering& sigma,
                                                                    EdgeId max_edges = 2000) {
    if (g.edge_count() > max_edges)
        throw std::invalid_argument("induced_matching_via_explicit_square: edge count above the size bound");
    for (const Edge& e : g.edges())
        if (!(e.weight > 0.0))
            throw std::invalid_argument("induced_matching_via_explicit_square: edge weights must be positive");
    if (!verify_umbrella_free(g, sigma).ok)
        throw std::invalid_argument("induced_matching_via_explicit_square: ordering has an umbrella");

    InducedMatchingSolution sol;
    sol.order = lex_edge_order(g, sigma);
    const Graph sq = line_square(g);
    const Ordering sq_ordering = Ordering::from_permutation(sol.order.permutation());
    IndependentSetSolution inner = max_weight_independent_set(sq, sq_ordering);

    sol.weight = inner.weight;
    sol.edges = std::move(inner.vertices); // vertices of the square are edge ids
    sol.set_weights = std::move(inner.set_weights);
    sol.predecessor_position = std::move(inner.predecessor_position);
    sol.ops = inner.ops;
    return sol;
}

} // namespace orderedmim
