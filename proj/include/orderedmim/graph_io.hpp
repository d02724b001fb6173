#pragma once

#include "orderedmim/graph.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace orderedmim {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal form that parses back to exactly the same double.
inline std::string format_double(double x) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        if (std::strtod(buf, nullptr) == x)
            break;
    }
    return buf;
}

namespace detail {

inline bool is_skippable_line(const std::string& line) {
    for (char c : line) {
        if (c == '#')
            return true;
        if (!std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

/// Splits text into (line number, content) pairs, dropping blanks and
/// '#' comments.
inline std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    int lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++lineno;
        std::string line(text.substr(start, end - start));
        if (!is_skippable_line(line))
            out.emplace_back(lineno, std::move(line));
        start = end + 1;
        if (end == text.size())
            break;
    }
    return out;
}

inline long long parse_int_token(const std::string& tok, int lineno, const char* what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + tok + "'");
    return v;
}

inline double parse_double_token(const std::string& tok, int lineno, const char* what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + tok + "'");
    return v;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t)
        toks.push_back(t);
    return toks;
}

} // namespace detail

/// Graph file: header line "n m", then m lines "u v" or "u v w". Blank lines
/// and '#' comments are ignored anywhere.
inline Graph parse_graph(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError("graph file: missing header line");

    auto header = detail::tokens_of(lines[0].second);
    if (header.size() != 2)
        throw ParseError("line " + std::to_string(lines[0].first) + ": header must be 'n m'");
    const long long n = detail::parse_int_token(header[0], lines[0].first, "vertex count");
    const long long m = detail::parse_int_token(header[1], lines[0].first, "edge count");
    if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(lines[0].first) + ": negative count in header");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError("graph file: expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int lineno = lines[i].first;
        auto toks = detail::tokens_of(lines[i].second);
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError("line " + std::to_string(lineno) + ": edge line must be 'u v' or 'u v w'");
        const long long u = detail::parse_int_token(toks[0], lineno, "vertex id");
        const long long v = detail::parse_int_token(toks[1], lineno, "vertex id");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range 0.." +
                             std::to_string(n - 1));
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop");
        double w = 1.0;
        if (toks.size() == 3) {
            w = detail::parse_double_token(toks[2], lineno, "weight");
            if (!(w > 0.0) || !std::isfinite(w))
                throw ParseError("line " + std::to_string(lineno) + ": weight must be positive");
        }
        const auto lo = static_cast<VertexId>(std::min(u, v));
        const auto hi = static_cast<VertexId>(std::max(u, v));
        if (!seen.insert({lo, hi}).second)
            throw ParseError("line " + std::to_string(lineno) + ": duplicate edge");
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
    }
    return Graph::from_edges(static_cast<VertexId>(n), std::move(edges));
}

/// Canonical form: weight column only for non-unit weights, shortest
/// round-trip decimals, one trailing newline per line.
inline std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v);
        if (e.weight != 1.0) {
            out += " ";
            out += format_double(e.weight);
        }
        out += "\n";
    }
    return out;
}

/// Ordering file: n whitespace-separated vertex ids.
inline Ordering parse_ordering(std::string_view text, VertexId n) {
    std::vector<VertexId> perm;
    perm.reserve(static_cast<std::size_t>(n));
    for (const auto& [lineno, line] : detail::content_lines(text))
        for (const auto& tok : detail::tokens_of(line)) {
            const long long v = detail::parse_int_token(tok, lineno, "vertex id");
            if (v < 0 || v >= n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
            perm.push_back(static_cast<VertexId>(v));
        }
    if (static_cast<VertexId>(perm.size()) != n)
        throw ParseError("ordering file: expected " + std::to_string(n) + " vertex ids, found " +
                         std::to_string(perm.size()));
    try {
        return Ordering::from_permutation(std::move(perm));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("ordering file: ") + e.what());
    }
}

inline std::string serialize_ordering(const Ordering& sigma) {
    std::string out;
    for (VertexId pos = 0; pos < sigma.size(); ++pos) {
        if (pos)
            out += " ";
        out += std::to_string(sigma.vertex_at(pos));
    }
    out += "\n";
    return out;
}

/// Vertex weight file: n lines "v w", each vertex exactly once.
inline std::vector<double> parse_vertex_weights(std::string_view text, VertexId n) {
    std::vector<double> weights(static_cast<std::size_t>(n), 0.0);
    std::vector<bool> set(static_cast<std::size_t>(n), false);
    for (const auto& [lineno, line] : detail::content_lines(text)) {
        auto toks = detail::tokens_of(line);
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": weight line must be 'v w'");
        const long long v = detail::parse_int_token(toks[0], lineno, "vertex id");
        if (v < 0 || v >= n)
            throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
        if (set[static_cast<std::size_t>(v)])
            throw ParseError("line " + std::to_string(lineno) + ": duplicate vertex weight");
        const double w = detail::parse_double_token(toks[1], lineno, "weight");
        if (!(w > 0.0) || !std::isfinite(w))
            throw ParseError("line " + std::to_string(lineno) + ": weight must be positive");
        weights[static_cast<std::size_t>(v)] = w;
        set[static_cast<std::size_t>(v)] = true;
    }
    for (VertexId v = 0; v < n; ++v)
        if (!set[static_cast<std::size_t>(v)])
            throw ParseError("weight file: missing weight for vertex " + std::to_string(v));
    return weights;
}

inline std::string serialize_vertex_weights(const std::vector<double>& weights) {
    std::string out;
    for (std::size_t v = 0; v < weights.size(); ++v)
        out += std::to_string(v) + " " + format_double(weights[v]) + "\n";
    return out;
}

} // namespace orderedmim
