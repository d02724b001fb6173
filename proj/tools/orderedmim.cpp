// Command-line front end: generation, verification, ordering transfer,
// solving, oracle comparison, and benchmarking with JSON output.
//
// Exit codes: 0 success, 1 domain violation (failed verification, graph not
// cocomparability, mismatch against the oracle), 2 input or usage error.

#include "orderedmim/cocomp.hpp"
#include "orderedmim/generators.hpp"
#include "orderedmim/graph.hpp"
#include "orderedmim/graph_io.hpp"
#include "orderedmim/line_square.hpp"
#include "orderedmim/mwim.hpp"
#include "orderedmim/mwis.hpp"
#include "orderedmim/oracle.hpp"
#include "orderedmim/ordering_rules.hpp"
#include "orderedmim/patterns.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace orderedmim;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path);
    out << content;
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

Ordering load_ordering(const std::string& path, VertexId n) { return parse_ordering(read_file(path), n); }

/// Optional id -> label sidecar, lines "<id> <label>".
std::vector<std::string> load_names(const std::string& path, VertexId n) {
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v)
        names[static_cast<std::size_t>(v)] = std::to_string(v);
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long long id;
        std::string label;
        if (ls >> id >> label && id >= 0 && id < n)
            names[static_cast<std::size_t>(id)] = label;
    }
    return names;
}

void emit(const json& result, bool pretty) {
    std::cout << (pretty ? result.dump(2) : result.dump()) << "\n";
}

json witness_json(const std::optional<PatternWitness>& w) {
    if (!w)
        return nullptr;
    return json::array({w->x, w->y, w->z});
}

struct OrderingSource {
    Ordering sigma;
    bool computed = false;
};

/// Given ordering if present (verified umbrella-free), else a computed one.
/// nullopt means the graph is not cocomparability / the ordering is invalid.
std::optional<OrderingSource> resolve_cocomp_ordering(const Graph& g, const std::optional<std::string>& path,
                                                      std::string& error) {
    if (path) {
        Ordering sigma = load_ordering(*path, g.vertex_count());
        auto check = verify_umbrella_free(g, sigma);
        if (!check.ok) {
            const auto& w = *check.witness;
            error = "ordering has an umbrella over vertex " + std::to_string(w.y);
            return std::nullopt;
        }
        return OrderingSource{std::move(sigma), false};
    }
    auto sigma = compute_cocomp_ordering(g);
    if (!sigma) {
        error = "graph is not a cocomparability graph";
        return std::nullopt;
    }
    return OrderingSource{std::move(*sigma), true};
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- gen -----

struct GenArgs {
    std::string class_name;
    VertexId n = 8;
    double density = 0.5;
    std::uint64_t seed = 1;
    std::string graph_out;
    std::string ordering_out;
    bool edge_weights = false;
    std::string vertex_weights_out;
    bool pretty = false;
};

int run_gen(const GenArgs& a) {
    const GraphClass c = graph_class_from_string(a.class_name);
    GeneratedInstance inst = generate(c, a.n, a.density, a.seed);
    if (a.edge_weights)
        inst.graph = with_random_edge_weights(inst.graph, a.seed + 1);

    if (a.n <= 200) {
        auto check = verify_class_ordering(inst.graph, inst.witness, c);
        if (!check.ok) {
            std::cerr << "generator self-check failed\n";
            return kExitViolation;
        }
    }
    write_file(a.graph_out, serialize_graph(inst.graph));
    write_file(a.ordering_out, serialize_ordering(inst.witness));
    json result{{"class", a.class_name},
                {"n", inst.graph.vertex_count()},
                {"m", inst.graph.edge_count()},
                {"graph", a.graph_out},
                {"ordering", a.ordering_out}};
    if (!a.vertex_weights_out.empty()) {
        Rng rng(a.seed + 2);
        std::vector<double> weights(static_cast<std::size_t>(a.n));
        for (double& w : weights)
            w = rng.positive_weight();
        write_file(a.vertex_weights_out, serialize_vertex_weights(weights));
        result["vertex_weights"] = a.vertex_weights_out;
    }
    emit(result, a.pretty);
    return kExitOk;
}

// ------------------------------------------------------------- verify -----

struct VerifyArgs {
    std::string graph_path;
    std::string ordering_path;
    std::string class_name;
    bool pretty = false;
};

int run_verify(const VerifyArgs& a) {
    const GraphClass c = graph_class_from_string(a.class_name);
    const Graph g = load_graph(a.graph_path);
    const Ordering sigma = load_ordering(a.ordering_path, g.vertex_count());
    const OrderingCheck check = verify_class_ordering(g, sigma, c);
    json result{{"ok", check.ok},
                {"witness", witness_json(check.witness)},
                {"pattern", check.witness ? json(check.witness->pattern_id) : json(nullptr)}};
    emit(result, a.pretty);
    return check.ok ? kExitOk : kExitViolation;
}

// ----------------------------------------------------------- order-l2 -----

struct OrderL2Args {
    std::string graph_path;
    std::string ordering_path;
    std::string rule = "star";
    std::string out_path;
    bool endpoints = false;
    bool check = false;
    bool pretty = false;
};

int run_order_l2(const OrderL2Args& a) {
    const Graph g = load_graph(a.graph_path);
    const Ordering sigma = load_ordering(a.ordering_path, g.vertex_count());
    const EdgeOrdering pi =
        a.rule == "star" ? lex_edge_order(g, sigma) : domination_edge_order(g, sigma);

    const std::string serialized = serialize_edge_ordering(pi, a.endpoints);
    if (a.out_path.empty())
        std::cout << serialized;
    else
        write_file(a.out_path, serialized);

    json result{{"rule", a.rule}, {"edges", pi.size()}, {"written", a.out_path.empty() ? json(nullptr) : json(a.out_path)}};
    if (a.check) {
        constexpr EdgeId kCheckLimit = 2000;
        if (g.edge_count() > kCheckLimit) {
            std::cerr << "--check needs at most " << kCheckLimit << " edges\n";
            return kExitInputError;
        }
        const Graph sq = line_square(g);
        const Ordering pi_as_ordering = Ordering::from_permutation(pi.permutation());
        json transferred = json::array();
        bool ok = true;
        for (const Pattern& p : kAllPatterns) {
            if (find_pattern(g, sigma, p))
                continue; // the source ordering is not p-free; nothing to transfer
            const bool preserved = !find_pattern(sq, pi_as_ordering, p).has_value();
            transferred.push_back({{"pattern", p.id}, {"preserved", preserved}});
            ok = ok && preserved;
        }
        result["check"] = {{"ok", ok}, {"patterns", transferred}};
        if (!ok) {
            emit(result, a.pretty);
            return kExitViolation;
        }
    }
    emit(result, a.pretty);
    return kExitOk;
}

// ---------------------------------------------------------------- mim -----

struct SolveArgs {
    std::string graph_path;
    std::optional<std::string> ordering_path;
    std::optional<std::string> weights_path;
    std::optional<std::string> names_path;
    bool pretty = false;
};

int run_mim(const SolveArgs& a) {
    const Graph g = load_graph(a.graph_path);
    std::string error;
    auto source = resolve_cocomp_ordering(g, a.ordering_path, error);
    if (!source) {
        std::cerr << error << "\n";
        return kExitViolation;
    }
    const InducedMatchingSolution sol = max_weight_induced_matching(g, source->sigma);

    json matching = json::array();
    if (a.names_path) {
        const auto names = load_names(*a.names_path, g.vertex_count());
        for (EdgeId e : sol.edges) {
            const Edge& ed = g.edge(e);
            matching.push_back({names[static_cast<std::size_t>(ed.u)], names[static_cast<std::size_t>(ed.v)]});
        }
    } else {
        for (EdgeId e : sol.edges) {
            const Edge& ed = g.edge(e);
            matching.push_back({ed.u, ed.v});
        }
    }
    emit(json{{"weight", sol.weight},
              {"matching", matching},
              {"ordering_source", source->computed ? "computed" : "given"}},
         a.pretty);
    return kExitOk;
}

// --------------------------------------------------------------- mwis -----

int run_mwis(const SolveArgs& a) {
    Graph g = load_graph(a.graph_path);
    if (a.weights_path)
        g.set_vertex_weights(parse_vertex_weights(read_file(*a.weights_path), g.vertex_count()));
    std::string error;
    auto source = resolve_cocomp_ordering(g, a.ordering_path, error);
    if (!source) {
        std::cerr << error << "\n";
        return kExitViolation;
    }
    const IndependentSetSolution sol = max_weight_independent_set(g, source->sigma);
    emit(json{{"weight", sol.weight},
              {"vertices", sol.vertices},
              {"ordering_source", source->computed ? "computed" : "given"}},
         a.pretty);
    return kExitOk;
}

// ------------------------------------------------------------- oracle -----

struct OracleArgs {
    std::string graph_path;
    std::string problem = "mim";
    std::optional<std::string> weights_path;
    bool pretty = false;
};

int run_oracle(const OracleArgs& a) {
    Graph g = load_graph(a.graph_path);
    if (a.problem == "mim") {
        const BruteMatchingSolution sol = brute_max_induced_matching(g);
        json matching = json::array();
        for (EdgeId e : sol.edges) {
            const Edge& ed = g.edge(e);
            matching.push_back({ed.u, ed.v});
        }
        emit(json{{"weight", sol.weight}, {"matching", matching}}, a.pretty);
        return kExitOk;
    }
    if (a.weights_path)
        g.set_vertex_weights(parse_vertex_weights(read_file(*a.weights_path), g.vertex_count()));
    const BruteSetSolution sol = brute_max_independent_set(g);
    emit(json{{"weight", sol.weight}, {"vertices", sol.vertices}}, a.pretty);
    return kExitOk;
}

// ------------------------------------------------------------ compare -----

struct CompareArgs {
    std::string class_name;
    int trials = 100;
    VertexId n_min = 4;
    VertexId n_max = 10;
    std::uint64_t seed = 1;
    bool pretty = false;
};

bool weights_match(double fast, double brute) {
    return std::abs(fast - brute) <= 1e-9 * std::max(1.0, std::abs(brute));
}

int run_compare(const CompareArgs& a) {
    const GraphClass c = graph_class_from_string(a.class_name);
    if (a.trials < 0 || a.n_min < 1 || a.n_max < a.n_min)
        throw std::invalid_argument("compare: bad trial or size range");

    int witness_checked = 0, preservation_checked = 0, mim_checked = 0, mwis_checked = 0, failures = 0;
    json first_counterexample = nullptr;
    auto record_failure = [&](int trial, std::uint64_t seed, const std::string& stage, const std::string& detail) {
        ++failures;
        if (first_counterexample.is_null())
            first_counterexample = {{"trial", trial}, {"seed", seed}, {"stage", stage}, {"detail", detail}};
    };

    for (int t = 0; t < a.trials; ++t) {
        const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(t);
        Rng rng(seed * 0x9e3779b97f4a7c15ULL + 1);
        const VertexId n = a.n_min + static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(a.n_max - a.n_min) + 1));
        const double density = 0.1 + 0.8 * rng.uniform01();
        GeneratedInstance inst = generate(c, n, density, seed);

        ++witness_checked;
        if (auto check = verify_class_ordering(inst.graph, inst.witness, c); !check.ok) {
            record_failure(t, seed, "witness", "generated ordering is not pattern-free");
            continue;
        }

        if (inst.graph.edge_count() <= 300) {
            ++preservation_checked;
            const EdgeOrdering pi = lex_edge_order(inst.graph, inst.witness);
            const Graph sq = line_square(inst.graph);
            const Ordering pi_as_ordering = Ordering::from_permutation(pi.permutation());
            if (auto check = verify_class_ordering(sq, pi_as_ordering, c); !check.ok) {
                record_failure(t, seed, "preservation",
                               "pattern " + std::to_string(check.witness->pattern_id) +
                                   " appeared in the square of the line graph");
                continue;
            }
        }

        if (!verify_umbrella_free(inst.graph, inst.witness).ok)
            continue; // class ordering is not umbrella-free; the sweeps do not apply

        {
            ++mim_checked;
            const Graph weighted = with_random_edge_weights(inst.graph, seed + 1);
            const InducedMatchingSolution fast = max_weight_induced_matching(weighted, inst.witness);
            const BruteMatchingSolution brute =
                brute_max_induced_matching(weighted, weighted.edge_count());
            bool valid = true;
            for (std::size_t i = 0; i < fast.edges.size() && valid; ++i)
                for (std::size_t j = i + 1; j < fast.edges.size() && valid; ++j)
                    valid = is_2k2(weighted, fast.edges[i], fast.edges[j]);
            if (!valid || !weights_match(fast.weight, brute.weight)) {
                record_failure(t, seed, "induced-matching",
                               "fast " + format_double(fast.weight) + " vs oracle " + format_double(brute.weight));
                continue;
            }
        }
        {
            ++mwis_checked;
            const Graph weighted = with_random_vertex_weights(inst.graph, seed + 2);
            const IndependentSetSolution fast = max_weight_independent_set(weighted, inst.witness);
            const BruteSetSolution brute = brute_max_independent_set(weighted, weighted.vertex_count());
            if (!weights_match(fast.weight, brute.weight))
                record_failure(t, seed, "independent-set",
                               "fast " + format_double(fast.weight) + " vs oracle " + format_double(brute.weight));
        }
    }

    emit(json{{"class", a.class_name},
              {"trials", a.trials},
              {"witness_checked", witness_checked},
              {"preservation_checked", preservation_checked},
              {"mim_checked", mim_checked},
              {"mwis_checked", mwis_checked},
              {"failures", failures},
              {"first_counterexample", first_counterexample}},
         a.pretty);
    return failures == 0 ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------- bench -----

struct BenchArgs {
    std::string sizes = "100,1000,10000";
    std::uint64_t seed = 1;
    bool csv = false;
    bool pretty = false;
};

std::vector<VertexId> parse_sizes(const std::string& s) {
    std::vector<VertexId> sizes;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty())
            continue;
        sizes.push_back(static_cast<VertexId>(std::stoll(tok)));
    }
    return sizes;
}

int run_bench(const BenchArgs& a) {
    json rows = json::array();
    for (VertexId n : parse_sizes(a.sizes)) {
        const double density = std::min(1.0, 6.0 / static_cast<double>(n));
        GeneratedInstance inst = generate(GraphClass::Interval, n, density, a.seed);
        const EdgeId m = inst.graph.edge_count();

        auto push_row = [&](const char* algorithm, std::uint64_t ops, std::uint64_t budget, double wall_ms) {
            rows.push_back({{"algorithm", algorithm},
                            {"n", n},
                            {"m", m},
                            {"op_count", ops},
                            {"budget", budget},
                            {"ratio", budget ? static_cast<double>(ops) / static_cast<double>(budget) : 0.0},
                            {"wall_ms", wall_ms}});
        };

        {
            OpCounters ops;
            auto start = std::chrono::steady_clock::now();
            lex_edge_order(inst.graph, inst.witness, &ops);
            push_row("lex_edge_order", ops.total(), static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(n),
                     elapsed_ms(start));
        }
        {
            const Graph weighted = with_random_vertex_weights(inst.graph, a.seed + 1);
            auto start = std::chrono::steady_clock::now();
            const IndependentSetSolution sol = max_weight_independent_set(weighted, inst.witness);
            push_row("max_weight_independent_set", sol.ops.total(),
                     static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(n), elapsed_ms(start));
        }
        {
            const Graph weighted = with_random_edge_weights(inst.graph, a.seed + 2);
            auto start = std::chrono::steady_clock::now();
            const InducedMatchingSolution sol = max_weight_induced_matching(weighted, inst.witness);
            const double wall = elapsed_ms(start);
            const Deg2Profile prof = deg2_profile(weighted);
            push_row("max_weight_induced_matching", sol.ops.total(),
                     static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(prof.total_degree2), wall);
        }
    }

    if (a.csv) {
        std::cout << "algorithm,n,m,op_count,budget,ratio,wall_ms\n";
        for (const auto& row : rows)
            std::cout << row["algorithm"].get<std::string>() << "," << row["n"] << "," << row["m"] << ","
                      << row["op_count"] << "," << row["budget"] << "," << row["ratio"] << "," << row["wall_ms"]
                      << "\n";
    } else if (a.pretty) {
        std::printf("%-30s %8s %8s %12s %12s %7s %10s\n", "algorithm", "n", "m", "op_count", "budget", "ratio",
                    "wall_ms");
        for (const auto& row : rows)
            std::printf("%-30s %8lld %8lld %12llu %12llu %7.2f %10.3f\n", row["algorithm"].get<std::string>().c_str(),
                        row["n"].get<long long>(), row["m"].get<long long>(),
                        static_cast<unsigned long long>(row["op_count"].get<std::uint64_t>()),
                        static_cast<unsigned long long>(row["budget"].get<std::uint64_t>()),
                        row["ratio"].get<double>(), row["wall_ms"].get<double>());
    } else {
        emit(rows, false);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-ordering characterizations, square-of-line-graph ordering transfer, "
                 "and weighted independent set / induced matching solvers"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a class instance with a witness ordering");
    gen_cmd->add_option("--class", gen.class_name, "chordal|interval|split|threshold|cocomparability")->required();
    gen_cmd->add_option("--n", gen.n, "vertex count")->required();
    gen_cmd->add_option("--density", gen.density, "density parameter in [0,1]");
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--graph-out", gen.graph_out, "graph file to write")->required();
    gen_cmd->add_option("--ordering-out", gen.ordering_out, "ordering file to write")->required();
    gen_cmd->add_flag("--edge-weights", gen.edge_weights, "draw edge weights from (0,10]");
    gen_cmd->add_option("--vertex-weights-out", gen.vertex_weights_out, "also write a random vertex weight file");
    gen_cmd->add_flag("--pretty", gen.pretty, "indented output");
    gen_cmd->add_flag("--json", "machine-readable output (the default)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "check an ordering against a class's forbidden patterns");
    verify_cmd->add_option("--graph", verify.graph_path, "graph file")->required();
    verify_cmd->add_option("--ordering", verify.ordering_path, "ordering file")->required();
    verify_cmd->add_option("--class", verify.class_name, "graph class")->required();
    verify_cmd->add_flag("--pretty", verify.pretty, "indented output");
    verify_cmd->add_flag("--json", "machine-readable output (the default)");

    OrderL2Args order_l2;
    auto* order_cmd = app.add_subcommand("order-l2", "lift a vertex ordering to the square of the line graph");
    order_cmd->add_option("--graph", order_l2.graph_path, "graph file")->required();
    order_cmd->add_option("--ordering", order_l2.ordering_path, "ordering file")->required();
    order_cmd->add_option("--rule", order_l2.rule, "star|bullet")->check(CLI::IsMember({"star", "bullet"}));
    order_cmd->add_option("--out", order_l2.out_path, "edge ordering file to write (stdout if omitted)");
    order_cmd->add_flag("--endpoints", order_l2.endpoints, "write 'u v' endpoint pairs instead of edge ids");
    order_cmd->add_flag("--check", order_l2.check, "materialize the square and verify pattern transfer");
    order_cmd->add_flag("--pretty", order_l2.pretty, "indented output");
    order_cmd->add_flag("--json", "machine-readable output (the default)");

    SolveArgs mim;
    auto* mim_cmd = app.add_subcommand("mim", "maximum weight induced matching");
    mim_cmd->add_option("--graph", mim.graph_path, "graph file (edge weights from the weight column)")->required();
    mim_cmd->add_option("--ordering", mim.ordering_path, "umbrella-free ordering (computed when omitted)");
    mim_cmd->add_option("--names", mim.names_path, "id -> label sidecar for output");
    mim_cmd->add_flag("--pretty", mim.pretty, "indented output");
    mim_cmd->add_flag("--json", "machine-readable output (the default)");

    SolveArgs mwis;
    auto* mwis_cmd = app.add_subcommand("mwis", "maximum weight independent set");
    mwis_cmd->add_option("--graph", mwis.graph_path, "graph file")->required();
    mwis_cmd->add_option("--weights", mwis.weights_path, "vertex weight file (unit weights when omitted)");
    mwis_cmd->add_option("--ordering", mwis.ordering_path, "umbrella-free ordering (computed when omitted)");
    mwis_cmd->add_flag("--pretty", mwis.pretty, "indented output");
    mwis_cmd->add_flag("--json", "machine-readable output (the default)");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference solver");
    oracle_cmd->add_option("--graph", oracle.graph_path, "graph file")->required();
    oracle_cmd->add_option("--problem", oracle.problem, "mim|mwis")->check(CLI::IsMember({"mim", "mwis"}));
    oracle_cmd->add_option("--weights", oracle.weights_path, "vertex weight file (mwis only)");
    oracle_cmd->add_flag("--pretty", oracle.pretty, "indented output");
    oracle_cmd->add_flag("--json", "machine-readable output (the default)");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "randomized generation -> verification -> solver -> oracle");
    compare_cmd->add_option("--class", compare.class_name, "graph class")->required();
    compare_cmd->add_option("--trials", compare.trials, "number of trials");
    compare_cmd->add_option("--n-min", compare.n_min, "smallest instance");
    compare_cmd->add_option("--n-max", compare.n_max, "largest instance");
    compare_cmd->add_option("--seed", compare.seed, "base seed");
    compare_cmd->add_flag("--pretty", compare.pretty, "indented output");
    compare_cmd->add_flag("--json", "machine-readable output (the default)");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "operation counts against their linear budgets");
    bench_cmd->add_option("--sizes", bench.sizes, "comma-separated vertex counts");
    bench_cmd->add_option("--seed", bench.seed, "random seed");
    bench_cmd->add_flag("--csv", bench.csv, "CSV instead of JSON");
    bench_cmd->add_flag("--pretty", bench.pretty, "aligned text table");
    bench_cmd->add_flag("--json", "machine-readable output (the default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (gen_cmd->parsed())
            return run_gen(gen);
        if (verify_cmd->parsed())
            return run_verify(verify);
        if (order_cmd->parsed())
            return run_order_l2(order_l2);
        if (mim_cmd->parsed())
            return run_mim(mim);
        if (mwis_cmd->parsed())
            return run_mwis(mwis);
        if (oracle_cmd->parsed())
            return run_oracle(oracle);
        if (compare_cmd->parsed())
            return run_compare(compare);
        if (bench_cmd->parsed())
            return run_bench(bench);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
