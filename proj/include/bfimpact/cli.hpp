#ifndef BFIMPACT_CLI_HPP
#define BFIMPACT_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bfimpact/bench.hpp"
#include "bfimpact/block_forest.hpp"
#include "bfimpact/format.hpp"
#include "bfimpact/generate.hpp"
#include "bfimpact/impact.hpp"
#include "bfimpact/io.hpp"
#include "bfimpact/oracle.hpp"

namespace bfimpact::cli {

enum class Subcommand { analyze, check, dot, bench };
enum class OutputFormat { tsv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
    Subcommand subcommand = Subcommand::analyze;
    std::string input = "-";  // "-" reads standard input
    InputFormat format = InputFormat::edge_list;
    OutputFormat output = OutputFormat::tsv;
    bool all_vertices = false;
    bool quiet = false;

    // check
    std::uint64_t sweep = 0;  // > 0: check this many random gnm graphs instead of the input
    std::uint64_t sweep_max_n = 60;
    std::uint64_t sweep_seed = 1;

    // bench
    BenchConfig bench;
};

/// Where the fast path and the oracle first disagree, if anywhere.
inline std::optional<std::string> compare_with_oracle(const Graph& g) {
    const auto fast = compute_all_impacts(g);
    const auto naive = oracle::naive_all_impacts(g);
    for (vertex_id v = 0; v < g.n(); ++v) {
        const auto& a = fast.vertices[v];
        const auto& b = naive.vertices[v];
        if (!(a == b)) {
            std::ostringstream msg;
            msg << "vertex " << a.label << ": fast impact=" << a.impact << " ap=" << a.is_articulation
                << " naive impact=" << b.impact << " ap=" << b.is_articulation;
            return msg.str();
        }
    }
    const auto bf = build_block_forest(g);
    if (articulation_points(bf) != oracle::naive_articulation_points(g)) {
        return std::string("articulation point sets differ");
    }
    if (!(fast.summary == naive.summary)) {
        return std::string("summaries differ");
    }
    return std::nullopt;
}

namespace detail {

inline ParseResult load(const CliConfig& config, std::istream& stdin_stream) {
    if (config.input == "-") {
        return parse_graph(stdin_stream, config.format);
    }
    std::ifstream file(config.input);
    if (!file) {
        throw std::runtime_error("cannot open '" + config.input + "'");
    }
    return parse_graph(file, config.format);
}

inline void report_drops(const ParseResult& parsed, const CliConfig& config, std::ostream& err) {
    if (!config.quiet && parsed.dropped.total() > 0) {
        err << "note: dropped " << parsed.dropped.self_loops << " self-loop(s) and " << parsed.dropped.duplicates
            << " duplicate edge(s)\n";
    }
}

inline int run_check(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    if (config.sweep == 0) {
        const auto parsed = load(config, in);
        report_drops(parsed, config, err);
        if (auto mismatch = compare_with_oracle(parsed.graph)) {
            out << "MISMATCH " << *mismatch << '\n';
            return kExitMismatch;
        }
        out << "OK\n";
        return kExitOk;
    }
    if (config.sweep_max_n < 1) {
        throw ValidationError("sweep max n must be >= 1");
    }
    std::mt19937_64 rng(config.sweep_seed);
    for (std::uint64_t i = 0; i < config.sweep; ++i) {
        const auto spec = random_gnm_spec(rng, config.sweep_max_n);
        if (auto mismatch = compare_with_oracle(generate(spec))) {
            out << "MISMATCH gnm n=" << spec.n << " m=" << spec.m << " seed=" << spec.seed << ": " << *mismatch
                << '\n';
            return kExitMismatch;
        }
    }
    out << "OK\n";
    return kExitOk;
}

}  // namespace detail

/// Runs one subcommand. Exit status: 0 success, 1 fast/oracle mismatch,
/// 2 usage, input or parse error (reported on `err`).
inline int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (config.subcommand) {
            case Subcommand::analyze: {
                const auto parsed = detail::load(config, in);
                detail::report_drops(parsed, config, err);
                const auto report = compute_all_impacts(parsed.graph);
                if (config.output == OutputFormat::json) {
                    write_json(out, report, config.all_vertices);
                } else {
                    write_tsv(out, report, config.all_vertices);
                }
                return kExitOk;
            }
            case Subcommand::check:
                return detail::run_check(config, in, out, err);
            case Subcommand::dot: {
                const auto parsed = detail::load(config, in);
                detail::report_drops(parsed, config, err);
                const auto bf = build_block_forest(parsed.graph);
                export_dot(out, parsed.graph, bf, compute_sq_sizes(bf));
                return kExitOk;
            }
            case Subcommand::bench:
                write_bench_tsv(out, run_bench(config.bench));
                return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const ValidationError& e) {
        err << "invalid parameters: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace bfimpact::cli

#endif  // BFIMPACT_CLI_HPP
