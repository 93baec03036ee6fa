// Command-line front end: analyze, check, dot, bench.

#include <cmath>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfimpact/cli.hpp"

namespace {

using bfimpact::cli::CliConfig;
using bfimpact::cli::OutputFormat;
using bfimpact::cli::Subcommand;

void add_input_options(CLI::App* sub, CliConfig& config) {
    sub->add_option("input", config.input, "Graph file, or - for standard input")->capture_default_str();
    sub->add_option("-f,--format", config.format, "Input format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, bfimpact::InputFormat>{{"edgelist", bfimpact::InputFormat::edge_list},
                                                         {"dimacs", bfimpact::InputFormat::dimacs}},
            CLI::ignore_case));
    sub->add_flag("-q,--quiet", config.quiet, "Suppress notes on the diagnostic stream");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Impact of every articulation point via the block forest"};
    app.require_subcommand(1);

    CliConfig config;

    auto* analyze = app.add_subcommand("analyze", "Print per-vertex impact, highest first");
    add_input_options(analyze, config);
    analyze
        ->add_option("-o,--output", config.output, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"tsv", OutputFormat::tsv}, {"json", OutputFormat::json}},
            CLI::ignore_case));
    analyze->add_flag("-a,--all", config.all_vertices, "Report every vertex, not only articulation points");

    auto* check = app.add_subcommand("check", "Compare the linear-time result against brute force");
    add_input_options(check, config);
    check->add_option("--sweep", config.sweep, "Check this many random gnm graphs instead of the input");
    check->add_option("--max-n", config.sweep_max_n, "Largest vertex count in the sweep")->capture_default_str();
    check->add_option("--seed", config.sweep_seed, "Sweep seed")->capture_default_str();

    auto* dot = app.add_subcommand("dot", "Emit the block forest as Graphviz DOT");
    add_input_options(dot, config);

    auto* bench = app.add_subcommand("bench", "Time the linear-time pipeline over a size sweep");
    std::string family = "path";
    unsigned min_exp = 17;
    unsigned max_exp = 21;
    std::vector<std::uint64_t> sizes;
    bench->add_option("--family", family, "gnm, path, star, balanced-tree, clique-chain or spider")
        ->capture_default_str();
    bench->add_option("--sizes", sizes, "Explicit vertex counts (overrides --min-exp/--max-exp)")->delimiter(',');
    bench->add_option("--min-exp", min_exp, "Smallest size as a power of two")->capture_default_str();
    bench->add_option("--max-exp", max_exp, "Largest size as a power of two")->capture_default_str();
    bench->add_option("--edge-factor", config.bench.edge_factor, "gnm: m = edge-factor * n")->capture_default_str();
    bench->add_option("-k", config.bench.k, "Family parameter")->capture_default_str();
    bench->add_option("--seed", config.bench.seed, "Generator seed")->capture_default_str();
    bench->add_option("--reps", config.bench.repetitions, "Repetitions per size (median reported)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bfimpact::cli::kExitUsage;
    }

    if (analyze->parsed()) {
        config.subcommand = Subcommand::analyze;
    } else if (check->parsed()) {
        config.subcommand = Subcommand::check;
    } else if (dot->parsed()) {
        config.subcommand = Subcommand::dot;
    } else {
        config.subcommand = Subcommand::bench;
        const auto parsed_family = bfimpact::family_from_string(family);
        if (!parsed_family) {
            std::cerr << "invalid parameters: unknown family '" << family << "'\n";
            return bfimpact::cli::kExitUsage;
        }
        if (min_exp > max_exp || max_exp > 30) {
            std::cerr << "invalid parameters: need min-exp <= max-exp <= 30\n";
            return bfimpact::cli::kExitUsage;
        }
        config.bench.family = *parsed_family;
        if (sizes.empty()) {
            for (auto e = min_exp; e <= max_exp; ++e) {
                sizes.push_back(std::uint64_t{1} << e);
            }
        }
        config.bench.sizes = sizes;
    }

    std::ios::sync_with_stdio(false);
    return bfimpact::cli::run(config, std::cin, std::cout, std::cerr);
}
