#ifndef BFIMPACT_BENCH_HPP
#define BFIMPACT_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <vector>

#include "bfimpact/generate.hpp"
#include "bfimpact/impact.hpp"

namespace bfimpact {

struct BenchConfig {
    Family family = Family::path;
    std::vector<std::uint64_t> sizes;  // vertex counts
    std::uint64_t edge_factor = 2;     // gnm: m = edge_factor * n
    std::uint64_t k = 2;
    std::uint64_t seed = 1;
    unsigned repetitions = 3;
};

struct BenchRow {
    Family family;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double seconds = 0;      // median over repetitions
    double ns_per_item = 0;  // seconds / (n + m), in nanoseconds
    std::uint64_t checksum = 0;
};

/// Times compute_all_impacts only; graph generation happens before the clock starts.
inline BenchRow bench_one(const Graph& g, Family family, unsigned repetitions) {
    BenchRow row;
    row.family = family;
    row.n = g.n();
    row.m = g.m();
    std::vector<double> times;
    for (unsigned rep = 0; rep < std::max(1u, repetitions); ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const auto report = compute_all_impacts(g);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(stop - start).count());
        row.checksum = report.summary.articulation_count + report.summary.max_impact;
    }
    std::sort(times.begin(), times.end());
    row.seconds = times[times.size() / 2];
    row.ns_per_item = row.seconds * 1e9 / static_cast<double>(std::max<std::uint64_t>(1, row.n + row.m));
    return row;
}

inline GeneratorSpec bench_spec(const BenchConfig& config, std::uint64_t n) {
    GeneratorSpec spec;
    spec.family = config.family;
    spec.n = n;
    spec.m = config.family == Family::gnm ? config.edge_factor * n : 0;
    spec.k = config.k;
    spec.seed = config.seed;
    return spec;
}

/// Validates every size up front, then runs them in order.
inline std::vector<BenchRow> run_bench(const BenchConfig& config) {
    for (auto n : config.sizes) {
        validate(bench_spec(config, n));
    }
    std::vector<BenchRow> rows;
    for (auto n : config.sizes) {
        const auto g = generate(bench_spec(config, n));
        rows.push_back(bench_one(g, config.family, config.repetitions));
    }
    return rows;
}

inline void write_bench_tsv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "family\tn\tm\tseconds\tns_per_item\n";
    for (const auto& r : rows) {
        out << to_string(r.family) << '\t' << r.n << '\t' << r.m << '\t' << r.seconds << '\t' << r.ns_per_item
            << '\n';
    }
}

}  // namespace bfimpact

#endif  // BFIMPACT_BENCH_HPP
