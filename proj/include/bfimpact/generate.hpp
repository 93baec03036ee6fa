#ifndef BFIMPACT_GENERATE_HPP
#define BFIMPACT_GENERATE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "bfimpact/graph.hpp"

namespace bfimpact {

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family {
    gnm,            // uniform over graphs with exactly n vertices and m edges
    path,           // 0-1-2-...-(n-1)
    star,           // center 0 joined to every other vertex
    balanced_tree,  // vertex i > 0 hangs below (i-1)/k
    clique_chain,   // k-cliques in a row, consecutive ones sharing one vertex
    spider,         // center 0 with spokes that are paths of k vertices
};

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::gnm: return "gnm";
        case Family::path: return "path";
        case Family::star: return "star";
        case Family::balanced_tree: return "balanced-tree";
        case Family::clique_chain: return "clique-chain";
        case Family::spider: return "spider";
    }
    return "?";
}

inline std::optional<Family> family_from_string(std::string_view name) {
    for (auto f : {Family::gnm, Family::path, Family::star, Family::balanced_tree, Family::clique_chain,
                   Family::spider}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

struct GeneratorSpec {
    Family family = Family::path;
    std::uint64_t n = 0;
    std::uint64_t m = 0;  // gnm only
    std::uint64_t k = 2;  // branching (balanced-tree), clique size (clique-chain), spoke length (spider)
    std::uint64_t seed = 0;
};

inline std::uint64_t max_simple_edges(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

inline void validate(const GeneratorSpec& spec) {
    if (spec.n >= kNoVertex) {
        throw ValidationError("n too large");
    }
    switch (spec.family) {
        case Family::gnm:
            if (spec.m > max_simple_edges(spec.n)) {
                throw ValidationError("gnm: m=" + std::to_string(spec.m) + " exceeds n(n-1)/2=" +
                                      std::to_string(max_simple_edges(spec.n)));
            }
            if (spec.m >= std::numeric_limits<edge_id>::max()) {
                throw ValidationError("gnm: m too large");
            }
            break;
        case Family::balanced_tree:
            if (spec.k < 1) {
                throw ValidationError("balanced-tree: branching factor k must be >= 1");
            }
            break;
        case Family::clique_chain:
            if (spec.k < 2) {
                throw ValidationError("clique-chain: clique size k must be >= 2");
            }
            break;
        case Family::spider:
            if (spec.k < 1) {
                throw ValidationError("spider: spoke length k must be >= 1");
            }
            break;
        case Family::path:
        case Family::star:
            break;
    }
}

namespace detail {

// Inverse of the row-major enumeration of pairs (i, j), i < j, where pair
// (i, j) has index j(j-1)/2 + i.
inline Edge decode_pair(std::uint64_t index) {
    auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
    while (j * (j - 1) / 2 > index) {
        --j;
    }
    while ((j + 1) * j / 2 <= index) {
        ++j;
    }
    const auto i = index - j * (j - 1) / 2;
    return {static_cast<vertex_id>(i), static_cast<vertex_id>(j)};
}

inline std::vector<Edge> sample_gnm(std::uint64_t n, std::uint64_t m, std::mt19937_64& rng) {
    // Floyd's subset sampling over the pair indices [0, n(n-1)/2).
    const auto total = max_simple_edges(n);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(m);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t j = total - m; j < total; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        auto t = pick(rng);
        if (!chosen.insert(t).second) {
            t = j;
            chosen.insert(t);
        }
        edges.push_back(decode_pair(t));
    }
    return edges;
}

}  // namespace detail

/// Deterministic in (spec, seed). Vertices are labeled "0".."n-1".
inline Graph generate(const GeneratorSpec& spec) {
    validate(spec);
    const auto n = spec.n;
    std::vector<Edge> edges;
    auto add = [&](std::uint64_t u, std::uint64_t v) {
        edges.push_back({static_cast<vertex_id>(u), static_cast<vertex_id>(v)});
    };

    switch (spec.family) {
        case Family::gnm: {
            std::mt19937_64 rng(spec.seed);
            edges = detail::sample_gnm(n, spec.m, rng);
            break;
        }
        case Family::path:
            for (std::uint64_t v = 1; v < n; ++v) {
                add(v - 1, v);
            }
            break;
        case Family::star:
            for (std::uint64_t v = 1; v < n; ++v) {
                add(0, v);
            }
            break;
        case Family::balanced_tree:
            for (std::uint64_t v = 1; v < n; ++v) {
                add((v - 1) / spec.k, v);
            }
            break;
        case Family::clique_chain: {
            const auto step = spec.k - 1;
            for (std::uint64_t first = 0; first + 1 < n; first += step) {
                const auto last = std::min(first + step, n - 1);
                for (auto a = first; a <= last; ++a) {
                    for (auto b = a + 1; b <= last; ++b) {
                        add(a, b);
                    }
                }
            }
            break;
        }
        case Family::spider:
            for (std::uint64_t v = 1; v < n; ++v) {
                const bool spoke_start = (v - 1) % spec.k == 0;
                add(spoke_start ? 0 : v - 1, v);
            }
            break;
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

/// A gnm spec with n uniform in [1, max_n] and m uniform in [0, n(n-1)/2],
/// drawing both and the graph seed from `rng`.
inline GeneratorSpec random_gnm_spec(std::mt19937_64& rng, std::uint64_t max_n) {
    GeneratorSpec spec;
    spec.family = Family::gnm;
    spec.n = std::uniform_int_distribution<std::uint64_t>(1, max_n)(rng);
    spec.m = std::uniform_int_distribution<std::uint64_t>(0, max_simple_edges(spec.n))(rng);
    spec.seed = rng();
    return spec;
}

}  // namespace bfimpact

#endif  // BFIMPACT_GENERATE_HPP
