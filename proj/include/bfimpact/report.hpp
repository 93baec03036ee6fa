#ifndef BFIMPACT_REPORT_HPP
#define BFIMPACT_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfimpact/graph.hpp"

namespace bfimpact {

struct VertexImpact {
    std::string label;
    vertex_id vertex = 0;
    std::uint32_t impact = 0;
    bool is_articulation = false;
    std::uint32_t component_id = 0;
    std::uint32_t component_size = 0;

    friend bool operator==(const VertexImpact&, const VertexImpact&) = default;
};

struct ImpactSummary {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t articulation_count = 0;
    std::uint32_t max_impact = 0;
    std::optional<vertex_id> max_vertex;  // empty only for the empty graph

    friend bool operator==(const ImpactSummary&, const ImpactSummary&) = default;
};

/// One record per vertex, indexed by vertex id.
struct ImpactReport {
    std::vector<VertexImpact> vertices;
    ImpactSummary summary;

    friend bool operator==(const ImpactReport&, const ImpactReport&) = default;
};

/// Orders labels that are both non-negative decimal integers numerically,
/// everything else lexicographically, with numeric labels first.
inline bool label_less(std::string_view a, std::string_view b) {
    auto numeric = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const bool na = numeric(a);
    const bool nb = numeric(b);
    if (na != nb) {
        return na;
    }
    if (na) {
        auto strip = [](std::string_view s) {
            const auto nz = s.find_first_not_of('0');
            return nz == std::string_view::npos ? std::string_view("0") : s.substr(nz);
        };
        const auto sa = strip(a);
        const auto sb = strip(b);
        if (sa.size() != sb.size()) {
            return sa.size() < sb.size();
        }
        if (sa != sb) {
            return sa < sb;
        }
    }
    return a < b;
}

/// Descending impact, then ascending label.
inline bool report_order(const VertexImpact& x, const VertexImpact& y) {
    if (x.impact != y.impact) {
        return x.impact > y.impact;
    }
    return label_less(x.label, y.label);
}

/// Rows in report order, optionally only the articulation points.
inline std::vector<const VertexImpact*> ordered_rows(const ImpactReport& report, bool all_vertices) {
    std::vector<const VertexImpact*> rows;
    for (const auto& r : report.vertices) {
        if (all_vertices || r.is_articulation) {
            rows.push_back(&r);
        }
    }
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return report_order(*a, *b); });
    return rows;
}

inline ImpactSummary summarize(const std::vector<VertexImpact>& vertices, std::size_t n, std::size_t m) {
    ImpactSummary s;
    s.n = n;
    s.m = m;
    const VertexImpact* best = nullptr;
    for (const auto& r : vertices) {
        s.articulation_count += r.is_articulation ? 1 : 0;
        if (best == nullptr || report_order(r, *best)) {
            best = &r;
        }
    }
    if (best != nullptr) {
        s.max_impact = best->impact;
        s.max_vertex = best->vertex;
    }
    return s;
}

}  // namespace bfimpact

#endif  // BFIMPACT_REPORT_HPP
