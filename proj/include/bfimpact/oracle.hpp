#ifndef BFIMPACT_ORACLE_HPP
#define BFIMPACT_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bfimpact/graph.hpp"
#include "bfimpact/report.hpp"

// Brute-force reference implementations. Nothing here depends on the block
// forest code; only the Graph type is shared.

namespace bfimpact::oracle {

/// Scratch space for repeated removal sweeps over the same graph. Visited marks
/// are epoch stamps so no per-sweep clearing is needed.
class RemovalWorkspace {
public:
    explicit RemovalWorkspace(const Graph& g) : g_(&g), stamp_(g.n(), 0) { queue_.reserve(g.n()); }

    /// Sizes of the components that remain of v's component once v is deleted,
    /// in order of discovery from v's adjacency.
    std::vector<std::uint32_t> surviving_components(vertex_id v) {
        std::vector<std::uint32_t> sizes;
        next_epoch();
        stamp_[v] = epoch_;
        for (const auto& [s, e] : g_->neighbors(v)) {
            if (stamp_[s] != epoch_) {
                sizes.push_back(flood(s));
            }
        }
        return sizes;
    }

    /// Number of connected components of g with `removed` deleted (kNoVertex
    /// deletes nothing).
    std::size_t component_count_without(vertex_id removed) {
        next_epoch();
        if (removed != kNoVertex) {
            stamp_[removed] = epoch_;
        }
        std::size_t count = 0;
        for (vertex_id s = 0; s < g_->n(); ++s) {
            if (stamp_[s] != epoch_) {
                flood(s);
                ++count;
            }
        }
        return count;
    }

private:
    void next_epoch() {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
    }

    std::uint32_t flood(vertex_id s) {
        queue_.clear();
        queue_.push_back(s);
        stamp_[s] = epoch_;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            for (const auto& [w, e] : g_->neighbors(queue_[head])) {
                if (stamp_[w] != epoch_) {
                    stamp_[w] = epoch_;
                    queue_.push_back(w);
                }
            }
        }
        return static_cast<std::uint32_t>(queue_.size());
    }

    const Graph* g_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<vertex_id> queue_;
};

namespace detail {

inline std::uint32_t impact_from_pieces(const std::vector<std::uint32_t>& pieces) {
    std::uint32_t total = 0;
    std::uint32_t largest = 0;
    for (auto s : pieces) {
        total += s;
        largest = std::max(largest, s);
    }
    return total - largest;
}

}  // namespace detail

/// Delete v, flood what is left of its component, and count everything outside
/// the largest piece.
inline std::uint32_t naive_impact(const Graph& g, vertex_id v) {
    RemovalWorkspace ws(g);
    return detail::impact_from_pieces(ws.surviving_components(v));
}

/// Vertices whose deletion raises the component count of the remaining graph.
/// Deleting an isolated vertex removes a component outright, so it does not
/// qualify. O(n(n + m)).
inline std::vector<vertex_id> naive_articulation_points(const Graph& g) {
    RemovalWorkspace ws(g);
    const auto base = ws.component_count_without(kNoVertex);
    std::vector<vertex_id> out;
    for (vertex_id v = 0; v < g.n(); ++v) {
        const auto baseline = base - (g.degree(v) == 0 ? 1 : 0);
        if (ws.component_count_without(v) > baseline) {
            out.push_back(v);
        }
    }
    return out;
}

/// Full report by one removal sweep per vertex. A vertex is flagged as an
/// articulation point when its deletion leaves at least two pieces of its
/// component, which is the component-count condition restricted to the only
/// component that changes.
inline ImpactReport naive_all_impacts(const Graph& g) {
    RemovalWorkspace ws(g);

    // Component labels by flooding from the smallest unlabeled vertex.
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> comp(g.n(), unset);
    std::vector<std::uint32_t> comp_size;
    for (vertex_id s = 0; s < g.n(); ++s) {
        if (comp[s] != unset) {
            continue;
        }
        const auto id = static_cast<std::uint32_t>(comp_size.size());
        std::vector<vertex_id> stack{s};
        comp[s] = id;
        std::uint32_t size = 0;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& [w, e] : g.neighbors(x)) {
                if (comp[w] == unset) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        comp_size.push_back(size);
    }

    ImpactReport report;
    report.vertices.resize(g.n());
    for (vertex_id v = 0; v < g.n(); ++v) {
        const auto pieces = ws.surviving_components(v);
        auto& row = report.vertices[v];
        row.label = g.label(v);
        row.vertex = v;
        row.impact = detail::impact_from_pieces(pieces);
        row.is_articulation = pieces.size() >= 2;
        row.component_id = comp[v];
        row.component_size = comp_size[comp[v]];
    }
    report.summary = summarize(report.vertices, g.n(), g.m());
    return report;
}

}  // namespace bfimpact::oracle

#endif  // BFIMPACT_ORACLE_HPP
