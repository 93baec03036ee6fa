#ifndef BFIMPACT_IMPACT_HPP
#define BFIMPACT_IMPACT_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bfimpact/block_forest.hpp"
#include "bfimpact/graph.hpp"
#include "bfimpact/report.hpp"

namespace bfimpact {

/// Per block-forest node, the number of squares in its rooted subtree
/// (counting the node itself when it is a square).
struct SqSizes {
    std::vector<std::uint32_t> sq_size;

    std::uint32_t operator[](node_id x) const { return sq_size[x]; }
};

/// Post-order accumulation over every tree, children before parents.
inline SqSizes compute_sq_sizes(const BlockForest& bf) {
    SqSizes sizes;
    sizes.sq_size.assign(bf.node_count(), 0);
    if (bf.rounds_in_postorder()) {
        // Creation order already visits children first: one pass over rounds.
        std::fill(sizes.sq_size.begin(), sizes.sq_size.begin() + bf.square_count(), 1);
        for (std::size_t r = 0; r < bf.round_count(); ++r) {
            const auto round = bf.round_node(r);
            std::uint32_t below = 0;
            for (auto x : bf.members(r)) {
                if (bf.parent(x) == round) {
                    below += sizes.sq_size[x];
                }
            }
            sizes.sq_size[round] = below;
            if (bf.parent(round) != kNoNode) {
                sizes.sq_size[bf.parent(round)] += below;
            }
        }
        return sizes;
    }
    struct Frame {
        node_id node;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (auto root : bf.roots()) {
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto& top = stack.back();
            const auto x = top.node;
            const auto adjacent = bf.neighbors(x);
            if (top.next < adjacent.size()) {
                const auto y = adjacent[top.next++];
                if (y != bf.parent(x)) {
                    stack.push_back({y, 0});
                }
                continue;
            }
            if (bf.is_square(x)) {
                ++sizes.sq_size[x];
            }
            stack.pop_back();
            if (!stack.empty()) {
                sizes.sq_size[stack.back().node] += sizes.sq_size[x];
            }
        }
    }
    return sizes;
}

/// Number of vertices of v's component left outside the largest surviving
/// component once v is deleted. Deleting v leaves one piece per round child
/// (of sq_size squares) plus, above v, the rest of the component.
inline std::uint32_t compute_impact(const BlockForest& bf, const SqSizes& sizes, const CcLabeling& cc,
                                    vertex_id v) {
    const auto component = cc.size_of(v);
    auto max_cc = component - sizes[v];
    for (auto child : bf.neighbors(v)) {
        if (child != bf.parent(v)) {
            max_cc = std::max(max_cc, sizes[child]);
        }
    }
    return component - max_cc - 1;
}

/// Block forest (which also yields the connected components), subtree sizes,
/// then one impact per vertex. Linear in n + m.
inline ImpactReport compute_all_impacts(const Graph& g) {
    CcLabeling cc;
    const auto bf = build_block_forest(g, nullptr, &cc);
    const auto sizes = compute_sq_sizes(bf);

    ImpactReport report;
    report.vertices.resize(g.n());
    for (vertex_id v = 0; v < g.n(); ++v) {
        auto& row = report.vertices[v];
        row.label = g.label(v);
        row.vertex = v;
        row.impact = compute_impact(bf, sizes, cc, v);
        row.is_articulation = bf.degree(v) >= 2;
        row.component_id = cc.component_id[v];
        row.component_size = cc.size_of(v);
    }
    report.summary = summarize(report.vertices, g.n(), g.m());
    return report;
}

}  // namespace bfimpact

#endif  // BFIMPACT_IMPACT_HPP
