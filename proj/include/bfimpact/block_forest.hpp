#ifndef BFIMPACT_BLOCK_FOREST_HPP
#define BFIMPACT_BLOCK_FOREST_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "bfimpact/graph.hpp"

namespace bfimpact {

/// Block-forest node id. Squares (graph vertices) occupy 0..n-1 and share the
/// graph's vertex ids; round node r (the r-th biconnected component) is n + r.
using node_id = std::uint32_t;

inline constexpr node_id kNoNode = std::numeric_limits<node_id>::max();

class BlockForestBuilder;

/// Bipartite forest with one square node per vertex and one round node per
/// biconnected component. A square is adjacent to every round whose component
/// contains it. Each tree is rooted at a round node, except trees that are a
/// single square (isolated vertices).
class BlockForest {
public:
    BlockForest() = default;

    std::size_t square_count() const { return squares_; }
    std::size_t round_count() const { return round_offsets_.size() - 1; }
    std::size_t node_count() const { return squares_ + round_count(); }
    std::size_t edge_count() const { return round_members_.size(); }

    bool is_square(node_id x) const { return x < squares_; }
    bool is_round(node_id x) const { return x >= squares_ && x < node_count(); }

    node_id round_node(std::size_t r) const { return static_cast<node_id>(squares_ + r); }
    std::size_t round_index(node_id x) const { return x - squares_; }

    /// Member squares of the r-th round node, in the order they were attached.
    std::span<const vertex_id> members(std::size_t r) const {
        return {round_members_.data() + round_offsets_[r], round_members_.data() + round_offsets_[r + 1]};
    }

    /// Squares list their parent round first, then their child rounds; rounds
    /// list their members.
    std::span<const node_id> neighbors(node_id x) const {
        if (is_square(x)) {
            return {adjacency_.data() + adj_offsets_[x], adjacency_.data() + adj_offsets_[x + 1]};
        }
        return members(round_index(x));
    }
    std::size_t degree(node_id x) const {
        if (is_square(x)) {
            return adj_offsets_[x + 1] - adj_offsets_[x];
        }
        const auto r = round_index(x);
        return round_offsets_[r + 1] - round_offsets_[r];
    }

    node_id parent(node_id x) const { return parent_[x]; }
    std::span<const node_id> roots() const { return roots_; }

    /// True while every round's descendants were created before it, which holds
    /// for the orientation produced by construction and is lost on reroot().
    bool rounds_in_postorder() const { return rounds_in_postorder_; }

    /// Root of the tree containing x.
    node_id root_of(node_id x) const {
        while (parent_[x] != kNoNode) {
            x = parent_[x];
        }
        return x;
    }

    /// Re-hangs the tree containing round node `new_root` from it. Every other
    /// tree keeps its orientation.
    void reroot(node_id new_root) {
        if (!is_round(new_root)) {
            throw std::invalid_argument("block forest: only round nodes can be roots");
        }
        const auto old_root = root_of(new_root);
        std::vector<node_id> stack{new_root};
        parent_[new_root] = kNoNode;
        std::vector<char> seen(node_count(), 0);
        seen[new_root] = 1;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (auto y : neighbors(x)) {
                if (!seen[y]) {
                    seen[y] = 1;
                    parent_[y] = x;
                    stack.push_back(y);
                }
            }
        }
        std::replace(roots_.begin(), roots_.end(), old_root, new_root);
        rounds_in_postorder_ = false;
    }

private:
    friend class BlockForestBuilder;

    std::size_t squares_ = 0;
    std::vector<std::size_t> round_offsets_{0};
    std::vector<vertex_id> round_members_;
    std::vector<std::size_t> adj_offsets_{0};  // squares only
    std::vector<node_id> adjacency_;
    std::vector<node_id> parent_;
    std::vector<node_id> roots_;
    bool rounds_in_postorder_ = true;
};

/// Counters for checking that construction does O(n + m) work.
struct BuildStats {
    std::uint64_t adjacency_scans = 0;
    std::uint64_t edge_pushes = 0;
    std::uint64_t edge_pops = 0;
    std::uint64_t frame_pushes = 0;

    std::uint64_t total() const { return adjacency_scans + edge_pushes + edge_pops + frame_pushes; }
};

/// DFS bookkeeping shared across the trees of one construction.
struct DfsState {
    static constexpr std::uint32_t kUnnumbered = std::numeric_limits<std::uint32_t>::max();

    // A vertex's number and running lowpoint live in its frame while it is on
    // the stack, so the hot path touches the stack rather than scattered slots.
    struct Frame {
        vertex_id vertex;
        vertex_id parent;
        std::uint32_t number;
        std::uint32_t lowpt;
        std::uint32_t next;  // index into the vertex's adjacency
    };

    struct PendingEdge {
        vertex_id tail;  // the vertex being scanned when the edge was pushed
        std::uint32_t tail_number;
        vertex_id head;
    };

    explicit DfsState(std::size_t n) : number(n, kUnnumbered), lowpt(n, kUnnumbered), tree_of(n) {}

    bool numbered(vertex_id v) const { return number[v] != kUnnumbered; }

    std::uint32_t timer = 0;
    std::vector<std::uint32_t> number;
    std::vector<std::uint32_t> lowpt;    // final lowpoints, written as vertices finish
    std::uint32_t tree = 0;              // index of the DFS tree being grown
    std::vector<std::uint32_t> tree_of;  // tree index per vertex
    std::vector<PendingEdge> edges;
    std::vector<Frame> frames;
    BuildStats stats;
};

/// Accumulates round nodes while DFS runs and assembles the final forest.
class BlockForestBuilder {
public:
    /// `m` only sizes reservations: a graph has fewer than min(n, m + 1) blocks.
    explicit BlockForestBuilder(std::size_t n, std::size_t m = 0) {
        const auto rounds = std::min(n, m + 1);
        forest_.squares_ = n;
        forest_.parent_.reserve(n + rounds);
        forest_.parent_.assign(n, kNoNode);
        forest_.round_offsets_.reserve(rounds + 1);
        forest_.round_members_.reserve(n + rounds);
    }

    /// Opens a new round node created at pop vertex `cut`; returns its index.
    std::size_t open_round(vertex_id cut) {
        const auto r = forest_.round_count();
        forest_.round_offsets_.push_back(forest_.round_members_.size());
        forest_.parent_.push_back(cut);
        return r;
    }

    /// Adds x to the most recently opened round unless it is already there.
    /// A square joins exactly one round as a non-cut member, so its parent
    /// pointer doubles as the duplicate marker.
    void attach(vertex_id x) {
        const auto round = forest_.round_node(forest_.round_count() - 1);
        if (forest_.parent_[x] == round) {
            return;
        }
        forest_.parent_[x] = round;
        forest_.round_members_.push_back(x);
        ++forest_.round_offsets_.back();
    }

    /// Adds the cut vertex of the most recent round. Called once per round.
    void attach_cut(vertex_id cut) {
        forest_.round_members_.push_back(cut);
        ++forest_.round_offsets_.back();
    }

    std::size_t round_count() const { return forest_.round_count(); }

    /// Closes a DFS tree started at `start`. The last round created contains
    /// `start` and becomes the root; `first_round` is the round count before
    /// the tree was explored.
    void finish_tree(vertex_id start, std::size_t first_round) {
        if (forest_.round_count() == first_round) {
            forest_.roots_.push_back(start);
            return;
        }
        const auto root = forest_.round_node(forest_.round_count() - 1);
        forest_.parent_[root] = kNoNode;
        forest_.parent_[start] = root;
        forest_.roots_.push_back(root);
    }

    BlockForest finish() && {
        auto& f = forest_;
        const auto n = f.squares_;
        f.adj_offsets_.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) {
            f.adj_offsets_[v + 1] = f.parent_[v] != kNoNode ? 1 : 0;
        }
        for (std::size_t x = n; x < f.node_count(); ++x) {
            if (f.parent_[x] != kNoNode) {
                ++f.adj_offsets_[f.parent_[x] + 1];
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            f.adj_offsets_[v + 1] += f.adj_offsets_[v];
        }
        f.adjacency_.resize(f.adj_offsets_[n]);
        std::vector<std::size_t> cursor(f.adj_offsets_.begin(), f.adj_offsets_.end() - 1);
        for (std::size_t v = 0; v < n; ++v) {
            if (f.parent_[v] != kNoNode) {
                f.adjacency_[cursor[v]++] = f.parent_[v];
            }
        }
        for (std::size_t x = n; x < f.node_count(); ++x) {
            if (f.parent_[x] != kNoNode) {
                f.adjacency_[cursor[f.parent_[x]]++] = static_cast<node_id>(x);
            }
        }
        return std::move(forest_);
    }

private:
    BlockForest forest_;
};

/// Explores the connected component of `start`, emitting one round node per
/// biconnected component. Hopcroft-Tarjan lowpoint DFS run on an explicit
/// frame stack.
inline void dfs_visit(const Graph& g, vertex_id start, DfsState& state, BlockForestBuilder& bf) {
    assert(!state.numbered(start));
    auto& number = state.number;
    auto& edges = state.edges;
    auto& frames = state.frames;

    auto enter = [&](vertex_id v, vertex_id parent) {
        const auto t = state.timer++;
        number[v] = t;
        state.tree_of[v] = state.tree;
        // Scanning v reads number[] of every neighbor; start those loads now.
        for (auto w : g.neighbor_ids(v)) {
            __builtin_prefetch(&number[w]);
        }
        frames.push_back({v, parent, t, t, 0});
        ++state.stats.frame_pushes;
    };

    enter(start, kNoVertex);
    while (!frames.empty()) {
        auto& frame = frames.back();
        const auto v = frame.vertex;
        const auto adjacency = g.neighbor_ids(v);

        if (frame.next < adjacency.size()) {
            const auto u = adjacency[frame.next++];
            ++state.stats.adjacency_scans;
            if (u == frame.parent) {
                continue;
            }
            if (!state.numbered(u)) {
                edges.push_back({v, frame.number, u});
                ++state.stats.edge_pushes;
                enter(u, v);  // invalidates `frame`
            } else if (number[u] < frame.number) {
                edges.push_back({v, frame.number, u});
                ++state.stats.edge_pushes;
                frame.lowpt = std::min(frame.lowpt, number[u]);
            }
            continue;
        }

        // v is finished; resume its parent p as if returning from recursion.
        const auto u = v;
        const auto u_number = frame.number;
        const auto u_lowpt = frame.lowpt;
        const auto p = frame.parent;
        state.lowpt[u] = u_lowpt;
        frames.pop_back();
        if (p == kNoVertex) {
            break;
        }
        auto& parent = frames.back();
        parent.lowpt = std::min(parent.lowpt, u_lowpt);
        if (u_lowpt >= parent.number) {
            // Every member other than u and p is the tail of some popped edge
            // (its tree edge to a child in the block), so heads can be skipped.
            bf.open_round(p);
            while (!edges.empty() && edges.back().tail_number >= u_number) {
                bf.attach(edges.back().tail);
                edges.pop_back();
                ++state.stats.edge_pops;
            }
            bf.attach(u);
            bf.attach_cut(p);
            assert(!edges.empty() && edges.back().tail == p && edges.back().head == u);
            edges.pop_back();
            ++state.stats.edge_pops;
        }
    }
}

/// Builds the block forest of g in O(n + m).
/// When `components` is given it receives the connected components found by
/// the same DFS, numbered by smallest vertex as connected_components() does.
inline BlockForest build_block_forest(const Graph& g, BuildStats* stats = nullptr,
                                      CcLabeling* components = nullptr) {
    DfsState state(g.n());
    state.edges.reserve(g.m());
    BlockForestBuilder builder(g.n(), g.m());
    std::vector<std::uint32_t> sizes;
    for (vertex_id v = 0; v < g.n(); ++v) {
        if (state.numbered(v)) {
            continue;
        }
        const auto first_round = builder.round_count();
        const auto first_number = state.timer;
        dfs_visit(g, v, state, builder);
        builder.finish_tree(v, first_round);
        sizes.push_back(state.timer - first_number);
        ++state.tree;
    }
    if (stats != nullptr) {
        *stats = state.stats;
    }
    if (components != nullptr) {
        components->component_id = std::move(state.tree_of);
        components->component_size = std::move(sizes);
    }
    return std::move(builder).finish();
}

/// Squares that are not leaves, in increasing vertex order.
inline std::vector<vertex_id> articulation_points(const BlockForest& bf) {
    std::vector<vertex_id> out;
    for (vertex_id v = 0; v < bf.square_count(); ++v) {
        if (bf.degree(v) >= 2) {
            out.push_back(v);
        }
    }
    return out;
}

/// Member sets of the round nodes, each sorted, in round-creation order.
inline std::vector<std::vector<vertex_id>> biconnected_components(const BlockForest& bf) {
    std::vector<std::vector<vertex_id>> out;
    out.reserve(bf.round_count());
    for (std::size_t r = 0; r < bf.round_count(); ++r) {
        const auto members = bf.members(r);
        auto& set = out.emplace_back(members.begin(), members.end());
        std::sort(set.begin(), set.end());
    }
    return out;
}

/// Round index of the block containing each edge. Two blocks share at most one
/// vertex, so the round holding both endpoints is unique; in the rooted forest
/// it is the parent of one of them.
inline std::vector<std::size_t> edge_blocks(const Graph& g, const BlockForest& bf) {
    std::vector<std::size_t> out(g.m());
    for (edge_id e = 0; e < g.m(); ++e) {
        const auto [a, b] = g.edge(e);
        const auto pa = bf.parent(a);
        const bool via_a = pa != kNoNode && (bf.parent(pa) == b || bf.parent(b) == pa);
        out[e] = bf.round_index(via_a ? pa : bf.parent(b));
    }
    return out;
}

/// Edges whose biconnected component has exactly two vertices.
inline std::vector<edge_id> bridges(const Graph& g, const BlockForest& bf) {
    std::vector<edge_id> out;
    const auto blocks = edge_blocks(g, bf);
    for (edge_id e = 0; e < g.m(); ++e) {
        if (bf.members(blocks[e]).size() == 2) {
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace bfimpact

#endif  // BFIMPACT_BLOCK_FOREST_HPP
