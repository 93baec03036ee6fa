#ifndef BFIMPACT_TESTS_SUPPORT_HPP
#define BFIMPACT_TESTS_SUPPORT_HPP

// Test-only helpers: small graph constructors, edge-subset enumeration and
// brute-force checks that are independent of the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bfimpact/block_forest.hpp"
#include "bfimpact/graph.hpp"
#include "bfimpact/impact.hpp"

namespace bfimpact::testing {

/// Graph over the given labels with edges named by label.
inline Graph labeled(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::map<std::string, vertex_id> index;
    for (vertex_id i = 0; i < labels.size(); ++i) {
        index[labels[i]] = i;
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : pairs) {
        edges.push_back({index.at(a), index.at(b)});
    }
    return Graph::from_edges(std::move(labels), edges);
}

inline Graph triangle() { return labeled({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

inline Graph bowtie() {
    return labeled({"a", "b", "c", "d", "e"},
                   {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}, {"d", "e"}, {"c", "e"}});
}

inline Graph pendant_triangle() {
    return labeled({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "x"}});
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (vertex_id v = 1; v < n; ++v) {
        edges.push_back({v - 1, v});
    }
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (vertex_id a = 0; a < n; ++a) {
        for (vertex_id b = a + 1; b < n; ++b) {
            edges.push_back({a, b});
        }
    }
    return Graph::from_edges(n, edges);
}

/// All pairs (a, b), a < b, of an n-vertex set in a fixed order.
inline std::vector<Edge> all_pairs(std::size_t n) {
    std::vector<Edge> pairs;
    for (vertex_id a = 0; a < n; ++a) {
        for (vertex_id b = a + 1; b < n; ++b) {
            pairs.push_back({a, b});
        }
    }
    return pairs;
}

/// The graph on n vertices whose edge set is the subset `mask` of all_pairs(n).
inline Graph subset_graph(std::size_t n, const std::vector<Edge>& pairs, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) {
            edges.push_back(pairs[i]);
        }
    }
    return Graph::from_edges(n, edges);
}

/// Reachability by boolean transitive closure (Floyd-Warshall).
inline std::vector<std::vector<bool>> reachability(const Graph& g) {
    const auto n = g.n();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (vertex_id v = 0; v < n; ++v) {
        r[v][v] = true;
    }
    for (const auto& e : g.edges()) {
        r[e.u][e.v] = r[e.v][e.u] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!r[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (r[k][j]) {
                    r[i][j] = true;
                }
            }
        }
    }
    return r;
}

/// Whether `keep` (a vertex subset) induces a connected subgraph.
inline bool induces_connected(const Graph& g, const std::vector<vertex_id>& keep) {
    if (keep.empty()) {
        return true;
    }
    std::vector<char> in(g.n(), 0);
    std::vector<char> seen(g.n(), 0);
    for (auto v : keep) {
        in[v] = 1;
    }
    std::vector<vertex_id> stack{keep.front()};
    seen[keep.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        ++reached;
        for (const auto& [w, e] : g.neighbors(x)) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return reached == keep.size();
}

/// Edge classes of the "lie on a common cycle" relation, computed without any
/// DFS numbering: e and f share a block iff for every vertex w they stay in
/// one piece after w is split into one copy per incident edge. Returns a
/// canonical class id per edge (smallest edge id in the class).
inline std::vector<edge_id> splitting_edge_classes(const Graph& g) {
    const auto m = g.m();
    // signature[e][w]: representative of e's piece once w is split.
    std::vector<std::vector<edge_id>> signature(m, std::vector<edge_id>(g.n()));
    std::vector<edge_id> parent(m);
    auto find = [&](edge_id x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (vertex_id w = 0; w < g.n(); ++w) {
        std::iota(parent.begin(), parent.end(), 0);
        // Edges meeting at a vertex other than w are joined; at w nothing is.
        for (vertex_id x = 0; x < g.n(); ++x) {
            if (x == w) {
                continue;
            }
            const auto adj = g.neighbors(x);
            for (std::size_t i = 1; i < adj.size(); ++i) {
                parent[find(adj[i].edge)] = find(adj[0].edge);
            }
        }
        for (edge_id e = 0; e < m; ++e) {
            signature[e][w] = find(e);
        }
    }
    std::map<std::vector<edge_id>, edge_id> first;
    std::vector<edge_id> cls(m);
    for (edge_id e = 0; e < m; ++e) {
        cls[e] = first.try_emplace(signature[e], e).first->second;
    }
    return cls;
}

/// Structural checks on a built forest; returns the first violation or "".
inline std::string check_forest_structure(const Graph& g, const BlockForest& bf) {
    std::ostringstream err;
    if (bf.square_count() != g.n()) {
        return "square count differs from n";
    }
    // Bipartite, symmetric, no duplicate edges.
    for (node_id x = 0; x < bf.node_count(); ++x) {
        std::set<node_id> seen;
        for (auto y : bf.neighbors(x)) {
            if (bf.is_square(x) == bf.is_square(y)) {
                err << "non-alternating edge " << x << "-" << y;
                return err.str();
            }
            if (!seen.insert(y).second) {
                err << "duplicate forest edge " << x << "-" << y;
                return err.str();
            }
            const auto back = bf.neighbors(y);
            if (std::find(back.begin(), back.end(), x) == back.end()) {
                return "asymmetric adjacency";
            }
        }
    }
    // Forest: parent pointers agree with adjacency, every node reaches a root.
    std::size_t parent_edges = 0;
    for (node_id x = 0; x < bf.node_count(); ++x) {
        const auto p = bf.parent(x);
        if (p == kNoNode) {
            continue;
        }
        ++parent_edges;
        const auto adj = bf.neighbors(x);
        if (std::find(adj.begin(), adj.end(), p) == adj.end()) {
            return "parent is not a neighbor";
        }
        std::size_t steps = 0;
        for (auto y = x; bf.parent(y) != kNoNode; y = bf.parent(y)) {
            if (++steps > bf.node_count()) {
                return "parent pointers cycle";
            }
        }
    }
    if (parent_edges != bf.edge_count()) {
        return "forest edge count does not match parent links";
    }
    // Roots: one per connected component; round unless a lone square.
    const auto cc = connected_components(g);
    if (bf.roots().size() != cc.count()) {
        return "tree count differs from component count";
    }
    for (auto r : bf.roots()) {
        if (bf.parent(r) != kNoNode) {
            return "root has a parent";
        }
        if (bf.is_square(r) && bf.degree(r) != 0) {
            return "square root that is not a singleton";
        }
    }
    // Every graph edge lies in exactly one round's member set.
    std::vector<std::set<vertex_id>> member_sets;
    for (std::size_t r = 0; r < bf.round_count(); ++r) {
        const auto mem = bf.members(r);
        member_sets.emplace_back(mem.begin(), mem.end());
        if (mem.size() < 2) {
            return "round with fewer than two members";
        }
    }
    for (const auto& e : g.edges()) {
        int hits = 0;
        for (const auto& s : member_sets) {
            hits += (s.count(e.u) && s.count(e.v)) ? 1 : 0;
        }
        if (hits != 1) {
            err << "edge " << g.label(e.u) << "-" << g.label(e.v) << " lies in " << hits << " blocks";
            return err.str();
        }
    }
    // Root sq-size equals component size.
    const auto sizes = compute_sq_sizes(bf);
    for (auto r : bf.roots()) {
        const auto any_square = bf.is_square(r) ? r : bf.neighbors(r)[0];
        if (sizes[r] != cc.size_of(any_square)) {
            return "root sq-size differs from component size";
        }
    }
    return "";
}

}  // namespace bfimpact::testing

#endif  // BFIMPACT_TESTS_SUPPORT_HPP
