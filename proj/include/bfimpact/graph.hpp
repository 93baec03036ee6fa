#ifndef BFIMPACT_GRAPH_HPP
#define BFIMPACT_GRAPH_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bfimpact {

using vertex_id = std::uint32_t;
using edge_id = std::uint32_t;

inline constexpr vertex_id kNoVertex = std::numeric_limits<vertex_id>::max();

struct AdjacencyEntry {
    vertex_id neighbor;
    edge_id edge;
};

/// (neighbor, edge) pairs of one vertex, read from the two parallel arrays
/// the graph stores.
class AdjacencyView {
public:
    class iterator {
    public:
        using value_type = AdjacencyEntry;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const vertex_id* w, const edge_id* e) : w_(w), e_(e) {}

        AdjacencyEntry operator*() const { return {*w_, *e_}; }
        iterator& operator++() {
            ++w_;
            ++e_;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator& other) const { return w_ == other.w_; }

    private:
        const vertex_id* w_ = nullptr;
        const edge_id* e_ = nullptr;
    };

    AdjacencyView(std::span<const vertex_id> ids, const edge_id* edges) : ids_(ids), edges_(edges) {}

    iterator begin() const { return {ids_.data(), edges_}; }
    iterator end() const { return {ids_.data() + ids_.size(), edges_ + ids_.size()}; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    AdjacencyEntry operator[](std::size_t i) const { return {ids_[i], edges_[i]}; }

private:
    std::span<const vertex_id> ids_;
    const edge_id* edges_;
};

struct Edge {
    vertex_id u;
    vertex_id v;
};

/// What was thrown away while turning raw edge pairs into a simple graph.
struct DropCounts {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;

    std::size_t total() const { return self_loops + duplicates; }
};

/// Immutable undirected simple graph.
///
/// Vertices are the contiguous ids 0..n-1, each carrying the label it had in
/// the input. Adjacency is stored CSR-style; every edge shows up once in the
/// list of each endpoint, tagged with the same edge id. Neighbor order follows
/// edge-id order, which in turn follows input order.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph from raw pairs. Self-loops are dropped and
    /// repeated pairs (in either orientation) keep only their first
    /// occurrence. Endpoints must be < labels.size().
    static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> raw,
                            DropCounts* dropped = nullptr) {
        const auto n = labels.size();
        if (n >= kNoVertex) {
            throw std::length_error("graph: too many vertices");
        }

        DropCounts counts;
        std::vector<Edge> kept;
        kept.reserve(raw.size());
        for (const auto& e : raw) {
            if (e.u >= n || e.v >= n) {
                throw std::out_of_range("graph: edge endpoint out of range");
            }
            if (e.u == e.v) {
                ++counts.self_loops;
                continue;
            }
            kept.push_back(e);
        }

        // Sorted-pair membership: order indices by normalized pair, then keep
        // the smallest index of each run so surviving edges stay in input order.
        std::vector<std::uint32_t> order(kept.size());
        for (std::uint32_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        auto key = [&](std::uint32_t i) {
            auto [a, b] = std::minmax(kept[i].u, kept[i].v);
            return (static_cast<std::uint64_t>(a) << 32) | b;
        };
        std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
            const auto kx = key(x);
            const auto ky = key(y);
            return kx != ky ? kx < ky : x < y;
        });
        std::vector<char> keep(kept.size(), 1);
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (key(order[i]) == key(order[i - 1])) {
                keep[order[i]] = 0;
                ++counts.duplicates;
            }
        }

        Graph g;
        g.labels_ = std::move(labels);
        g.edges_.reserve(kept.size() - counts.duplicates);
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (keep[i]) {
                g.edges_.push_back(kept[i]);
            }
        }
        if (g.edges_.size() >= std::numeric_limits<edge_id>::max()) {
            throw std::length_error("graph: too many edges");
        }
        g.build_adjacency();
        g.build_label_index();
        if (dropped != nullptr) {
            *dropped = counts;
        }
        return g;
    }

    /// Graph on vertices labeled "0".."n-1".
    static Graph from_edges(std::size_t n, std::span<const Edge> raw, DropCounts* dropped = nullptr) {
        return from_edges(decimal_labels(n), raw, dropped);
    }

    static std::vector<std::string> decimal_labels(std::size_t n) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back(std::to_string(i));
        }
        return labels;
    }

    std::size_t n() const { return labels_.size(); }
    std::size_t m() const { return edges_.size(); }

    AdjacencyView neighbors(vertex_id v) const {
        assert(v < n());
        return {neighbor_ids(v), edge_ids_.data() + offsets_[v]};
    }

    /// Neighbors alone; traversals that never need edge ids read half as much.
    std::span<const vertex_id> neighbor_ids(vertex_id v) const {
        assert(v < n());
        return {neighbor_ids_.data() + offsets_[v], neighbor_ids_.data() + offsets_[v + 1]};
    }

    std::size_t degree(vertex_id v) const { return offsets_[v + 1] - offsets_[v]; }

    const Edge& edge(edge_id e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    const std::string& label(vertex_id v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<vertex_id> find(std::string_view label) const {
        auto it = label_index_.find(std::string(label));
        if (it == label_index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

private:
    void build_adjacency() {
        const auto n = labels_.size();
        offsets_.assign(n + 1, 0);
        for (const auto& e : edges_) {
            ++offsets_[e.u + 1];
            ++offsets_[e.v + 1];
        }
        for (std::size_t v = 0; v < n; ++v) {
            offsets_[v + 1] += offsets_[v];
        }
        neighbor_ids_.resize(2 * edges_.size());
        edge_ids_.resize(2 * edges_.size());
        std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (edge_id id = 0; id < edges_.size(); ++id) {
            const auto& e = edges_[id];
            neighbor_ids_[cursor[e.u]] = e.v;
            edge_ids_[cursor[e.u]++] = id;
            neighbor_ids_[cursor[e.v]] = e.u;
            edge_ids_[cursor[e.v]++] = id;
        }
    }

    void build_label_index() {
        label_index_.reserve(labels_.size());
        for (vertex_id v = 0; v < labels_.size(); ++v) {
            if (!label_index_.emplace(labels_[v], v).second) {
                throw std::invalid_argument("graph: duplicate vertex label '" + labels_[v] + "'");
            }
        }
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, vertex_id> label_index_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<vertex_id> neighbor_ids_;
    std::vector<edge_id> edge_ids_;
};

/// Per-vertex connected-component index and per-component size.
struct CcLabeling {
    std::vector<std::uint32_t> component_id;
    std::vector<std::uint32_t> component_size;

    std::size_t count() const { return component_size.size(); }
    std::uint32_t size_of(vertex_id v) const { return component_size[component_id[v]]; }
};

/// BFS labeling. Components are numbered in order of their smallest vertex id.
inline CcLabeling connected_components(const Graph& g) {
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    CcLabeling cc;
    cc.component_id.assign(g.n(), unset);
    std::vector<vertex_id> queue;
    queue.reserve(g.n());
    for (vertex_id s = 0; s < g.n(); ++s) {
        if (cc.component_id[s] != unset) {
            continue;
        }
        const auto id = static_cast<std::uint32_t>(cc.component_size.size());
        queue.clear();
        queue.push_back(s);
        cc.component_id[s] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto& [w, e] : g.neighbors(queue[head])) {
                if (cc.component_id[w] == unset) {
                    cc.component_id[w] = id;
                    queue.push_back(w);
                }
            }
        }
        cc.component_size.push_back(static_cast<std::uint32_t>(queue.size()));
    }
    return cc;
}

/// Serializes to the edge-list text format. Isolated vertices are written as
/// "v <label>" declarations so that parsing the result gives back the same
/// label and edge sets.
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (vertex_id v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0) {
            out << "v " << g.label(v) << '\n';
        }
    }
    for (const auto& e : g.edges()) {
        // A leading "v" or '#' token would read back as a declaration or comment.
        const auto& first = g.label(e.u);
        if (first == "v" || first.starts_with('#')) {
            out << g.label(e.v) << ' ' << first << '\n';
        } else {
            out << first << ' ' << g.label(e.v) << '\n';
        }
    }
    return out.str();
}

}  // namespace bfimpact

#endif  // BFIMPACT_GRAPH_HPP
