#ifndef BFIMPACT_FORMAT_HPP
#define BFIMPACT_FORMAT_HPP

#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bfimpact/block_forest.hpp"
#include "bfimpact/graph.hpp"
#include "bfimpact/impact.hpp"
#include "bfimpact/report.hpp"

namespace bfimpact {

inline constexpr std::string_view kTsvHeader = "label\timpact\tis_articulation\tcomponent_id\tcomponent_size";

/// A "# n=.. m=.. a=.. max_impact=.. max_vertex=.." line, the column header,
/// then one row per reported vertex.
inline void write_tsv(std::ostream& out, const ImpactReport& report, bool all_vertices) {
    const auto& s = report.summary;
    out << "# n=" << s.n << " m=" << s.m << " a=" << s.articulation_count << " max_impact=" << s.max_impact
        << " max_vertex=" << (s.max_vertex ? report.vertices[*s.max_vertex].label : std::string("-")) << '\n';
    out << kTsvHeader << '\n';
    for (const auto* row : ordered_rows(report, all_vertices)) {
        out << row->label << '\t' << row->impact << '\t' << (row->is_articulation ? "true" : "false") << '\t'
            << row->component_id << '\t' << row->component_size << '\n';
    }
}

inline nlohmann::ordered_json to_json(const ImpactReport& report, bool all_vertices) {
    using nlohmann::ordered_json;
    const auto& s = report.summary;
    ordered_json summary;
    summary["n"] = s.n;
    summary["m"] = s.m;
    summary["articulation_count"] = s.articulation_count;
    summary["max_impact"] = s.max_impact;
    summary["max_vertex"] = s.max_vertex ? ordered_json(report.vertices[*s.max_vertex].label) : ordered_json();

    auto vertices = ordered_json::array();
    for (const auto* row : ordered_rows(report, all_vertices)) {
        ordered_json v;
        v["label"] = row->label;
        v["impact"] = row->impact;
        v["is_articulation"] = row->is_articulation;
        v["component_id"] = row->component_id;
        v["component_size"] = row->component_size;
        vertices.push_back(std::move(v));
    }

    ordered_json doc;
    doc["summary"] = std::move(summary);
    doc["vertices"] = std::move(vertices);
    return doc;
}

inline void write_json(std::ostream& out, const ImpactReport& report, bool all_vertices) {
    out << to_json(report, all_vertices).dump(2) << '\n';
}

namespace detail {

inline std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

/// Graphviz rendering of the whole forest. Squares are boxes labeled with the
/// vertex label (bold for articulation points); rounds are ellipses labeled
/// with their sq-size. One edge statement per forest edge, parent first.
inline void export_dot(std::ostream& out, const Graph& g, const BlockForest& bf, const SqSizes& sizes) {
    auto name = [&](node_id x) {
        return bf.is_square(x) ? "s" + std::to_string(x) : "r" + std::to_string(bf.round_index(x));
    };
    out << "graph block_forest {\n";
    for (vertex_id v = 0; v < bf.square_count(); ++v) {
        out << "  " << name(v) << " [shape=box";
        if (bf.degree(v) >= 2) {
            out << ", style=bold";
        }
        out << ", label=" << detail::dot_quote(g.label(v)) << "];\n";
    }
    for (std::size_t r = 0; r < bf.round_count(); ++r) {
        const auto x = bf.round_node(r);
        out << "  " << name(x) << " [shape=ellipse, label=\"" << sizes[x] << "\"];\n";
    }
    for (node_id x = 0; x < bf.node_count(); ++x) {
        if (bf.parent(x) != kNoNode) {
            out << "  " << name(bf.parent(x)) << " -- " << name(x) << ";\n";
        }
    }
    out << "}\n";
}

}  // namespace bfimpact

#endif  // BFIMPACT_FORMAT_HPP
