#ifndef BFIMPACT_IO_HPP
#define BFIMPACT_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bfimpact/graph.hpp"

namespace bfimpact {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParseResult {
    Graph graph;
    DropCounts dropped;
};

enum class InputFormat { edge_list, dimacs };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const auto start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view token) {
    if (token.empty() || token.size() > 19) {
        return std::nullopt;
    }
    std::uint64_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

}  // namespace detail

/// Reads whitespace-separated "u v" lines. Blank lines and lines whose first
/// non-blank character is '#' are skipped. A line "v <label>" declares a
/// vertex without adding edges, which is how isolated vertices are written.
/// Vertex ids are assigned in order of first appearance.
inline ParseResult parse_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, vertex_id> index;
    std::vector<Edge> raw;

    auto intern = [&](std::string_view label) {
        auto [it, inserted] = index.try_emplace(std::string(label), static_cast<vertex_id>(labels.size()));
        if (inserted) {
            labels.emplace_back(label);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = detail::split_ws(line);
        if (tokens.empty() || tokens.front().starts_with('#')) {
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected 2 tokens, got " + std::to_string(tokens.size()));
        }
        if (tokens[0] == "v") {
            intern(tokens[1]);
            continue;
        }
        const auto u = intern(tokens[0]);
        const auto v = intern(tokens[1]);
        raw.push_back({u, v});
    }

    ParseResult result;
    result.graph = Graph::from_edges(std::move(labels), raw, &result.dropped);
    return result;
}

inline ParseResult parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

/// DIMACS "p edge n m" format with 1-based "e u v" lines. Vertex labels are
/// the 1-based ids as written. The declared edge count is informational only.
inline ParseResult parse_dimacs(std::istream& in) {
    std::optional<std::uint64_t> n;
    std::vector<Edge> raw;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = detail::split_ws(line);
        if (tokens.empty() || tokens.front() == "c") {
            continue;
        }
        const auto kind = tokens.front();
        if (kind == "p") {
            if (n) {
                throw ParseError(line_no, "duplicate 'p' line");
            }
            if (tokens.size() != 4 || tokens[1] != "edge") {
                throw ParseError(line_no, "expected 'p edge <n> <m>'");
            }
            const auto nv = detail::parse_uint(tokens[2]);
            const auto mv = detail::parse_uint(tokens[3]);
            if (!nv || !mv) {
                throw ParseError(line_no, "invalid vertex or edge count");
            }
            if (*nv >= kNoVertex) {
                throw ParseError(line_no, "vertex count too large");
            }
            n = nv;
            raw.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(*mv, 1u << 24)));
            continue;
        }
        if (kind != "e") {
            throw ParseError(line_no, "unexpected line type '" + std::string(kind) + "'");
        }
        if (!n) {
            throw ParseError(line_no, "edge before 'p' line");
        }
        if (tokens.size() != 3) {
            throw ParseError(line_no, "expected 'e <u> <v>'");
        }
        const auto u = detail::parse_uint(tokens[1]);
        const auto v = detail::parse_uint(tokens[2]);
        if (!u || !v) {
            throw ParseError(line_no, "invalid vertex id");
        }
        if (*u < 1 || *u > *n || *v < 1 || *v > *n) {
            throw ParseError(line_no, "vertex id out of range [1, " + std::to_string(*n) + "]");
        }
        raw.push_back({static_cast<vertex_id>(*u - 1), static_cast<vertex_id>(*v - 1)});
    }
    if (!n) {
        throw ParseError(line_no, "missing 'p' line");
    }

    std::vector<std::string> labels;
    labels.reserve(*n);
    for (std::uint64_t i = 1; i <= *n; ++i) {
        labels.push_back(std::to_string(i));
    }
    ParseResult result;
    result.graph = Graph::from_edges(std::move(labels), raw, &result.dropped);
    return result;
}

inline ParseResult parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

inline ParseResult parse_graph(std::istream& in, InputFormat format) {
    return format == InputFormat::dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

}  // namespace bfimpact

#endif  // BFIMPACT_IO_HPP
