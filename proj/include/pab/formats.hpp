#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "pab/graph.hpp"

namespace pab {

enum class FormatErrorKind {
    EmptyInput,
    BadHeader,      // graph6 ">>...<<" prefix or DIMACS "p edge n m" line
    InvalidByte,    // graph6 byte outside the printable range
    Truncated,      // bit vector / edge lines end early
    TrailingJunk,   // extra bytes after a complete graph
    BadPadding,     // nonzero pad bits (would break bit-exact round trips)
    BadToken,       // unparsable token in a text format
    OutOfRange,     // endpoint outside 1..n / 0..n-1
    SelfLoop,
    BadEdgeCount,   // DIMACS declared m != number of e-lines
};

class FormatError : public std::runtime_error {
public:
    FormatError(FormatErrorKind kind, std::size_t offset, const std::string& what)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          kind_(kind), offset_(offset) {}

    FormatErrorKind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

private:
    FormatErrorKind kind_;
    std::size_t offset_;
};

namespace detail {

inline std::string_view strip_line_ending(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

} // namespace detail

// ---------------------------------------------------------------------------
// graph6 (the nauty byte format).  Layout: optional ">>graph6<<" header, then
// N(n), then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six
// bits per byte, most significant bit first, zero-padded, each six-bit group
// offset by 63.  N(n) is one byte n+63 for n <= 62, or 126 followed by three
// bytes (18 bits) for n <= 258047, or 126 126 followed by six bytes (36 bits).
// ---------------------------------------------------------------------------

inline Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.size() >= 2 && text.substr(0, 2) == ">>") {
        constexpr std::string_view header = ">>graph6<<";
        if (text.substr(0, header.size()) != header)
            throw FormatError(FormatErrorKind::BadHeader, 0, "malformed graph6 header");
        text.remove_prefix(header.size());
        base = header.size();
    }
    text = detail::strip_line_ending(text);
    if (text.empty())
        throw FormatError(FormatErrorKind::EmptyInput, base, "empty graph6 input");

    std::size_t pos = 0;
    auto data_byte = [&](std::size_t i) -> int {
        unsigned char c = (unsigned char)text[i];
        if (c < 63 || c > 126)
            throw FormatError(FormatErrorKind::InvalidByte, base + i,
                              "graph6 byte out of range: " + std::to_string((int)c));
        return c - 63;
    };

    long long n = 0;
    if (data_byte(0) < 63) {
        n = data_byte(0);
        pos = 1;
    } else { // first byte is 126
        if (text.size() < 2)
            throw FormatError(FormatErrorKind::Truncated, base + 1, "graph6 size field truncated");
        if ((unsigned char)text[1] == 126) {
            if (text.size() < 8)
                throw FormatError(FormatErrorKind::Truncated, base + text.size(),
                                  "graph6 size field truncated");
            for (int i = 2; i < 8; ++i) n = (n << 6) | data_byte(i);
            pos = 8;
        } else {
            if (text.size() < 4)
                throw FormatError(FormatErrorKind::Truncated, base + text.size(),
                                  "graph6 size field truncated");
            for (int i = 1; i < 4; ++i) n = (n << 6) | data_byte(i);
            pos = 4;
        }
    }
    if (n > (1 << 20))
        throw FormatError(FormatErrorKind::OutOfRange, base, "graph6 vertex count too large");

    long long npairs = n * (n - 1) / 2;
    std::size_t ngroups = (std::size_t)((npairs + 5) / 6);
    if (text.size() - pos < ngroups)
        throw FormatError(FormatErrorKind::Truncated, base + text.size(),
                          "graph6 bit vector truncated: expected " + std::to_string(ngroups) +
                              " data bytes, got " + std::to_string(text.size() - pos));
    if (text.size() - pos > ngroups)
        throw FormatError(FormatErrorKind::TrailingJunk, base + pos + ngroups,
                          "trailing bytes after graph6 bit vector");

    EdgeList edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int group = data_byte(pos + (std::size_t)(bit / 6));
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // pad bits must be zero or emit(parse(x)) would not reproduce x
    for (long long pad = bit; pad < (long long)ngroups * 6; ++pad) {
        int group = data_byte(pos + (std::size_t)(pad / 6));
        if ((group >> (5 - pad % 6)) & 1)
            throw FormatError(FormatErrorKind::BadPadding, base + pos + (std::size_t)(pad / 6),
                              "nonzero graph6 padding bits");
    }
    return Graph((int)n, edges);
}

inline std::string emit_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else if (n <= 258047) {
        out.push_back((char)126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back((char)(((n >> shift) & 63) + 63));
    } else {
        out.push_back((char)126);
        out.push_back((char)126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back((char)(((n >> shift) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back((char)(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back((char)((acc << (6 - nbits)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// DIMACS colouring format: optional "c" comment lines, one "p edge n m"
// line, then exactly m lines "e u v" with 1-indexed endpoints.
// ---------------------------------------------------------------------------

inline Graph parse_dimacs(std::string_view text) {
    if (detail::strip_line_ending(text).empty())
        throw FormatError(FormatErrorKind::EmptyInput, 0, "empty DIMACS input");
    std::istringstream in{std::string(text)};
    std::string line;
    long long n = -1, m = -1, seen = 0;
    std::size_t offset = 0;
    EdgeList edges;
    while (std::getline(in, line)) {
        std::size_t line_offset = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            if (n >= 0)
                throw FormatError(FormatErrorKind::BadHeader, line_offset,
                                  "duplicate DIMACS problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw FormatError(FormatErrorKind::BadHeader, line_offset,
                                  "malformed problem line, expected 'p edge n m'");
        } else if (tag == "e") {
            if (n < 0)
                throw FormatError(FormatErrorKind::BadHeader, line_offset,
                                  "edge line before problem line");
            long long u, v;
            if (!(ls >> u >> v))
                throw FormatError(FormatErrorKind::BadToken, line_offset,
                                  "malformed edge line: " + line);
            if (u < 1 || u > n || v < 1 || v > n)
                throw FormatError(FormatErrorKind::OutOfRange, line_offset,
                                  "edge endpoint outside 1.." + std::to_string(n));
            if (u == v)
                throw FormatError(FormatErrorKind::SelfLoop, line_offset, "self-loop in edge line");
            edges.emplace_back((int)u - 1, (int)v - 1);
            ++seen;
        } else {
            throw FormatError(FormatErrorKind::BadToken, line_offset,
                              "unknown DIMACS line tag: " + tag);
        }
    }
    if (n < 0) throw FormatError(FormatErrorKind::BadHeader, 0, "missing DIMACS problem line");
    if (seen != m)
        throw FormatError(FormatErrorKind::BadEdgeCount, 0,
                          "declared " + std::to_string(m) + " edges but found " +
                              std::to_string(seen));
    return Graph((int)n, edges);
}

inline std::string emit_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Plain edge list: one "u v" pair per line, 0-indexed; the vertex count is
// max endpoint + 1 (trailing isolated vertices are not representable).
// ---------------------------------------------------------------------------

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t offset = 0;
    EdgeList edges;
    int n = 0;
    while (std::getline(in, line)) {
        std::size_t line_offset = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v))
            throw FormatError(FormatErrorKind::BadToken, line_offset,
                              "malformed edge-list line: " + line);
        if (u < 0 || v < 0)
            throw FormatError(FormatErrorKind::OutOfRange, line_offset, "negative vertex id");
        if (u == v) throw FormatError(FormatErrorKind::SelfLoop, line_offset, "self-loop");
        edges.emplace_back((int)u, (int)v);
        n = std::max(n, (int)std::max(u, v) + 1);
    }
    return Graph(n, edges);
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

enum class GraphFormat { Graph6, Dimacs, EdgeList };

inline Graph parse_graph(std::string_view text, GraphFormat f) {
    switch (f) {
        case GraphFormat::Graph6: return parse_graph6(text);
        case GraphFormat::Dimacs: return parse_dimacs(text);
        default: return parse_edge_list(text);
    }
}

inline std::string emit_graph(const Graph& g, GraphFormat f) {
    switch (f) {
        case GraphFormat::Graph6: return emit_graph6(g);
        case GraphFormat::Dimacs: return emit_dimacs(g);
        default: return emit_edge_list(g);
    }
}

} // namespace pab
