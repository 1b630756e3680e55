#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pab {

using VertexList = std::vector<int>;
using EdgeList = std::vector<std::pair<int, int>>;

// Simple undirected graph on dense vertex ids 0..n-1.  Immutable once built,
// so values can be shared freely across workers.  Adjacency is kept as packed
// bit rows; the exact solvers intersect neighbourhoods wordwise.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), words_(word_count(n)), bits_((std::size_t)n * word_count(n), 0) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    }

    Graph(int n, const EdgeList& edges) : Graph(n) {
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
            set_edge(u, v);
        }
    }

    int vertex_count() const { return n_; }

    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[(std::size_t)u * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const { return degree_[v]; }

    VertexList neighbours(int v) const {
        VertexList out;
        out.reserve(degree_[v]);
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = r[w];
            while (word) {
                int bit = std::countr_zero(word);
                out.push_back(w * 64 + bit);
                word &= word - 1;
            }
        }
        return out;
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    EdgeList edges() const {
        EdgeList out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : neighbours(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    int words() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + (std::size_t)v * words_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    static int word_count(int n) { return (n + 63) / 64; }

    void set_edge(int u, int v) {
        if (adjacent(u, v)) return;
        bits_[(std::size_t)u * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        bits_[(std::size_t)v * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
        degree_.resize(n_, 0);
        ++degree_[u];
        ++degree_[v];
        ++m_;
    }

    int n_ = 0;
    int words_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_ = {};
};

inline Graph build_graph(int n, const EdgeList& edges) { return Graph(n, edges); }

struct InducedSubgraph {
    Graph graph;
    VertexList vertices; // vertices[i] = id in the host of local vertex i, ascending
};

// Extracts g[verts]; the id mapping is recorded so results can be translated
// back to host ids.  Vertices are deduplicated and sorted.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexList verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                        " out of range");
    EdgeList edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) edges.emplace_back((int)i, (int)j);
    return {Graph((int)verts.size(), edges), std::move(verts)};
}

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline bool is_independent_set(const Graph& g, const VertexList& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexList& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool is_complete_between(const Graph& g, const VertexList& s, const VertexList& t) {
    for (int u : s)
        for (int v : t)
            if (u != v && !g.adjacent(u, v)) return false;
    return true;
}

inline bool is_anticomplete_between(const Graph& g, const VertexList& s, const VertexList& t) {
    for (int u : s)
        for (int v : t)
            if (g.adjacent(u, v)) return false;
    return true;
}

inline int neighbour_count(const Graph& g, int v, const VertexList& s) {
    int c = 0;
    for (int u : s)
        if (g.adjacent(v, u)) ++c;
    return c;
}

inline int non_neighbour_count(const Graph& g, int v, const VertexList& s) {
    int c = 0;
    for (int u : s)
        if (u != v && !g.adjacent(v, u)) ++c;
    return c;
}

// N(S): vertices outside S with a neighbour in S, ascending.
inline VertexList set_neighbourhood(const Graph& g, const VertexList& s) {
    std::vector<char> in_s(g.vertex_count(), 0), hit(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;
    for (int v : s)
        for (int u : g.neighbours(v))
            if (!in_s[u]) hit[u] = 1;
    VertexList out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (hit[v]) out.push_back(v);
    return out;
}

// Vertices adjacent to every member of S, excluding S itself, ascending.
inline VertexList common_neighbours(const Graph& g, const VertexList& s) {
    VertexList out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        bool all = true;
        for (int u : s)
            if (!g.adjacent(v, u)) { all = false; break; }
        if (all) out.push_back(v);
    }
    return out;
}

// Components sorted internally and ordered by smallest member.
inline std::vector<VertexList> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexList> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        VertexList stack{start}, members;
        comp[start] = (int)out.size();
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : g.neighbours(v))
                if (comp[u] == -1) {
                    comp[u] = comp[start];
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return connected_components(g).size() == 1;
}

inline bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

} // namespace pab
