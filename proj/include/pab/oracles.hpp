#pragma once

#include <numeric>
#include <optional>

#include "pab/graph.hpp"
#include "pab/guards.hpp"

namespace pab {

struct CliqueResult {
    int size = 0;
    VertexList vertices; // ascending
};

namespace detail {

// Tomita-style maximum clique: branch and bound with a greedy colouring
// bound.  All orderings are fixed (degree descending, id ascending; candidate
// lists kept sorted), so the returned witness is reproducible.
class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

    CliqueResult run() {
        int n = g_.vertex_count();
        VertexList order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
            return a < b;
        });
        VertexList current;
        expand(order, current);
        std::sort(best_.begin(), best_.end());
        return {(int)best_.size(), best_};
    }

private:
    void expand(const VertexList& candidates, VertexList& current) {
        if (candidates.empty()) {
            if (current.size() > best_.size()) best_ = current;
            return;
        }
        // greedy colouring of the candidates; colour number bounds the
        // largest clique extendable from here
        std::vector<int> colour(candidates.size());
        std::vector<VertexList> classes;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            int v = candidates[i];
            std::size_t c = 0;
            while (c < classes.size()) {
                bool clash = false;
                for (int u : classes[c])
                    if (g_.adjacent(u, v)) { clash = true; break; }
                if (!clash) break;
                ++c;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            colour[i] = (int)c + 1;
        }
        // visit candidates in colour order, highest first
        std::vector<std::size_t> idx(candidates.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
        for (std::size_t pos = idx.size(); pos-- > 0;) {
            std::size_t i = idx[pos];
            if (current.size() + colour[i] <= best_.size()) return;
            int v = candidates[i];
            VertexList next;
            for (std::size_t p = 0; p < pos; ++p) {
                int u = candidates[idx[p]];
                if (g_.adjacent(u, v)) next.push_back(u);
            }
            current.push_back(v);
            expand(next, current);
            current.pop_back();
        }
    }

    const Graph& g_;
    VertexList best_;
};

} // namespace detail

inline CliqueResult clique_number(const Graph& g, const Guards& guards = default_guards()) {
    check_guard("clique host vertex count", g.vertex_count(), guards.clique_max_vertices);
    return detail::MaxCliqueSearch(g).run();
}

inline CliqueResult max_independent_set(const Graph& g, const Guards& guards = default_guards()) {
    check_guard("independent-set host vertex count", g.vertex_count(), guards.clique_max_vertices);
    return detail::MaxCliqueSearch(complement(g)).run();
}

// ---------------------------------------------------------------------------
// Exact chromatic number
// ---------------------------------------------------------------------------

struct ColouringCertificate {
    std::vector<int> colour; // vertex -> colour id, 0-based
    int colours_used = 0;
};

inline bool is_proper_colouring(const Graph& g, const ColouringCertificate& cert) {
    if ((int)cert.colour.size() != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (cert.colour[u] == cert.colour[v]) return false;
    VertexList distinct(cert.colour.begin(), cert.colour.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return (int)distinct.size() == cert.colours_used;
}

namespace detail {

// relabel colours in order of first appearance so identical colourings
// serialize identically
inline void canonicalise_colours(ColouringCertificate& cert) {
    std::vector<int> remap(cert.colour.size(), -1);
    int next = 0;
    for (int& c : cert.colour) {
        if (c < 0) continue;
        if ((std::size_t)c >= remap.size()) remap.resize(c + 1, -1);
        if (remap[c] == -1) remap[c] = next++;
        c = remap[c];
    }
    cert.colours_used = next;
}

inline ColouringCertificate dsatur(const Graph& g) {
    int n = g.vertex_count();
    ColouringCertificate cert;
    cert.colour.assign(n, -1);
    std::vector<std::vector<char>> seen(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (cert.colour[v] != -1) continue;
            int sat = (int)std::count(seen[v].begin(), seen[v].end(), 1);
            if (pick == -1 || sat > pick_sat ||
                (sat == pick_sat && g.degree(v) > g.degree(pick)) ||
                (sat == pick_sat && g.degree(v) == g.degree(pick) && v < pick)) {
                pick = v;
                pick_sat = sat;
            }
        }
        int c = 0;
        while ((int)seen[pick].size() > c && seen[pick][c]) ++c;
        cert.colour[pick] = c;
        for (int u : g.neighbours(pick)) {
            if ((int)seen[u].size() <= c) seen[u].resize(c + 1, 0);
            seen[u][c] = 1;
        }
    }
    canonicalise_colours(cert);
    return cert;
}

// Backtracking k-colourability.  The maximum clique is pre-coloured; the
// remaining vertices branch on colours in ascending order with the usual
// fresh-colour symmetry break.
class KColouring {
public:
    KColouring(const Graph& g, int k, const VertexList& clique) : g_(g), k_(k) {
        int n = g.vertex_count();
        colour_.assign(n, -1);
        std::vector<char> fixed(n, 0);
        for (std::size_t i = 0; i < clique.size(); ++i) {
            colour_[clique[i]] = (int)i;
            fixed[clique[i]] = 1;
        }
        max_used_ = (int)clique.size() - 1;
        for (int v = 0; v < n; ++v)
            if (!fixed[v]) order_.push_back(v);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
            return a < b;
        });
    }

    std::optional<std::vector<int>> solve() {
        if (max_used_ >= k_) return std::nullopt;
        if (dfs(0)) return colour_;
        return std::nullopt;
    }

private:
    bool dfs(std::size_t pos) {
        if (pos == order_.size()) return true;
        int v = order_[pos];
        int limit = std::min(max_used_ + 1, k_ - 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int u : g_.neighbours(v))
                if (colour_[u] == c) { ok = false; break; }
            if (!ok) continue;
            colour_[v] = c;
            int saved = max_used_;
            max_used_ = std::max(max_used_, c);
            if (dfs(pos + 1)) return true;
            max_used_ = saved;
            colour_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    int max_used_;
    std::vector<int> colour_;
    VertexList order_;
};

} // namespace detail

// Exact chromatic number with a certifying colouring: clique lower bound,
// DSATUR upper bound, then k-colourability for each k in between.
inline ColouringCertificate chromatic_number(const Graph& g,
                                             const Guards& guards = default_guards()) {
    check_guard("chromatic host vertex count", g.vertex_count(), guards.chromatic_max_vertices);
    if (g.vertex_count() == 0) return {{}, 0};
    CliqueResult clique = clique_number(g, guards);
    ColouringCertificate greedy = detail::dsatur(g);
    if (clique.size == greedy.colours_used) return greedy;
    for (int k = clique.size; k < greedy.colours_used; ++k) {
        detail::KColouring search(g, k, clique.vertices);
        if (auto solved = search.solve()) {
            ColouringCertificate cert{*solved, k};
            detail::canonicalise_colours(cert);
            return cert;
        }
    }
    return greedy;
}

// ---------------------------------------------------------------------------
// Ramsey-style extraction
// ---------------------------------------------------------------------------

enum class RamseyKind { Clique, IndependentSet, Neither };

struct RamseyOutcome {
    RamseyKind kind = RamseyKind::Neither;
    VertexList vertices; // exactly p+q vertices unless Neither
};

// Finds a clique or an independent set of size >= p+q; Neither only after
// both exact searches refuse.  When both qualify the independent set wins:
// downstream extraction steps always want the independent side.
inline RamseyOutcome ramsey_extract(const Graph& g, int p, int q,
                                    const Guards& guards = default_guards()) {
    int target = p + q;
    CliqueResult ind = max_independent_set(g, guards);
    if (ind.size >= target)
        return {RamseyKind::IndependentSet, VertexList(ind.vertices.begin(),
                                                       ind.vertices.begin() + target)};
    CliqueResult cl = clique_number(g, guards);
    if (cl.size >= target)
        return {RamseyKind::Clique, VertexList(cl.vertices.begin(), cl.vertices.begin() + target)};
    return {RamseyKind::Neither, {}};
}

// ---------------------------------------------------------------------------
// Induced subgraph embedding
// ---------------------------------------------------------------------------

// Injective map from h into g preserving adjacency and non-adjacency, or
// nullopt after exhausting the search.  Pattern vertices are assigned in id
// order and host candidates tried ascending, so h == g yields the identity.
inline std::optional<std::vector<int>> induced_embedding(const Graph& h, const Graph& g,
                                                         const Guards& guards = default_guards()) {
    check_guard("embedding pattern vertex count", h.vertex_count(),
                guards.embed_pattern_max_vertices);
    int hn = h.vertex_count(), gn = g.vertex_count();
    if (hn > gn) return std::nullopt;
    std::vector<int> map(hn, -1);
    std::vector<char> used(gn, 0);

    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == hn) return true;
        for (int cand = 0; cand < gn; ++cand) {
            if (used[cand] || g.degree(cand) < h.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < v; ++w) {
                if (h.adjacent(v, w) != g.adjacent(cand, map[w])) { ok = false; break; }
            }
            if (!ok) continue;
            map[v] = cand;
            used[cand] = 1;
            if (self(self, v + 1)) return true;
            used[cand] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (dfs(dfs, 0)) return map;
    return std::nullopt;
}

} // namespace pab
