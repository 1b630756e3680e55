#pragma once

#include <map>
#include <optional>
#include <string>

#include "pab/errors.hpp"
#include "pab/graph.hpp"
#include "pab/guards.hpp"
#include "pab/oracles.hpp"
#include "pab/trace.hpp"

namespace pab {

// A complete r-partite induced subgraph of a host graph: disjoint nonempty
// independent parts, pairwise complete.
struct Template {
    std::vector<VertexList> parts;

    int r() const { return (int)parts.size(); }

    VertexList all_vertices() const {
        VertexList out;
        for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct TemplateCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

inline TemplateCheck verify_template(const Graph& g, const Template& X) {
    auto fail = [](std::string r) { return TemplateCheck{false, std::move(r)}; };
    std::vector<char> seen(g.vertex_count(), 0);
    for (std::size_t i = 0; i < X.parts.size(); ++i) {
        const auto& part = X.parts[i];
        if (part.empty()) return fail("part " + std::to_string(i) + " is empty");
        for (int v : part) {
            if (v < 0 || v >= g.vertex_count()) return fail("vertex out of range");
            if (seen[v]) return fail("parts are not disjoint");
            seen[v] = 1;
        }
        if (!is_independent_set(g, part))
            return fail("part " + std::to_string(i) + " is not independent");
    }
    for (std::size_t i = 0; i < X.parts.size(); ++i)
        for (std::size_t j = i + 1; j < X.parts.size(); ++j)
            if (!is_complete_between(g, X.parts[i], X.parts[j]))
                return fail("parts " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not complete to each other");
    return {};
}

// ---------------------------------------------------------------------------
// K_{s,s} (not necessarily induced)
// ---------------------------------------------------------------------------

struct Kss {
    VertexList left, right;
};

// Two disjoint s-sets with every left-right pair adjacent.  Left sets are
// enumerated ascending with the candidate right side (the common
// neighbourhood) pruned as the left side grows.
inline std::optional<Kss> find_kss(const Graph& g, int s,
                                   const Guards& guards = default_guards()) {
    if (s < 1) throw PreconditionError("find_kss: s must be >= 1");
    check_guard("kss host vertex count", g.vertex_count(), guards.kss_host_max_vertices);
    int n = g.vertex_count();
    VertexList left;
    std::vector<char> in_left(n, 0);

    auto common = [&](const VertexList& side) {
        VertexList out;
        for (int v = 0; v < n; ++v) {
            if (in_left[v]) continue;
            bool all = true;
            for (int u : side)
                if (!g.adjacent(u, v)) { all = false; break; }
            if (all) out.push_back(v);
        }
        return out;
    };

    auto dfs = [&](auto&& self, int min_next) -> std::optional<Kss> {
        if ((int)left.size() == s) {
            VertexList right = common(left);
            if ((int)right.size() >= s)
                return Kss{left, VertexList(right.begin(), right.begin() + s)};
            return std::nullopt;
        }
        for (int v = min_next; v < n; ++v) {
            if (g.degree(v) < s) continue;
            left.push_back(v);
            in_left[v] = 1;
            // prune: the common neighbourhood must stay big enough
            if ((int)common(left).size() >= s) {
                if (auto found = self(self, v + 1)) return found;
            }
            in_left[v] = 0;
            left.pop_back();
        }
        return std::nullopt;
    };
    return dfs(dfs, 0);
}

// ---------------------------------------------------------------------------
// Induced K_{f,f} inside a (not necessarily induced) K_{s,s}
// ---------------------------------------------------------------------------

struct BicliqueExtraction {
    bool found = false;
    VertexList left, right; // independent f-sets, complete to each other
    std::string diagnostic;
};

// Runs the Ramsey extraction inside each side to find an independent f-subset
// (a side of a complete bipartite subgraph has small clique number, so at
// scale the independent side is the one that must appear).  The result is
// re-verified induced before being returned.
inline BicliqueExtraction extract_induced_biclique(const Graph& g, const VertexList& U,
                                                   const VertexList& W, int f,
                                                   const Guards& guards = default_guards()) {
    if (f < 1) throw PreconditionError("extract_induced_biclique: f must be >= 1");
    for (int u : U)
        for (int w : W)
            if (u == w || !g.adjacent(u, w))
                throw PreconditionError("extract_induced_biclique: sides are not complete");

    BicliqueExtraction out;
    VertexList sides[2];
    const VertexList* input[2] = {&U, &W};
    for (int side = 0; side < 2; ++side) {
        InducedSubgraph sub = induced_subgraph(g, *input[side]);
        RamseyOutcome got = ramsey_extract(sub.graph, 0, f, guards);
        if (got.kind != RamseyKind::IndependentSet) {
            out.diagnostic = std::string("side ") + (side == 0 ? "U" : "W") +
                             " has no independent subset of size " + std::to_string(f) +
                             " (largest independent set: " +
                             std::to_string(max_independent_set(sub.graph, guards).size) + ")";
            return out;
        }
        for (int local : got.vertices) sides[side].push_back(sub.vertices[local]);
    }
    out.left = sides[0];
    out.right = sides[1];
    out.found = is_independent_set(g, out.left) && is_independent_set(g, out.right) &&
                is_complete_between(g, out.left, out.right);
    if (!out.found) out.diagnostic = "extracted sides failed the induced check";
    return out;
}

// ---------------------------------------------------------------------------
// Largest template under the part-size law
// ---------------------------------------------------------------------------

struct MaxTemplateResult {
    bool found = false;
    Template tmpl;
    std::string diagnostic;
};

namespace detail {

// Finds r disjoint independent s-sets, pairwise complete, as an induced
// complete r-partite subgraph.  Parts are interchangeable, so they are
// ordered by smallest member; within a part vertices ascend.
class MultipartiteSearch {
public:
    MultipartiteSearch(const Graph& g, int r, int s) : g_(g), r_(r), s_(s) {
        in_use_.assign(g.vertex_count(), 0);
    }

    std::optional<Template> run() {
        Template t;
        if (place_part(t, 0)) return found_;
        return std::nullopt;
    }

private:
    bool place_part(Template& t, int min_start) {
        if (t.r() == r_) {
            found_ = t;
            return true;
        }
        // candidates: adjacent to every vertex of every placed part
        VertexList cands;
        for (int v = min_start; v < g_.vertex_count(); ++v) {
            if (in_use_[v]) continue;
            bool ok = true;
            for (const auto& part : t.parts)
                for (int u : part)
                    if (!g_.adjacent(u, v)) { ok = false; break; }
            if (ok) cands.push_back(v);
        }
        if ((int)cands.size() < s_ * (r_ - t.r())) return false;
        VertexList part;
        return grow_part(t, cands, 0, part);
    }

    bool grow_part(Template& t, const VertexList& cands, std::size_t from, VertexList& part) {
        if ((int)part.size() == s_) {
            t.parts.push_back(part);
            for (int v : part) in_use_[v] = 1;
            // the next part's smallest member must exceed this part's,
            // otherwise the same partition is enumerated r! times
            bool done = place_part(t, part.front() + 1);
            if (!done) {
                for (int v : part) in_use_[v] = 0;
                t.parts.pop_back();
            }
            return done;
        }
        for (std::size_t i = from; i < cands.size(); ++i) {
            int v = cands[i];
            bool indep = true;
            for (int u : part)
                if (g_.adjacent(u, v)) { indep = false; break; }
            if (!indep) continue;
            if ((int)(cands.size() - i) < s_ - (int)part.size()) break;
            part.push_back(v);
            if (grow_part(t, cands, i + 1, part)) return true;
            part.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int r_, s_;
    std::vector<char> in_use_;
    Template found_;
};

} // namespace detail

// Largest r such that the host contains an induced complete r-partite graph
// whose parts all have size exactly f - a(r-2); r is also capped by the
// clique number and stops before the size law goes nonpositive.  Existence is
// not monotone in r (bigger r means smaller parts), so every admissible r is
// tried from the top.
inline MaxTemplateResult max_template(const Graph& g, int f, int a,
                                      const Guards& guards = default_guards()) {
    if (a < 1 || f < a + 2) throw PreconditionError("max_template: need a >= 1 and f >= a+2");
    MaxTemplateResult out;
    int omega = clique_number(g, guards).size;
    int r_cap = omega;
    while (r_cap > 2 && f - a * (r_cap - 2) < 1) --r_cap;
    for (int r = r_cap; r >= 2; --r) {
        int size = f - a * (r - 2);
        if (size < 1 || (long long)r * size > g.vertex_count()) continue;
        detail::MultipartiteSearch search(g, r, size);
        if (auto t = search.run()) {
            out.found = true;
            out.tmpl = *t;
            return out;
        }
    }
    out.diagnostic = "no induced complete bipartite subgraph with parts of size " +
                     std::to_string(f) + "; route to the degeneracy branch";
    return out;
}

// ---------------------------------------------------------------------------
// Template growth from a nearly disconnected set
// ---------------------------------------------------------------------------

struct GrowResult {
    bool grown = false;
    Template tmpl;
    std::string reason;          // when !grown
    int best_class_size = 0;     // largest trace class seen
    int best_independent = 0;    // largest independent set inside any class
};

// Grows an r-partite template (parts of size exactly s+a, every z in Z with
// at most a non-neighbours per part) into an (r+1)-partite one with parts of
// size >= s: bucket Z by exact neighbourhood trace on X, take an independent
// set of size >= s inside a bucket, and delete its common non-neighbours
// (at most a per part) from every part.
inline GrowResult grow_template(const Graph& g, const Template& X, const VertexList& Z, int s,
                                int a, const Guards& guards = default_guards()) {
    if (s < 1 || a < 0) throw PreconditionError("grow_template: need s >= 1 and a >= 0");
    TemplateCheck tc = verify_template(g, X);
    if (!tc) throw PreconditionError("grow_template: not a template: " + tc.reason);
    for (const auto& part : X.parts)
        if ((int)part.size() != s + a)
            throw PreconditionError("grow_template: every part must have size exactly s+a");
    std::vector<char> in_x(g.vertex_count(), 0);
    for (const auto& part : X.parts)
        for (int v : part) in_x[v] = 1;
    for (int z : Z) {
        if (z < 0 || z >= g.vertex_count() || in_x[z])
            throw PreconditionError("grow_template: Z overlaps the template");
        for (const auto& part : X.parts)
            if (non_neighbour_count(g, z, part) > a)
                throw PreconditionError("grow_template: vertex " + std::to_string(z) +
                                        " is not a-disconnected to every part");
    }

    GrowResult out;
    if (Z.empty()) {
        out.reason = "Z is empty";
        return out;
    }

    // exact trace-class bucketing: key = the neighbourhood inside X
    VertexList x_all = X.all_vertices();
    std::map<std::vector<char>, VertexList> classes;
    for (int z : Z) {
        std::vector<char> key;
        key.reserve(x_all.size());
        for (int x : x_all) key.push_back(g.adjacent(z, x) ? 1 : 0);
        classes[key].push_back(z);
    }
    std::vector<const VertexList*> ordered;
    for (const auto& [key, members] : classes) ordered.push_back(&members);
    std::sort(ordered.begin(), ordered.end(), [](const VertexList* a, const VertexList* b) {
        if (a->size() != b->size()) return a->size() > b->size();
        return a->front() < b->front();
    });

    for (const VertexList* cls : ordered) {
        out.best_class_size = std::max(out.best_class_size, (int)cls->size());
        InducedSubgraph sub = induced_subgraph(g, *cls);
        CliqueResult mis = max_independent_set(sub.graph, guards);
        out.best_independent = std::max(out.best_independent, mis.size);
        if (mis.size < s) continue;

        VertexList I;
        for (int local : mis.vertices) I.push_back(sub.vertices[local]);
        std::sort(I.begin(), I.end());
        // all of I shares one trace, so the non-neighbours to delete are the
        // same for every member
        Template grown;
        for (const auto& part : X.parts) {
            VertexList trimmed;
            for (int x : part)
                if (g.adjacent(I.front(), x)) trimmed.push_back(x);
            grown.parts.push_back(trimmed);
        }
        grown.parts.push_back(I);
        TemplateCheck check = verify_template(g, grown);
        if (!check)
            throw StructureError("grow_template: grown template failed verification: " +
                                 check.reason);
        for (const auto& part : grown.parts)
            if ((int)part.size() < s)
                throw StructureError("grow_template: a grown part fell below s");
        out.grown = true;
        out.tmpl = std::move(grown);
        return out;
    }
    out.reason = "no trace class yields an independent set of size " + std::to_string(s) +
                 " (best class size " + std::to_string(out.best_class_size) +
                 ", best independent set " + std::to_string(out.best_independent) + ")";
    return out;
}

} // namespace pab
