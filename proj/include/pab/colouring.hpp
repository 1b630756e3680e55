#pragma once

#include <functional>
#include <string>

#include "pab/attachment.hpp"
#include "pab/errors.hpp"
#include "pab/graph.hpp"
#include "pab/multipartite.hpp"
#include "pab/oracles.hpp"

namespace pab {

using SubColourer = std::function<ColouringCertificate(const Graph&)>;

inline SubColourer exact_subcolourer(const Guards& guards = default_guards()) {
    return [guards](const Graph& g) { return chromatic_number(g, guards); };
}

struct DominatingColouring {
    ColouringCertificate certificate;
    VertexList dominating_set;
    int tau = 0;    // max colours any dominator's neighbourhood needed
    int budget = 0; // (1 + tau) * (a + 1) * omega
    int omega = 0;
};

// The dominating-set branch: S takes a+1 vertices from each part, every
// vertex outside S is assigned to its first dominator, each dominator's
// assigned neighbourhood (clique number at most omega-1) is coloured by the
// recursive colourer in its own palette block, and S itself gets unique
// colours.  Total: at most (1+tau)(a+1)*omega colours.
//
// Preconditions: every part has at least a+1 vertices and the attachment
// partition has an empty A class.  A dominating-set failure is a structured
// error: it means the partition precondition was breached.
inline DominatingColouring dominating_colouring(const Graph& g, const Template& X, int a,
                                                const SubColourer& subcolour,
                                                const Guards& guards = default_guards()) {
    for (const auto& part : X.parts)
        if ((int)part.size() < a + 1)
            throw PreconditionError("dominating_colouring: every part needs >= a+1 vertices");
    AttachmentPartition partition = partition_attachment(g, X, a);
    if (!partition.A_free.empty())
        throw PreconditionError("dominating_colouring: the A class is nonempty (" +
                                std::to_string(partition.A_free.size()) +
                                " vertices); use the cutset analysis instead");

    DominatingColouring out;
    out.omega = clique_number(g, guards).size;
    if (X.r() > out.omega)
        throw StructureError("dominating_colouring: template has more parts than the clique "
                             "number allows");

    VertexList S;
    for (const auto& part : X.parts) S.insert(S.end(), part.begin(), part.begin() + (a + 1));
    std::sort(S.begin(), S.end());
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : S) in_s[v] = 1;

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_s[v]) continue;
        bool dominated = false;
        for (int u : g.neighbours(v))
            if (in_s[u]) { dominated = true; break; }
        if (!dominated)
            throw StructureError("dominating_colouring: S fails to dominate vertex " +
                                 std::to_string(v));
    }

    // assign every outside vertex to its first dominator
    std::vector<VertexList> assigned(S.size());
    std::vector<char> taken(g.vertex_count(), 0);
    for (std::size_t d = 0; d < S.size(); ++d)
        for (int u : g.neighbours(S[d]))
            if (!in_s[u] && !taken[u]) {
                taken[u] = 1;
                assigned[d].push_back(u);
            }

    std::vector<ColouringCertificate> locals(S.size());
    for (std::size_t d = 0; d < S.size(); ++d) {
        if (assigned[d].empty()) continue;
        InducedSubgraph sub = induced_subgraph(g, assigned[d]);
        int w = clique_number(sub.graph, guards).size;
        if (w > out.omega - 1)
            throw StructureError("dominating_colouring: a dominator's neighbourhood has clique "
                                 "number " + std::to_string(w));
        locals[d] = subcolour(sub.graph);
        if (!is_proper_colouring(sub.graph, locals[d]))
            throw StructureError("dominating_colouring: subcolourer returned an improper "
                                 "colouring");
        out.tau = std::max(out.tau, locals[d].colours_used);
    }

    out.certificate.colour.assign(g.vertex_count(), -1);
    for (std::size_t d = 0; d < S.size(); ++d) out.certificate.colour[S[d]] = (int)d;
    for (std::size_t d = 0; d < S.size(); ++d) {
        InducedSubgraph sub = induced_subgraph(g, assigned[d]);
        for (std::size_t local = 0; local < sub.vertices.size(); ++local)
            out.certificate.colour[sub.vertices[local]] =
                (int)S.size() + (int)d * out.tau + locals[d].colour[local];
    }
    detail::canonicalise_colours(out.certificate);
    out.budget = (1 + out.tau) * (a + 1) * out.omega;
    if (!is_proper_colouring(g, out.certificate))
        throw StructureError("dominating_colouring: assembled certificate is improper");
    if (out.certificate.colours_used > out.budget)
        throw StructureError("dominating_colouring: certificate exceeds the colour budget");
    out.dominating_set = std::move(S);
    return out;
}

struct DegeneracyColouring {
    ColouringCertificate certificate;
    VertexList peel_order;   // the order vertices were removed
    int max_min_degree = 0;  // largest minimum degree seen while peeling
};

// The degeneracy: the largest minimum degree any peeling stage exhibits.
inline int graph_degeneracy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int worst = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        worst = std::max(worst, deg[pick]);
        removed[pick] = 1;
        for (int u : g.neighbours(pick))
            if (!removed[u]) --deg[u];
    }
    return worst;
}

// Min-degree peeling plus greedy colouring along the reverse order.  If some
// stage has minimum degree >= d the graph is not (d-1)-degenerate and a
// structured error names that stage; otherwise every vertex sees at most d-1
// earlier neighbours, so at most d colours are used.
inline DegeneracyColouring degeneracy_colouring(const Graph& g, int d) {
    if (d < 1) throw PreconditionError("degeneracy_colouring: d must be >= 1");
    DegeneracyColouring out;
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        out.max_min_degree = std::max(out.max_min_degree, deg[pick]);
        if (deg[pick] >= d)
            throw StructureError("degeneracy_colouring: peeling reached a subgraph of minimum "
                                 "degree " + std::to_string(deg[pick]) +
                                 "; the graph is not " + std::to_string(d - 1) + "-degenerate");
        removed[pick] = 1;
        out.peel_order.push_back(pick);
        for (int u : g.neighbours(pick))
            if (!removed[u]) --deg[u];
    }

    out.certificate.colour.assign(n, -1);
    for (auto it = out.peel_order.rbegin(); it != out.peel_order.rend(); ++it) {
        int v = *it;
        std::vector<char> used(d + 1, 0);
        for (int u : g.neighbours(v))
            if (out.certificate.colour[u] >= 0 && out.certificate.colour[u] <= d)
                used[out.certificate.colour[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        out.certificate.colour[v] = c;
    }
    detail::canonicalise_colours(out.certificate);
    if (out.certificate.colours_used > d)
        throw StructureError("degeneracy_colouring: greedy colouring exceeded d colours");
    if (!is_proper_colouring(g, out.certificate))
        throw StructureError("degeneracy_colouring: certificate is improper");
    return out;
}

} // namespace pab
