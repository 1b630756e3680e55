#pragma once

#include <map>
#include <optional>
#include <string>

#include "pab/errors.hpp"
#include "pab/graph.hpp"
#include "pab/multipartite.hpp"
#include "pab/pattern.hpp"
#include "pab/trace.hpp"
#include "pab/witness.hpp"

namespace pab {

// ---------------------------------------------------------------------------
// Adjacency trichotomy against a complete pair of independent sets
// ---------------------------------------------------------------------------

enum class TrichotomyKind {
    Exempt,         // fewer than a non-neighbours in A: the dichotomy does not apply
    OneConnected,   // at most one neighbour in B
    NearlyComplete, // at most a-1 non-neighbours in B
    Violation,      // two neighbours and a non-neighbours in B: forbidden copy exists
};

struct TrichotomyVerdict {
    TrichotomyKind kind;
    std::optional<SubdivisionWitness> witness; // the explicit P(a,a) copy on violation
};

// A vertex with >= a non-neighbours in A is either 1-connected or
// (a-1)-disconnected to B; anything else yields an explicit induced P(a,a):
// apex v, pair = two B-neighbours, A-part = a non-neighbours in A, B-part =
// a non-neighbours in B.  Selections are lowest-id, so verdicts replay.
inline TrichotomyVerdict check_adjacency_trichotomy(const Graph& g, const VertexList& a_set,
                                                    const VertexList& b_set, int v, int a) {
    if (a < 1) throw PreconditionError("check_adjacency_trichotomy: a must be >= 1");
    if (!is_independent_set(g, a_set))
        throw PreconditionError("check_adjacency_trichotomy: A_set is not independent");
    if (!is_independent_set(g, b_set))
        throw PreconditionError("check_adjacency_trichotomy: B_set is not independent");
    if (!is_complete_between(g, a_set, b_set))
        throw PreconditionError("check_adjacency_trichotomy: A_set is not complete to B_set");
    for (int u : a_set)
        if (u == v) throw PreconditionError("check_adjacency_trichotomy: v lies in A_set");
    for (int u : b_set)
        if (u == v) throw PreconditionError("check_adjacency_trichotomy: v lies in B_set");

    if (non_neighbour_count(g, v, a_set) < a) return {TrichotomyKind::Exempt, std::nullopt};
    if (neighbour_count(g, v, b_set) <= 1) return {TrichotomyKind::OneConnected, std::nullopt};
    if (non_neighbour_count(g, v, b_set) <= a - 1)
        return {TrichotomyKind::NearlyComplete, std::nullopt};

    VertexList a_miss, b_hit, b_miss;
    for (int u : a_set)
        if (!g.adjacent(v, u) && (int)a_miss.size() < a) a_miss.push_back(u);
    for (int u : b_set) {
        if (g.adjacent(v, u) && (int)b_hit.size() < 2) b_hit.push_back(u);
        if (!g.adjacent(v, u) && (int)b_miss.size() < a) b_miss.push_back(u);
    }

    SubdivisionWitness w;
    w.branch_map.assign(3 + 2 * a, -1);
    w.branch_map[0] = v;
    w.branch_map[1] = std::min(b_hit[0], b_hit[1]);
    w.branch_map[2] = std::max(b_hit[0], b_hit[1]);
    for (int i = 0; i < a; ++i) w.branch_map[3 + i] = a_miss[i];
    for (int i = 0; i < a; ++i) w.branch_map[3 + a + i] = b_miss[i];
    PatternPab pattern = gen_pattern(a, a);
    for (auto [pu, pv] : pattern.underlying.edges())
        w.paths[{pu, pv}] = {w.branch_map[pu], w.branch_map[pv]};
    return {TrichotomyKind::Violation, std::move(w)};
}

// ---------------------------------------------------------------------------
// Classifying a vertex against a template
// ---------------------------------------------------------------------------

struct Classification {
    enum Kind { Z, C, AFree, M, Invalid } kind = Invalid;
    int i = -1; // C: conflict part.  M: minimum (a-1)-disconnected part
    int j = -1; // M: minimum 1-connected part
    std::string reason;
};

// Pure function of the vertex's trace against the parts.  `z_threshold`
// selects the Z definition: a vertex is in Z when it has at most z_threshold
// non-neighbours in every part (the pipeline default is a; the looser lemma
// variant uses a-1).  Invalid is returned only when the trace pattern is one
// the attachment analysis rules out for class members: a part with at least
// a non-neighbours and two or more neighbours next to another such part.
inline Classification classify_vertex(const Graph& g, const Template& X, int v, int a,
                                      int z_threshold_override = -1) {
    if (a < 1) throw PreconditionError("classify_vertex: a must be >= 1");
    int z_threshold = z_threshold_override < 0 ? a : z_threshold_override;
    for (const auto& part : X.parts)
        if ((int)part.size() < a + 1)
            throw PreconditionError("classify_vertex: every part needs at least a+1 vertices");
    TraceProfile profile = trace(g, v, X.parts);
    int r = X.r();

    bool all_within = true;
    for (int i = 0; i < r; ++i)
        if (profile.parts[i].non_neighbours > z_threshold) all_within = false;
    if (all_within) return {Classification::Z, -1, -1, ""};

    VertexList heavy; // parts with at least a non-neighbours
    for (int i = 0; i < r; ++i)
        if (profile.parts[i].non_neighbours >= a) heavy.push_back(i);

    if (heavy.empty())
        return {Classification::Invalid, -1, -1,
                "not in Z yet no part has a non-neighbours (threshold mismatch)"};

    if (heavy.size() == 1) {
        Classification c{Classification::C, heavy[0], -1, ""};
        return c;
    }

    // two or more heavy parts: each must be 1-connected or the host is
    // outside the class
    for (int i : heavy)
        if (profile.parts[i].neighbours > 1)
            return {Classification::Invalid, i, -1,
                    "part " + std::to_string(i) +
                        " holds at least a non-neighbours and two neighbours of vertex " +
                        std::to_string(v)};

    bool all_one_connected = true;
    int min_disc = -1, min_conn = -1;
    for (int i = 0; i < r; ++i) {
        bool conn = profile.parts[i].neighbours <= 1;
        bool disc = profile.parts[i].non_neighbours <= a - 1;
        if (!conn) all_one_connected = false;
        if (disc && min_disc == -1) min_disc = i;
        if (conn && min_conn == -1) min_conn = i;
    }
    if (all_one_connected) return {Classification::AFree, -1, -1, ""};
    if (min_disc == -1)
        return {Classification::Invalid, -1, -1, "no (a-1)-disconnected part for an M vertex"};
    return {Classification::M, min_disc, min_conn, ""};
}

// ---------------------------------------------------------------------------
// The attachment partition
// ---------------------------------------------------------------------------

struct AttachmentPartition {
    VertexList Z;
    std::vector<VertexList> C;                    // C[i]: conflict part i
    VertexList A_free;                            // 1-connected to every part
    std::map<std::pair<int, int>, VertexList> M;  // (min disc part, min conn part)

    VertexList m_all() const {
        VertexList out;
        for (const auto& [key, members] : M) out.insert(out.end(), members.begin(), members.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Partition of everything outside the template into Z, the conflict classes
// C_i, the 1-connected set A, and the mixed classes M_ij.  Throws
// StructureError when some vertex classifies Invalid, which signals the host
// is outside the class (or the template is malformed).
inline AttachmentPartition partition_attachment(const Graph& g, const Template& X, int a) {
    TemplateCheck tc = verify_template(g, X);
    if (!tc) throw PreconditionError("partition_attachment: not a template: " + tc.reason);
    std::vector<char> in_x(g.vertex_count(), 0);
    for (const auto& part : X.parts)
        for (int v : part) in_x[v] = 1;

    AttachmentPartition out;
    out.C.assign(X.r(), {});
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_x[v]) continue;
        Classification c = classify_vertex(g, X, v, a);
        switch (c.kind) {
            case Classification::Z: out.Z.push_back(v); break;
            case Classification::C: out.C[c.i].push_back(v); break;
            case Classification::AFree: out.A_free.push_back(v); break;
            case Classification::M: out.M[{c.i, c.j}].push_back(v); break;
            default:
                throw StructureError("partition_attachment: vertex " + std::to_string(v) +
                                     " classifies invalid: " + c.reason);
        }
    }
    return out;
}

} // namespace pab
