#pragma once

#include <map>
#include <optional>
#include <string>

#include "pab/attachment.hpp"
#include "pab/bounds.hpp"
#include "pab/colouring.hpp"
#include "pab/cutset.hpp"
#include "pab/generators.hpp"
#include "pab/graph.hpp"
#include "pab/multipartite.hpp"
#include "pab/rng.hpp"
#include "pab/subdivision.hpp"

namespace pab {

// ---------------------------------------------------------------------------
// Instance constructors for the randomized verification campaigns.  Every
// constructor is a pure function of its RNG stream, so a campaign instance
// can be replayed from (seed, index) alone.
// ---------------------------------------------------------------------------

// Random class member: sparse and dense densities give members quickly; the
// membership is verified, never assumed.
inline Graph sample_member(int n_min, int n_max, const std::vector<double>& ps, int a,
                           SplitMix64& rng, const Guards& guards = default_guards(),
                           int max_tries = 500) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        int n = n_min + rng.next_below(n_max - n_min + 1);
        double p = ps[rng.next_below((int)ps.size())];
        Graph g = gen_random(n, p, rng.next());
        if (is_member(g, a, guards)) return g;
    }
    throw StructureError("sample_member: no member found within the try budget");
}

// Host for the template-growth lemma: r parts of size exactly s+a, plus a
// nearly disconnected set Z containing a planted independent trace class of
// size >= s and additional noise vertices.
struct GrowthInstance {
    Graph graph;
    Template tmpl;
    VertexList Z;
    int s = 0;
    int a = 0;
};

inline GrowthInstance build_growth_instance(int r, int s, int a, int planted, int noise,
                                            SplitMix64& rng) {
    if (planted < s) throw PreconditionError("build_growth_instance: planted class below s");
    int part_size = s + a;
    std::vector<int> sizes(r, part_size);
    Graph base = gen_complete_multipartite(sizes);
    int x_total = r * part_size;
    int n = x_total + planted + noise;
    EdgeList edges = base.edges();

    Template tmpl;
    for (int i = 0; i < r; ++i) {
        VertexList part;
        for (int k = 0; k < part_size; ++k) part.push_back(i * part_size + k);
        tmpl.parts.push_back(part);
    }

    // one shared trace for the planted class: miss at most a vertices per part
    std::vector<std::vector<char>> miss(r, std::vector<char>(part_size, 0));
    for (int i = 0; i < r; ++i) {
        int misses = rng.next_below(a + 1);
        for (int k = 0; k < misses; ++k) miss[i][rng.next_below(part_size)] = 1;
    }
    VertexList Z;
    for (int t = 0; t < planted; ++t) {
        int z = x_total + t;
        Z.push_back(z);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < part_size; ++k)
                if (!miss[i][k]) edges.emplace_back(z, i * part_size + k);
    }
    // noise vertices draw their own traces and may see each other and the
    // planted class
    for (int t = 0; t < noise; ++t) {
        int z = x_total + planted + t;
        Z.push_back(z);
        for (int i = 0; i < r; ++i) {
            std::vector<char> own(part_size, 0);
            int misses = rng.next_below(a + 1);
            for (int k = 0; k < misses; ++k) own[rng.next_below(part_size)] = 1;
            for (int k = 0; k < part_size; ++k)
                if (!own[k]) edges.emplace_back(z, i * part_size + k);
        }
        for (int other = x_total; other < z; ++other)
            if (rng.next_bool(0.3)) edges.emplace_back(z, other);
    }
    return {Graph(n, edges), tmpl, Z, s, a};
}

// Template host whose outside vertices all classify Z, C or M, so the A
// class is empty and the dominating branch applies.
struct AttachmentInstance {
    Graph graph;
    Template tmpl;
    int a = 0;
};

inline AttachmentInstance build_dominating_instance(int r, int part_size, int a, int n_z, int n_c,
                                                    int n_m, SplitMix64& rng) {
    if (part_size < a + 1)
        throw PreconditionError("build_dominating_instance: parts need >= a+1 vertices");
    if (n_m > 0 && (r < 3 || part_size < a + 2))
        throw PreconditionError(
            "build_dominating_instance: M vertices need r >= 3 and parts >= a+2");
    std::vector<int> sizes(r, part_size);
    Graph base = gen_complete_multipartite(sizes);
    int x_total = r * part_size;
    int extras = n_z + n_c + n_m;
    EdgeList edges = base.edges();

    Template tmpl;
    for (int i = 0; i < r; ++i) {
        VertexList part;
        for (int k = 0; k < part_size; ++k) part.push_back(i * part_size + k);
        tmpl.parts.push_back(part);
    }

    auto connect_part = [&](int v, int part, int misses) {
        std::vector<char> skip(part_size, 0);
        int placed = 0;
        while (placed < misses) {
            int k = rng.next_below(part_size);
            if (!skip[k]) {
                skip[k] = 1;
                ++placed;
            }
        }
        for (int k = 0; k < part_size; ++k)
            if (!skip[k]) edges.emplace_back(v, part * part_size + k);
    };

    int next = x_total;
    for (int t = 0; t < n_z; ++t, ++next)
        for (int i = 0; i < r; ++i) connect_part(next, i, rng.next_below(a + 1));
    for (int t = 0; t < n_c; ++t, ++next) {
        int conflict = rng.next_below(r);
        for (int i = 0; i < r; ++i) {
            if (i == conflict)
                connect_part(next, i,
                             a + 1 + rng.next_below(std::max(1, part_size - a)));
            else
                connect_part(next, i, rng.next_below(a));
        }
    }
    for (int t = 0; t < n_m; ++t, ++next) {
        // part 0 disconnected, all others 1-connected (so the minimum
        // 1-connected index is 1 and the class key is (0, 1))
        connect_part(next, 0, rng.next_below(a));
        for (int i = 1; i < r; ++i) {
            int nbs = rng.next_below(2); // 0 or 1 neighbours
            connect_part(next, i, part_size - nbs);
        }
    }
    // extras may see each other arbitrarily
    for (int u = x_total; u < x_total + extras; ++u)
        for (int v = u + 1; v < x_total + extras; ++v)
            if (rng.next_bool(0.3)) edges.emplace_back(u, v);

    return {Graph(x_total + extras, edges), tmpl, a};
}

// Template host plus pendant components that classify into the A class, each
// attached to at most one vertex per part so every claim holds.
struct CutsetInstance {
    Graph graph;
    Template tmpl;
    int a = 0;
    int components = 0;
};

inline CutsetInstance build_cutset_instance(int r, int part_size, int a, int n_components,
                                            int component_size, SplitMix64& rng) {
    if (part_size < a + 1)
        throw PreconditionError("build_cutset_instance: parts need >= a+1 vertices");
    std::vector<int> sizes(r, part_size);
    Graph base = gen_complete_multipartite(sizes);
    int x_total = r * part_size;
    EdgeList edges = base.edges();

    Template tmpl;
    for (int i = 0; i < r; ++i) {
        VertexList part;
        for (int k = 0; k < part_size; ++k) part.push_back(i * part_size + k);
        tmpl.parts.push_back(part);
    }

    int next = x_total;
    for (int c = 0; c < n_components; ++c) {
        VertexList members;
        for (int t = 0; t < component_size; ++t) members.push_back(next++);
        // random spanning tree keeps the component connected
        for (std::size_t t = 1; t < members.size(); ++t)
            edges.emplace_back(members[t], members[rng.next_below((int)t)]);
        // whole-component budget of one attachment per part
        for (int i = 0; i < r; ++i) {
            if (!rng.next_bool(0.75)) continue;
            int part_vertex = i * part_size + rng.next_below(part_size);
            int q_vertex = members[rng.next_below((int)members.size())];
            edges.emplace_back(q_vertex, part_vertex);
        }
    }
    return {Graph(next, edges), tmpl, a, n_components};
}

// Host on which the adjacency trichotomy fails: v has a non-neighbours in A,
// two neighbours in B and a non-neighbours in B.
struct TrichotomyViolationInstance {
    Graph graph;
    VertexList a_set, b_set;
    int v = 0;
    int a = 0;
};

inline TrichotomyViolationInstance build_trichotomy_violation(int a, int a_size, int b_size,
                                                              SplitMix64& rng) {
    if (a_size < a || b_size < a + 2)
        throw PreconditionError("build_trichotomy_violation: need |A| >= a and |B| >= a+2");
    EdgeList edges;
    VertexList a_set, b_set;
    for (int i = 0; i < a_size; ++i) a_set.push_back(i);
    for (int i = 0; i < b_size; ++i) b_set.push_back(a_size + i);
    int v = a_size + b_size;
    for (int u : a_set)
        for (int w : b_set) edges.emplace_back(u, w);
    // v: at most a_size - a neighbours in A
    int a_nbs = rng.next_below(a_size - a + 1);
    for (int k = 0; k < a_nbs; ++k) edges.emplace_back(v, a_set[k]);
    // v: between 2 and b_size - a neighbours in B
    int b_nbs = 2 + rng.next_below(b_size - a - 1);
    for (int k = 0; k < b_nbs; ++k) edges.emplace_back(v, b_set[k]);
    return {Graph(v + 1, edges), a_set, b_set, v, a};
}

// Hosts violating one of the cutset claims, with the component and the
// offending attachment laid out so the witness construction has room.
struct ClaimViolationInstance {
    Graph graph;
    Template tmpl;
    int a = 0;
    VertexList Q;
    std::string claim; // which claim the instance violates
};

inline ClaimViolationInstance build_claim_x_violation(int a, int path_len, SplitMix64& rng) {
    int r = 2, part_size = std::max(a + 2, 3);
    std::vector<int> sizes(r, part_size);
    Graph base = gen_complete_multipartite(sizes);
    EdgeList edges = base.edges();
    int x_total = r * part_size;

    Template tmpl;
    for (int i = 0; i < r; ++i) {
        VertexList part;
        for (int k = 0; k < part_size; ++k) part.push_back(i * part_size + k);
        tmpl.parts.push_back(part);
    }
    VertexList Q;
    for (int t = 0; t <= path_len; ++t) {
        Q.push_back(x_total + t);
        if (t > 0) edges.emplace_back(x_total + t - 1, x_total + t);
    }
    int u0 = rng.next_below(part_size);
    int u1 = (u0 + 1 + rng.next_below(part_size - 1)) % part_size;
    edges.emplace_back(Q.front(), u0);
    edges.emplace_back(Q.back(), u1);
    return {Graph(x_total + path_len + 1, edges), tmpl, a, Q, "X"};
}

inline ClaimViolationInstance build_claim_m_violation(int a, int path_len, SplitMix64& rng) {
    int r = 3, part_size = 3 * a + 2;
    std::vector<int> sizes(r, part_size);
    Graph base = gen_complete_multipartite(sizes);
    EdgeList edges = base.edges();
    int x_total = r * part_size;

    Template tmpl;
    for (int i = 0; i < r; ++i) {
        VertexList part;
        for (int k = 0; k < part_size; ++k) part.push_back(i * part_size + k);
        tmpl.parts.push_back(part);
    }
    // Q: an induced path, unattached to the template
    VertexList Q;
    for (int t = 0; t <= path_len; ++t) {
        Q.push_back(x_total + t);
        if (t > 0) edges.emplace_back(x_total + t - 1, x_total + t);
    }
    // x, y in M[0,1]: a-1 misses in part 0, one neighbour in parts 1 and 2
    int x = x_total + path_len + 1, y = x + 1;
    for (int v : {x, y}) {
        std::vector<char> skip(part_size, 0);
        for (int placed = 0; placed < a - 1;) {
            int k = rng.next_below(part_size);
            if (!skip[k]) {
                skip[k] = 1;
                ++placed;
            }
        }
        for (int k = 0; k < part_size; ++k)
            if (!skip[k]) edges.emplace_back(v, k); // part 0
        for (int i = 1; i < r; ++i)
            edges.emplace_back(v, i * part_size + rng.next_below(part_size));
    }
    edges.emplace_back(x, Q.front());
    edges.emplace_back(y, Q.back());
    return {Graph(y + 1, edges), tmpl, a, Q, "M"};
}

inline ClaimViolationInstance build_claim_c_violation(int a, int path_len, SplitMix64& rng) {
    int r = 2, part_size = 3 * a + 2;
    std::vector<int> sizes(r, part_size);
    Graph base = gen_complete_multipartite(sizes);
    EdgeList edges = base.edges();
    int x_total = r * part_size;

    Template tmpl;
    for (int i = 0; i < r; ++i) {
        VertexList part;
        for (int k = 0; k < part_size; ++k) part.push_back(i * part_size + k);
        tmpl.parts.push_back(part);
    }
    VertexList Q;
    for (int t = 0; t <= path_len; ++t) {
        Q.push_back(x_total + t);
        if (t > 0) edges.emplace_back(x_total + t - 1, x_total + t);
    }
    // x, y in C[0] sharing the same a+1 lowest non-neighbours in part 0
    std::vector<char> shared_miss(part_size, 0);
    for (int placed = 0; placed < a + 1;) {
        int k = rng.next_below(part_size);
        if (!shared_miss[k]) {
            shared_miss[k] = 1;
            ++placed;
        }
    }
    int x = x_total + path_len + 1, y = x + 1;
    for (int v : {x, y}) {
        for (int k = 0; k < part_size; ++k)
            if (!shared_miss[k]) edges.emplace_back(v, k);
        for (int k = 0; k < part_size; ++k) edges.emplace_back(v, part_size + k); // part 1
    }
    edges.emplace_back(x, Q.front());
    edges.emplace_back(y, Q.back());
    return {Graph(y + 1, edges), tmpl, a, Q, "C"};
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

struct CampaignConfig {
    std::string name = "lemma1"; // lemma1 | growth | claim2 | cutset | witnesses
    std::uint64_t seed = 1;
    int instances = 100;
    int a = 2;
    int n_min = 6;
    int n_max = 14;
    std::vector<double> edge_probabilities = {0.06, 0.10, 0.88, 0.94};
    Guards guards = default_guards();
};

struct CampaignFailure {
    int index = 0;
    std::uint64_t instance_seed = 0;
    std::string diagnostic;
};

struct CampaignSummary {
    CampaignConfig config;
    int instances_run = 0;
    int passes = 0;
    std::vector<CampaignFailure> failures;
    std::map<std::string, long long> stats;
};

struct InstanceOutcome {
    bool pass = true;
    std::string diagnostic;
    std::map<std::string, long long> stats;
};

namespace detail {

inline void bump(InstanceOutcome& out, const std::string& key, long long by = 1) {
    out.stats[key] += by;
}

inline void validate_and_count(InstanceOutcome& out, const Graph& pattern, const Graph& host,
                               const SubdivisionWitness& w, const std::string& what) {
    WitnessCheck check = validate_witness(pattern, host, w);
    if (check.ok) {
        bump(out, "witnesses_validated");
    } else {
        out.pass = false;
        out.diagnostic = what + ": witness failed validation: " + check.clause;
    }
}

inline InstanceOutcome run_lemma1_instance(const CampaignConfig& cfg, SplitMix64& rng) {
    InstanceOutcome out;
    Graph g = sample_member(cfg.n_min, cfg.n_max, cfg.edge_probabilities, cfg.a, rng, cfg.guards);
    bump(out, "members_sampled");
    int n = g.vertex_count();

    int config_attempts = 12;
    for (int attempt = 0; attempt < config_attempts; ++attempt) {
        // random greedy independent A, then an independent B inside A's
        // common neighbourhood
        VertexList order(n);
        std::iota(order.begin(), order.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.next_below(i + 1)]);
        VertexList a_set;
        int a_cap = 1 + rng.next_below(std::max(1, n / 2));
        for (int v : order) {
            if ((int)a_set.size() >= a_cap) break;
            bool ok = true;
            for (int u : a_set)
                if (g.adjacent(u, v)) { ok = false; break; }
            if (ok) a_set.push_back(v);
        }
        if (a_set.empty()) continue;
        VertexList pool = common_neighbours(g, a_set);
        for (int i = (int)pool.size() - 1; i > 0; --i)
            std::swap(pool[i], pool[rng.next_below(i + 1)]);
        VertexList b_set;
        for (int v : pool) {
            bool ok = true;
            for (int u : b_set)
                if (g.adjacent(u, v)) { ok = false; break; }
            if (ok) b_set.push_back(v);
        }
        if (b_set.empty()) continue;
        std::sort(a_set.begin(), a_set.end());
        std::sort(b_set.begin(), b_set.end());

        for (int v = 0; v < n; ++v) {
            if (std::binary_search(a_set.begin(), a_set.end(), v) ||
                std::binary_search(b_set.begin(), b_set.end(), v))
                continue;
            TrichotomyVerdict verdict = check_adjacency_trichotomy(g, a_set, b_set, v, cfg.a);
            bump(out, "configurations_checked");
            if (verdict.kind == TrichotomyKind::Violation) {
                out.pass = false;
                out.diagnostic = "trichotomy violation on a verified member (vertex " +
                                 std::to_string(v) + ")";
                return out;
            }
        }
    }
    return out;
}

inline InstanceOutcome run_growth_instance(const CampaignConfig& cfg, SplitMix64& rng) {
    InstanceOutcome out;
    int r = 2 + rng.next_below(2);
    int s = 2 + rng.next_below(2);
    int planted = s + rng.next_below(3);
    int noise = rng.next_below(5);
    GrowthInstance inst = build_growth_instance(r, s, cfg.a, planted, noise, rng);
    bump(out, "instances_built");
    GrowResult grow = grow_template(inst.graph, inst.tmpl, inst.Z, s, cfg.a, cfg.guards);
    if (!grow.grown) {
        out.pass = false;
        out.diagnostic = "growth failed on a planted instance: " + grow.reason;
        return out;
    }
    if (grow.tmpl.r() != r + 1) {
        out.pass = false;
        out.diagnostic = "grown template has wrong width";
        return out;
    }
    TemplateCheck check = verify_template(inst.graph, grow.tmpl);
    if (!check) {
        out.pass = false;
        out.diagnostic = "grown template invariants failed: " + check.reason;
        return out;
    }
    for (const auto& part : grow.tmpl.parts)
        if ((int)part.size() < s) {
            out.pass = false;
            out.diagnostic = "grown part below s";
            return out;
        }
    bump(out, "templates_grown");
    return out;
}

inline InstanceOutcome run_claim2_instance(const CampaignConfig& cfg, SplitMix64& rng) {
    InstanceOutcome out;
    int r = 2 + rng.next_below(2);
    int part_size = cfg.a + 2 + rng.next_below(2);
    int n_z = rng.next_below(4), n_c = rng.next_below(4);
    int n_m = r >= 3 ? rng.next_below(3) : 0;
    AttachmentInstance inst =
        build_dominating_instance(r, part_size, cfg.a, n_z, n_c, n_m, rng);
    bump(out, "instances_built");
    DominatingColouring dom = dominating_colouring(inst.graph, inst.tmpl, cfg.a,
                                                   exact_subcolourer(cfg.guards), cfg.guards);
    if (!is_proper_colouring(inst.graph, dom.certificate)) {
        out.pass = false;
        out.diagnostic = "dominating certificate improper";
        return out;
    }
    if (dom.certificate.colours_used > dom.budget) {
        out.pass = false;
        out.diagnostic = "dominating certificate over budget";
        return out;
    }
    bump(out, "colourings_verified");
    return out;
}

inline InstanceOutcome run_cutset_instance(const CampaignConfig& cfg, SplitMix64& rng) {
    InstanceOutcome out;
    int r = 2 + rng.next_below(2);
    int part_size = cfg.a + 2 + rng.next_below(3);
    int n_components = 1 + rng.next_below(3);
    int component_size = 1 + rng.next_below(4);
    CutsetInstance inst =
        build_cutset_instance(r, part_size, cfg.a, n_components, component_size, rng);
    bump(out, "instances_built");

    AttachmentPartition partition = partition_attachment(inst.graph, inst.tmpl, cfg.a);
    if ((int)partition.A_free.size() != n_components * component_size) {
        out.pass = false;
        out.diagnostic = "pendant vertices did not all classify into the A class";
        return out;
    }
    int omega = clique_number(inst.graph, cfg.guards).size;
    BoundSheet sheet = compute_bounds(cfg.a, omega, 0);

    InducedSubgraph a_sub = induced_subgraph(inst.graph, partition.A_free);
    for (const auto& comp : connected_components(a_sub.graph)) {
        VertexList Q;
        for (int local : comp) Q.push_back(a_sub.vertices[local]);
        std::sort(Q.begin(), Q.end());
        CutsetReport report =
            component_cutset_report(inst.graph, inst.tmpl, partition, Q, cfg.a, sheet);
        bump(out, "components_analysed");
        if (!report.all_claims_pass) {
            out.pass = false;
            out.diagnostic = "a claim failed on an in-budget instance";
            return out;
        }
        if (!report.separates) {
            out.pass = false;
            out.diagnostic = "N(Q) failed to separate Q from the template remainder";
            return out;
        }
    }
    return out;
}

inline InstanceOutcome run_witnesses_instance(const CampaignConfig& cfg, SplitMix64& rng,
                                              int index) {
    InstanceOutcome out;
    Graph pattern = gen_pattern(cfg.a, cfg.a).underlying;
    switch (index % 5) {
        case 0: {
            TrichotomyViolationInstance inst =
                build_trichotomy_violation(cfg.a, cfg.a + rng.next_below(3),
                                           cfg.a + 2 + rng.next_below(3), rng);
            TrichotomyVerdict verdict =
                check_adjacency_trichotomy(inst.graph, inst.a_set, inst.b_set, inst.v, cfg.a);
            if (verdict.kind != TrichotomyKind::Violation) {
                out.pass = false;
                out.diagnostic = "constructed trichotomy violation not detected";
                return out;
            }
            validate_and_count(out, pattern, inst.graph, *verdict.witness, "trichotomy");
            break;
        }
        case 1:
        case 2:
        case 3: {
            ClaimViolationInstance inst =
                index % 5 == 1 ? build_claim_x_violation(cfg.a, 1 + rng.next_below(3), rng)
                : index % 5 == 2
                    ? build_claim_m_violation(cfg.a, 1 + rng.next_below(3), rng)
                    : build_claim_c_violation(cfg.a, 1 + rng.next_below(3), rng);
            AttachmentPartition partition =
                partition_attachment(inst.graph, inst.tmpl, cfg.a);
            int omega = clique_number(inst.graph, cfg.guards).size;
            BoundSheet sheet = compute_bounds(cfg.a, omega, 0);
            CutsetReport report = component_cutset_report(inst.graph, inst.tmpl, partition,
                                                          inst.Q, cfg.a, sheet);
            bool found = false;
            for (const auto& verdict : report.claims) {
                if (verdict.witness) {
                    found = true;
                    validate_and_count(out, pattern, inst.graph, *verdict.witness,
                                       "claim " + verdict.claim);
                    if (!out.pass) return out;
                }
            }
            if (!found) {
                out.pass = false;
                out.diagnostic = "constructed claim-" + inst.claim +
                                 " violation produced no witness";
                return out;
            }
            break;
        }
        default: {
            // construct-then-detect round trip through the detector
            PatternPab p = gen_pattern(cfg.a, cfg.a);
            Graph host = gen_subdivision_random(p.underlying, 1, 2, rng.next());
            auto witness = detect_induced_subdivision(p, host, cfg.guards);
            if (!witness) {
                out.pass = false;
                out.diagnostic = "detector missed a constructed subdivision";
                return out;
            }
            validate_and_count(out, pattern, host, *witness, "detector");
            break;
        }
    }
    return out;
}

} // namespace detail

inline InstanceOutcome run_campaign_instance(const CampaignConfig& cfg, int index) {
    SplitMix64 rng(mix_seed(cfg.seed, (std::uint64_t)index));
    if (cfg.name == "lemma1") return detail::run_lemma1_instance(cfg, rng);
    if (cfg.name == "growth") return detail::run_growth_instance(cfg, rng);
    if (cfg.name == "claim2") return detail::run_claim2_instance(cfg, rng);
    if (cfg.name == "cutset") return detail::run_cutset_instance(cfg, rng);
    if (cfg.name == "witnesses") return detail::run_witnesses_instance(cfg, rng, index);
    throw PreconditionError("unknown campaign: " + cfg.name);
}

inline CampaignSummary run_campaign(const CampaignConfig& cfg) {
    if (cfg.instances < 1) throw PreconditionError("campaign needs at least one instance");
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw PreconditionError("campaign size range is empty");
    if (cfg.edge_probabilities.empty())
        throw PreconditionError("campaign needs edge probabilities");
    for (double p : cfg.edge_probabilities)
        if (!(p >= 0.0 && p <= 1.0))
            throw PreconditionError("edge probability outside [0,1]");
    if (cfg.a < 2) throw PreconditionError("campaigns run with a >= 2");

    CampaignSummary summary;
    summary.config = cfg;
    for (int index = 0; index < cfg.instances; ++index) {
        InstanceOutcome outcome;
        try {
            outcome = run_campaign_instance(cfg, index);
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.diagnostic = std::string("exception: ") + e.what();
        }
        ++summary.instances_run;
        if (outcome.pass) {
            ++summary.passes;
        } else {
            summary.failures.push_back(
                {index, mix_seed(cfg.seed, (std::uint64_t)index), outcome.diagnostic});
        }
        for (const auto& [key, value] : outcome.stats) summary.stats[key] += value;
    }
    return summary;
}

} // namespace pab
