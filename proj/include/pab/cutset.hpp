#pragma once

#include <map>
#include <optional>
#include <queue>
#include <string>

#include "pab/attachment.hpp"
#include "pab/bounds.hpp"
#include "pab/errors.hpp"
#include "pab/graph.hpp"
#include "pab/multipartite.hpp"
#include "pab/pattern.hpp"
#include "pab/witness.hpp"

namespace pab {

struct ClaimVerdict {
    std::string claim;    // "Z", "X[i]", "M[i,j]", "C[i]"
    long long count = 0;
    BigInt bound = 0;
    bool count_ok = true;       // count <= bound
    bool structural_ok = true;  // the structure the bound's proof forbids is absent
    std::string detail;
    std::optional<SubdivisionWitness> witness; // emitted on structural violation

    bool pass() const { return count_ok && structural_ok; }
};

struct CutsetReport {
    VertexList Q;
    VertexList neighbourhood; // N(Q) in the host
    int neighbours_in_z = 0;
    std::vector<int> neighbours_in_part;
    std::vector<int> neighbours_in_c;
    std::map<std::pair<int, int>, int> neighbours_in_m;
    std::vector<ClaimVerdict> claims;
    bool all_claims_pass = true;
    bool q_nonempty = false;
    bool remainder_nonempty = false; // X minus N(Q) is nonempty
    bool separates = false;          // deleting N(Q) disconnects Q from X minus N(Q)
    BigInt b;
    bool neighbourhood_below_b = false;
};

namespace detail {

inline VertexList intersect_sorted(const VertexList& a, const VertexList& b) {
    VertexList out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Lexicographically least shortest path from `from` to `to` whose interior
// vertices all satisfy interior_ok.  Distances are computed backward from
// `to`, then the path walks greedily to the smallest-id next hop.
inline std::optional<VertexList> shortest_path_via(const Graph& g, int from, int to,
                                                   const std::vector<char>& interior_ok) {
    int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[to] = 0;
    q.push(to);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbours(v)) {
            if (dist[u] != -1) continue;
            if (u != from && !interior_ok[u]) continue;
            dist[u] = dist[v] + 1;
            if (u != from) q.push(u);
        }
    }
    if (dist[from] == -1) return std::nullopt;
    VertexList path{from};
    int current = from;
    while (current != to) {
        int next = -1;
        for (int u : g.neighbours(current)) {
            if (u == to && dist[current] == 1) { next = u; break; }
            if (interior_ok[u] && dist[u] == dist[current] - 1) { next = u; break; }
        }
        path.push_back(next);
        current = next;
    }
    return path;
}

// Enumerates simple paths inside `allowed` by (edge count, lexicographic
// sequence), calling visit(path) until it returns true.  Reversals are
// deduplicated by requiring front <= back.
template <typename Visit>
inline bool for_each_path_shortest_first(const Graph& g, const VertexList& allowed,
                                         Visit&& visit) {
    std::vector<char> ok(g.vertex_count(), 0), used(g.vertex_count(), 0);
    for (int v : allowed) ok[v] = 1;
    VertexList path;
    auto extend = [&](auto&& self, int target_len) -> bool {
        if ((int)path.size() == target_len + 1) {
            if (path.front() > path.back()) return false;
            return visit(path);
        }
        for (int v : g.neighbours(path.back())) {
            if (!ok[v] || used[v]) continue;
            path.push_back(v);
            used[v] = 1;
            if (self(self, target_len)) return true;
            used[v] = 0;
            path.pop_back();
        }
        return false;
    };
    for (int len = 0; len < (int)allowed.size(); ++len) {
        for (int start : allowed) {
            path = {start};
            used.assign(g.vertex_count(), 0);
            used[start] = 1;
            if (extend(extend, len)) return true;
            used[start] = 0;
        }
    }
    return false;
}

inline SubdivisionWitness assemble_pab_witness(int a, int apex, int pair_x, int pair_y,
                                               const VertexList& part_a_images,
                                               const VertexList& part_b_images,
                                               const VertexList& path_to_x,
                                               const VertexList& path_to_y) {
    SubdivisionWitness w;
    w.branch_map.assign(3 + 2 * a, -1);
    w.branch_map[0] = apex;
    w.branch_map[1] = pair_x;
    w.branch_map[2] = pair_y;
    for (int i = 0; i < a; ++i) w.branch_map[3 + i] = part_a_images[i];
    for (int i = 0; i < a; ++i) w.branch_map[3 + a + i] = part_b_images[i];
    w.paths[{0, 1}] = path_to_x;
    w.paths[{0, 2}] = path_to_y;
    for (int i = 0; i < a; ++i) {
        w.paths[{1, 3 + i}] = {pair_x, part_a_images[i]};
        w.paths[{2, 3 + i}] = {pair_y, part_a_images[i]};
        for (int j = 0; j < a; ++j)
            w.paths[{3 + i, 3 + a + j}] = {part_a_images[i], part_b_images[j]};
    }
    return w;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Per-component cutset analysis
// ---------------------------------------------------------------------------

// Analyses one connected component Q of the A class: exact neighbour counts
// of Q in Z, in every part, in every conflict class and every mixed class;
// a verdict per claim (count against the bound sheet, plus the structural
// predicate whose failure the bound's argument turns into a forbidden
// induced subdivision); and the separation check for N(Q).
//
// On a structural violation the forbidden P(a,a) subdivision is constructed
// explicitly -- shortest paths through Q, trimmed parts, shared
// non-neighbour sets -- and shipped as a witness that passes
// validate_witness.
inline CutsetReport component_cutset_report(const Graph& g, const Template& X,
                                            const AttachmentPartition& partition,
                                            const VertexList& Q, int a,
                                            const BoundSheet& sheet) {
    TemplateCheck tc = verify_template(g, X);
    if (!tc) throw PreconditionError("component_cutset_report: not a template: " + tc.reason);
    if (Q.empty()) throw PreconditionError("component_cutset_report: Q is empty");
    for (int v : Q)
        if (!std::binary_search(partition.A_free.begin(), partition.A_free.end(), v))
            throw PreconditionError("component_cutset_report: Q is not a subset of the A class");
    InducedSubgraph q_sub = induced_subgraph(g, Q);
    if (!is_connected(q_sub.graph))
        throw PreconditionError("component_cutset_report: Q is not connected");
    for (int v : partition.A_free)
        if (!std::binary_search(Q.begin(), Q.end(), v))
            for (int u : Q)
                if (g.adjacent(u, v))
                    throw PreconditionError(
                        "component_cutset_report: Q is not a maximal component of the A class");

    CutsetReport report;
    report.Q = Q;
    report.q_nonempty = true;
    report.b = sheet.b;
    report.neighbourhood = set_neighbourhood(g, Q);
    const VertexList& nq = report.neighbourhood;

    int r = X.r();
    int omega = sheet.omega;
    std::vector<char> interior_ok(g.vertex_count(), 0);
    for (int v : Q) interior_ok[v] = 1;

    // --- claim "Z": bounded neighbours in Z -------------------------------
    {
        ClaimVerdict verdict;
        verdict.claim = "Z";
        verdict.count = (long long)detail::intersect_sorted(nq, partition.Z).size();
        report.neighbours_in_z = (int)verdict.count;
        verdict.bound =
            sheet.s * detail::big_pow(sheet.f + 1, (long long)a * omega) - 1;
        verdict.count_ok = BigInt(verdict.count) <= verdict.bound;
        report.claims.push_back(std::move(verdict));
    }

    // --- claim "X": at most one neighbour per part ------------------------
    for (int i = 0; i < r; ++i) {
        ClaimVerdict verdict;
        verdict.claim = "X[" + std::to_string(i) + "]";
        VertexList hits = detail::intersect_sorted(nq, X.parts[i]);
        verdict.count = (long long)hits.size();
        report.neighbours_in_part.push_back((int)hits.size());
        verdict.bound = 1;
        verdict.count_ok = verdict.count <= 1;
        verdict.structural_ok = verdict.count <= 1;
        if (!verdict.structural_ok) {
            // minimal path in Q with two neighbours in one part, then the
            // trimmed parts around it
            VertexList found_path;
            int found_part = -1;
            detail::for_each_path_shortest_first(g, Q, [&](const VertexList& path) {
                for (int part = 0; part < r; ++part) {
                    VertexList nb = detail::intersect_sorted(set_neighbourhood(g, path),
                                                             X.parts[part]);
                    if ((int)nb.size() >= 2) {
                        found_path = path;
                        found_part = part;
                        return true;
                    }
                }
                return false;
            });
            if (found_path.empty()) {
                verdict.detail = "no witness path found despite the count (unexpected)";
            } else {
                int xe = found_path.front(), ye = found_path.back();
                VertexList xe_nb, ye_nb;
                for (int u : X.parts[found_part]) {
                    if (g.adjacent(xe, u)) xe_nb.push_back(u);
                    if (g.adjacent(ye, u)) ye_nb.push_back(u);
                }
                if (xe_nb.size() != 1 || ye_nb.size() != 1 || xe_nb[0] == ye_nb[0]) {
                    verdict.detail = "attachment pattern on the minimal path is degenerate";
                } else {
                    int x = xe_nb[0], y = ye_nb[0];
                    VertexList path_nbh = set_neighbourhood(g, found_path);
                    VertexList pool_b;
                    for (int u : X.parts[found_part])
                        if (u != x && u != y &&
                            !std::binary_search(path_nbh.begin(), path_nbh.end(), u))
                            pool_b.push_back(u);
                    int other = -1;
                    VertexList pool_a;
                    for (int k = 0; k < r && other == -1; ++k) {
                        if (k == found_part) continue;
                        VertexList pool;
                        for (int u : X.parts[k])
                            if (!std::binary_search(path_nbh.begin(), path_nbh.end(), u))
                                pool.push_back(u);
                        if ((int)pool.size() >= a) {
                            other = k;
                            pool_a = pool;
                        }
                    }
                    if ((int)pool_b.size() < a || other == -1) {
                        verdict.detail = "parts too small to assemble the forbidden copy";
                    } else {
                        pool_a.resize(a);
                        pool_b.resize(a);
                        VertexList to_x{xe, x};
                        VertexList to_y = found_path;
                        to_y.push_back(y);
                        SubdivisionWitness w = detail::assemble_pab_witness(
                            a, xe, std::min(x, y), std::max(x, y), pool_a, pool_b,
                            x < y ? to_x : to_y, x < y ? to_y : to_x);
                        verdict.witness = std::move(w);
                    }
                }
            }
        }
        report.claims.push_back(std::move(verdict));
    }

    // --- claim "M": at most omega neighbours per mixed class --------------
    for (const auto& [key, members] : partition.M) {
        auto [disc_part, conn_part] = key;
        ClaimVerdict verdict;
        verdict.claim = "M[" + std::to_string(disc_part) + "," + std::to_string(conn_part) + "]";
        VertexList hits = detail::intersect_sorted(nq, members);
        verdict.count = (long long)hits.size();
        report.neighbours_in_m[key] = (int)hits.size();
        verdict.bound = omega;
        verdict.count_ok = BigInt(verdict.count) <= verdict.bound;
        // the bound's argument only needs two non-adjacent neighbours, so
        // the structural predicate is: the hits form a clique
        std::pair<int, int> bad{-1, -1};
        for (std::size_t p = 0; p < hits.size() && bad.first == -1; ++p)
            for (std::size_t q2 = p + 1; q2 < hits.size(); ++q2)
                if (!g.adjacent(hits[p], hits[q2])) {
                    bad = {hits[p], hits[q2]};
                    break;
                }
        verdict.structural_ok = bad.first == -1;
        if (!verdict.structural_ok) {
            auto [x, y] = bad;
            auto path = detail::shortest_path_via(g, x, y, interior_ok);
            if (!path) {
                verdict.detail = "no connecting path through Q (unexpected)";
            } else {
                VertexList interior(path->begin() + 1, path->end() - 1);
                VertexList interior_nbh = set_neighbourhood(g, interior);
                VertexList path_nbh = set_neighbourhood(g, *path);
                VertexList pool_a;
                for (int u : X.parts[disc_part])
                    if (g.adjacent(x, u) && g.adjacent(y, u) &&
                        !std::binary_search(interior_nbh.begin(), interior_nbh.end(), u))
                        pool_a.push_back(u);
                VertexList pool_b;
                for (int u : X.parts[conn_part])
                    if (!std::binary_search(path_nbh.begin(), path_nbh.end(), u))
                        pool_b.push_back(u);
                if ((int)pool_a.size() < a || (int)pool_b.size() < a) {
                    verdict.detail = "parts too small to assemble the forbidden copy";
                } else {
                    pool_a.resize(a);
                    pool_b.resize(a);
                    int apex = (*path)[1];
                    VertexList to_x{apex, x};
                    VertexList to_y(path->begin() + 1, path->end());
                    SubdivisionWitness w = detail::assemble_pab_witness(
                        a, apex, std::min(x, y), std::max(x, y), pool_a, pool_b,
                        x < y ? to_x : to_y, x < y ? to_y : to_x);
                    verdict.witness = std::move(w);
                }
            }
        }
        report.claims.push_back(std::move(verdict));
    }

    // --- claim "C": at most omega * f^(a+1) neighbours per conflict class --
    for (int i = 0; i < r; ++i) {
        ClaimVerdict verdict;
        verdict.claim = "C[" + std::to_string(i) + "]";
        VertexList hits = detail::intersect_sorted(nq, partition.C[i]);
        verdict.count = (long long)hits.size();
        report.neighbours_in_c.push_back((int)hits.size());
        verdict.bound = BigInt(omega) * detail::big_pow(sheet.f, a + 1);
        verdict.count_ok = BigInt(verdict.count) <= verdict.bound;

        // bucket by the lowest-id set of exactly a+1 non-neighbours in the
        // conflict part; the argument needs two non-adjacent vertices with
        // the same bucket, so: every bucket is a clique
        std::map<VertexList, VertexList> buckets;
        for (int v : hits) {
            VertexList sv;
            for (int u : X.parts[i]) {
                if (!g.adjacent(v, u)) sv.push_back(u);
                if ((int)sv.size() == a + 1) break;
            }
            buckets[sv].push_back(v);
        }
        std::pair<int, int> bad{-1, -1};
        VertexList shared_s;
        for (const auto& [sv, members] : buckets) {
            for (std::size_t p = 0; p < members.size() && bad.first == -1; ++p)
                for (std::size_t q2 = p + 1; q2 < members.size(); ++q2)
                    if (!g.adjacent(members[p], members[q2])) {
                        bad = {members[p], members[q2]};
                        shared_s = sv;
                        break;
                    }
            if (bad.first != -1) break;
        }
        verdict.structural_ok = bad.first == -1;
        if (!verdict.structural_ok) {
            auto [x, y] = bad;
            auto path = detail::shortest_path_via(g, x, y, interior_ok);
            if (!path) {
                verdict.detail = "no connecting path through Q (unexpected)";
            } else {
                VertexList interior(path->begin() + 1, path->end() - 1);
                VertexList interior_nbh = set_neighbourhood(g, interior);
                // S' = S minus N(Q) stays anticomplete to the whole component
                VertexList pool_b;
                for (int u : shared_s)
                    if (!std::binary_search(nq.begin(), nq.end(), u)) pool_b.push_back(u);
                int other = -1;
                VertexList pool_a;
                for (int k = 0; k < r && other == -1; ++k) {
                    if (k == i) continue;
                    VertexList pool;
                    for (int u : X.parts[k])
                        if (g.adjacent(x, u) && g.adjacent(y, u) &&
                            !std::binary_search(interior_nbh.begin(), interior_nbh.end(), u))
                            pool.push_back(u);
                    if ((int)pool.size() >= a) {
                        other = k;
                        pool_a = pool;
                    }
                }
                if ((int)pool_b.size() < a || other == -1) {
                    verdict.detail = "parts too small to assemble the forbidden copy";
                } else {
                    pool_a.resize(a);
                    pool_b.resize(a);
                    int apex = (*path)[1];
                    VertexList to_x{apex, x};
                    VertexList to_y(path->begin() + 1, path->end());
                    SubdivisionWitness w = detail::assemble_pab_witness(
                        a, apex, std::min(x, y), std::max(x, y), pool_a, pool_b,
                        x < y ? to_x : to_y, x < y ? to_y : to_x);
                    verdict.witness = std::move(w);
                }
            }
        }
        report.claims.push_back(std::move(verdict));
    }

    for (const auto& verdict : report.claims)
        if (!verdict.pass()) report.all_claims_pass = false;

    // --- separation --------------------------------------------------------
    VertexList x_all = X.all_vertices();
    VertexList x_rest;
    for (int v : x_all)
        if (!std::binary_search(nq.begin(), nq.end(), v)) x_rest.push_back(v);
    report.remainder_nonempty = !x_rest.empty();

    std::vector<char> deleted(g.vertex_count(), 0);
    for (int v : nq) deleted[v] = 1;
    std::vector<char> reached(g.vertex_count(), 0);
    std::queue<int> bfs;
    for (int v : Q) {
        reached[v] = 1;
        bfs.push(v);
    }
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int u : g.neighbours(v))
            if (!deleted[u] && !reached[u]) {
                reached[u] = 1;
                bfs.push(u);
            }
    }
    report.separates = true;
    for (int v : x_rest)
        if (reached[v]) report.separates = false;

    report.neighbourhood_below_b = BigInt((long long)nq.size()) < sheet.b;
    return report;
}

} // namespace pab
