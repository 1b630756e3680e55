#pragma once

#include <json.hpp>

#include "pab/attachment.hpp"
#include "pab/bounds.hpp"
#include "pab/colouring.hpp"
#include "pab/cutset.hpp"
#include "pab/driver.hpp"
#include "pab/graph.hpp"
#include "pab/multipartite.hpp"
#include "pab/oracles.hpp"
#include "pab/witness.hpp"

// JSON views of every report type.  Key order is fixed (insertion order via
// ordered_json) and payloads carry no timestamps, so identical runs serialize
// byte-identically.  Big integers are decimal strings.  Witnesses and
// colourings always use explicit host vertex ids.
namespace pab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "pab-report/1";

inline Json to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

inline Json to_json(const SubdivisionWitness& w) {
    Json j;
    Json branches = Json::array();
    for (std::size_t p = 0; p < w.branch_map.size(); ++p)
        branches.push_back(Json::array({(int)p, w.branch_map[p]}));
    j["branch_map"] = std::move(branches);
    Json paths = Json::array();
    for (const auto& [edge, path] : w.paths) {
        Json entry;
        entry["edge"] = Json::array({edge.first, edge.second});
        entry["path"] = path;
        paths.push_back(std::move(entry));
    }
    j["paths"] = std::move(paths);
    return j;
}

inline Json to_json(const ColouringCertificate& cert) {
    Json j;
    j["colours_used"] = cert.colours_used;
    j["colour"] = cert.colour;
    return j;
}

inline Json to_json(const Template& t) {
    Json j;
    j["r"] = t.r();
    j["parts"] = t.parts;
    return j;
}

inline Json to_json(const AttachmentPartition& p) {
    Json j;
    j["Z"] = p.Z;
    j["C"] = p.C;
    j["A"] = p.A_free;
    Json m = Json::array();
    for (const auto& [key, members] : p.M) {
        Json entry;
        entry["disconnected_part"] = key.first;
        entry["one_connected_part"] = key.second;
        entry["vertices"] = members;
        m.push_back(std::move(entry));
    }
    j["M"] = std::move(m);
    return j;
}

inline Json to_json(const BoundSheet& sheet) {
    Json j;
    j["a"] = sheet.a;
    j["omega"] = sheet.omega;
    j["tau"] = sheet.tau;
    j["c_inverse"] = sheet.config.c_inverse;
    j["d_kind"] = sheet.config.d_kind == BoundConfig::DKind::Poly ? "poly" : "fixed";
    j["f"] = sheet.f.str();
    j["s"] = sheet.s.str();
    j["d"] = sheet.d_value.str();
    j["term_degeneracy"] = sheet.term_degeneracy.str();
    j["term_dominating"] = sheet.term_dominating.str();
    j["term_cutset"] = sheet.term_cutset.str();
    j["b"] = sheet.b.str();
    j["chi_strict_bound"] = sheet.chi_strict_bound.str();
    j["final_bound"] = sheet.final_bound.str();
    return j;
}

inline Json to_json(const ClaimVerdict& v) {
    Json j;
    j["claim"] = v.claim;
    j["count"] = v.count;
    j["bound"] = v.bound.str();
    j["count_ok"] = v.count_ok;
    j["structural_ok"] = v.structural_ok;
    j["pass"] = v.pass();
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

inline Json to_json(const CutsetReport& r) {
    Json j;
    j["Q"] = r.Q;
    j["neighbourhood"] = r.neighbourhood;
    j["neighbours_in_z"] = r.neighbours_in_z;
    j["neighbours_in_part"] = r.neighbours_in_part;
    j["neighbours_in_c"] = r.neighbours_in_c;
    Json m = Json::array();
    for (const auto& [key, count] : r.neighbours_in_m) {
        Json entry;
        entry["class"] = Json::array({key.first, key.second});
        entry["count"] = count;
        m.push_back(std::move(entry));
    }
    j["neighbours_in_m"] = std::move(m);
    Json claims = Json::array();
    for (const auto& c : r.claims) claims.push_back(to_json(c));
    j["claims"] = std::move(claims);
    j["all_claims_pass"] = r.all_claims_pass;
    j["q_nonempty"] = r.q_nonempty;
    j["remainder_nonempty"] = r.remainder_nonempty;
    j["separates"] = r.separates;
    j["neighbourhood_below_b"] = r.neighbourhood_below_b;
    return j;
}

inline Json to_json(const DominatingColouring& d) {
    Json j;
    j["dominating_set"] = d.dominating_set;
    j["tau"] = d.tau;
    j["omega"] = d.omega;
    j["budget"] = d.budget;
    j["certificate"] = to_json(d.certificate);
    return j;
}

inline Json to_json(const DegeneracyColouring& d) {
    Json j;
    j["peel_order"] = d.peel_order;
    j["max_min_degree"] = d.max_min_degree;
    j["certificate"] = to_json(d.certificate);
    return j;
}

inline Json to_json(const DecompositionReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["a"] = r.a;
    j["n"] = r.n;
    j["member"] = r.member;
    if (r.membership_witness) j["membership_witness"] = to_json(*r.membership_witness);
    if (!r.member) return j;
    j["omega"] = r.omega;
    j["chi_exact"] = r.chi_exact;
    j["tau_used"] = r.tau_used;
    j["bounds"] = to_json(r.sheet);
    j["connect_k"] = r.connect_k;
    j["core_vertices"] = r.core_vertices;
    j["core_omega"] = r.core_omega;
    j["core_chi"] = r.core_chi;
    j["s_desk"] = r.s_desk;
    j["kss_found"] = r.kss_found;
    j["branch"] = r.branch;
    if (r.degeneracy) {
        j["degeneracy_d"] = r.degeneracy_d;
        j["degeneracy"] = to_json(*r.degeneracy);
    }
    if (r.tmpl) j["template"] = to_json(*r.tmpl);
    if (r.attachment) j["attachment"] = to_json(*r.attachment);
    if (r.dominating) j["dominating"] = to_json(*r.dominating);
    if (!r.cutset_reports.empty()) {
        Json cuts = Json::array();
        for (const auto& c : r.cutset_reports) cuts.push_back(to_json(c));
        j["cutset_reports"] = std::move(cuts);
    }
    j["checks_ok"] = r.checks_ok;
    j["check_failures"] = r.check_failures;
    j["log"] = r.log;
    return j;
}

} // namespace pab
