#pragma once

#include <optional>
#include <string>

#include "pab/attachment.hpp"
#include "pab/bounds.hpp"
#include "pab/colouring.hpp"
#include "pab/connectivity.hpp"
#include "pab/cutset.hpp"
#include "pab/multipartite.hpp"
#include "pab/subdivision.hpp"

namespace pab {

struct DriverConfig {
    int a = 2;
    Guards guards = default_guards();
    BoundConfig bound_config;
    // tau for the bound sheet: when absent, the exact chromatic number of the
    // host is used (a sound stand-in for the inductive colour count; the
    // dominating branch additionally reports the tau its recursive colourings
    // actually needed)
    std::optional<long long> tau_override;
};

// Full trace of one decomposition run.  Every stage appends to `log`; every
// certificate and witness is carried so callers can re-verify them without
// rerunning the pipeline.
struct DecompositionReport {
    int a = 0;
    int n = 0;
    bool member = false;
    std::optional<SubdivisionWitness> membership_witness; // when not a member

    int omega = 0;
    int chi_exact = 0;
    long long tau_used = 0;
    BoundSheet sheet;

    // highly connected subgraph stage
    int connect_k = 0;            // largest k for which the search succeeded
    VertexList core_vertices;     // the subgraph handed to the later stages
    int core_omega = 0;
    int core_chi = 0;

    // complete bipartite stage (desk-scale s stands in for the threshold)
    int s_desk = 0;
    bool kss_found = false;

    std::string branch; // "degeneracy" | "dominating" | "cutset"
    std::optional<DegeneracyColouring> degeneracy;
    int degeneracy_d = 0;
    std::optional<Template> tmpl;
    std::optional<AttachmentPartition> attachment;
    std::optional<DominatingColouring> dominating;
    std::vector<CutsetReport> cutset_reports;

    bool checks_ok = true;
    std::vector<std::string> check_failures;
    std::vector<std::string> log;
};

// Executes the structural pipeline on a class member with oracle-mode
// thresholds: exact oracles stand in for the existence theorems, searches
// either succeed or report insufficiency honestly, and the formula-mode
// thresholds are carried alongside in the bound sheet.
inline DecompositionReport decompose_driver(const Graph& g, const DriverConfig& cfg) {
    if (cfg.a < 2) throw PreconditionError("decompose_driver: a must be >= 2");
    DecompositionReport report;
    report.a = cfg.a;
    report.n = g.vertex_count();

    auto note = [&](std::string line) { report.log.push_back(std::move(line)); };
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) {
            report.checks_ok = false;
            report.check_failures.push_back(what);
        }
    };

    PatternPab pattern = gen_pattern(cfg.a, cfg.a);
    auto member_witness = detect_induced_subdivision(pattern, g, cfg.guards);
    report.member = !member_witness.has_value();
    if (!report.member) {
        report.membership_witness = std::move(member_witness);
        note("host contains an induced subdivision of P(" + std::to_string(cfg.a) + "," +
             std::to_string(cfg.a) + "); pipeline requires a class member");
        return report;
    }
    note("membership verified: no induced subdivision of P(" + std::to_string(cfg.a) + "," +
         std::to_string(cfg.a) + ")");

    report.omega = clique_number(g, cfg.guards).size;
    ColouringCertificate chi = chromatic_number(g, cfg.guards);
    report.chi_exact = chi.colours_used;
    report.tau_used = cfg.tau_override.value_or(report.chi_exact);
    report.sheet = compute_bounds(cfg.a, std::max(report.omega, 1), report.tau_used,
                                  cfg.bound_config);
    note("omega = " + std::to_string(report.omega) + ", chi = " +
         std::to_string(report.chi_exact) + ", tau for the sheet = " +
         std::to_string(report.tau_used));

    // ---- highly connected, highly chromatic subgraph (oracle mode) --------
    report.connect_k = 0;
    InducedSubgraph core;
    {
        bool found = false;
        for (int k = report.chi_exact; k >= 1 && !found; --k) {
            KConnectedSearch search = find_k_connected_chromatic(g, k, cfg.guards);
            if (search.found) {
                report.connect_k = k;
                core = std::move(search.subgraph);
                found = true;
            }
        }
        if (!found) {
            VertexList all(g.vertex_count());
            std::iota(all.begin(), all.end(), 0);
            core = induced_subgraph(g, all);
            note("no k-connected high-chromatic subgraph for any k >= 1; continuing on the "
                 "whole host");
        } else {
            note("subgraph with connectivity and chromatic number >= " +
                 std::to_string(report.connect_k) + " on " +
                 std::to_string(core.graph.vertex_count()) + " vertices");
        }
    }
    report.core_vertices = core.vertices;
    report.core_omega = clique_number(core.graph, cfg.guards).size;
    report.core_chi = chromatic_number(core.graph, cfg.guards).colours_used;

    long long f_ll = report.sheet.f.convert_to<long long>();
    report.s_desk = (int)f_ll; // induced f-sets are what the extraction needs
    note("part-size target f = " + std::to_string(f_ll) + "; desk-scale s = f (formula s = " +
         report.sheet.s.str() + ")");

    // ---- K_{s,s} or the degeneracy branch ---------------------------------
    auto run_degeneracy = [&](const std::string& why) {
        report.branch = "degeneracy";
        note(why);
        // oracle-mode d: the actual degeneracy + 1 (the formula d in the
        // sheet is astronomically larger and would colour vacuously)
        int d = graph_degeneracy(core.graph) + 1;
        report.degeneracy_d = d;
        report.degeneracy = degeneracy_colouring(core.graph, d);
        note("degeneracy colouring with d = " + std::to_string(d) + " (formula d = " +
             report.sheet.d_value.str() + "), colours used = " +
             std::to_string(report.degeneracy->certificate.colours_used));
        check(is_proper_colouring(core.graph, report.degeneracy->certificate),
              "degeneracy certificate proper");
        check(report.degeneracy->certificate.colours_used <= d,
              "degeneracy certificate within d colours");
    };

    std::optional<Kss> kss;
    if (core.graph.vertex_count() >= 2 * report.s_desk)
        kss = find_kss(core.graph, report.s_desk, cfg.guards);
    report.kss_found = kss.has_value();
    if (!kss) {
        run_degeneracy("no K_{s,s} with s = " + std::to_string(report.s_desk) +
                       "; taking the degeneracy branch");
        return report;
    }
    note("found K_{s,s} with s = " + std::to_string(report.s_desk));

    BicliqueExtraction extraction =
        extract_induced_biclique(core.graph, kss->left, kss->right, (int)f_ll, cfg.guards);
    if (!extraction.found) {
        run_degeneracy("induced biclique extraction failed (" + extraction.diagnostic +
                       "); taking the degeneracy branch");
        return report;
    }
    note("extracted an induced K_{f,f} with f = " + std::to_string(f_ll));

    MaxTemplateResult mt = max_template(core.graph, (int)f_ll, cfg.a, cfg.guards);
    if (!mt.found) {
        run_degeneracy("no template under the part-size law (" + mt.diagnostic +
                       "); taking the degeneracy branch");
        return report;
    }
    check(mt.tmpl.r() <= report.core_omega, "template width r <= omega");
    check((bool)verify_template(core.graph, mt.tmpl), "template invariants");
    report.tmpl = mt.tmpl;
    note("maximal template: r = " + std::to_string(mt.tmpl.r()) + ", part size " +
         std::to_string(mt.tmpl.parts.front().size()));

    AttachmentPartition partition = partition_attachment(core.graph, mt.tmpl, cfg.a);
    report.attachment = partition;
    note("attachment partition: |Z| = " + std::to_string(partition.Z.size()) +
         ", |A| = " + std::to_string(partition.A_free.size()));

    if (partition.A_free.empty()) {
        report.branch = "dominating";
        DominatingColouring dom = dominating_colouring(core.graph, mt.tmpl, cfg.a,
                                                       exact_subcolourer(cfg.guards), cfg.guards);
        note("dominating colouring: " + std::to_string(dom.certificate.colours_used) +
             " colours, recursive tau = " + std::to_string(dom.tau) + ", budget " +
             std::to_string(dom.budget));
        check(is_proper_colouring(core.graph, dom.certificate),
              "dominating certificate proper");
        check(dom.certificate.colours_used <= dom.budget, "dominating certificate within budget");
        report.dominating = std::move(dom);
        return report;
    }

    report.branch = "cutset";
    InducedSubgraph a_sub = induced_subgraph(core.graph, partition.A_free);
    for (const auto& comp : connected_components(a_sub.graph)) {
        VertexList Q;
        for (int local : comp) Q.push_back(a_sub.vertices[local]);
        std::sort(Q.begin(), Q.end());
        CutsetReport cut = component_cutset_report(core.graph, mt.tmpl, partition, Q, cfg.a,
                                                   report.sheet);
        check(cut.separates, "N(Q) separates Q from the template remainder");
        for (const auto& verdict : cut.claims) {
            if (verdict.witness) {
                WitnessCheck wc =
                    validate_witness(pattern.underlying, core.graph, *verdict.witness);
                check(wc.ok, "claim violation witness validates (" + verdict.claim + ")");
            }
        }
        report.cutset_reports.push_back(std::move(cut));
    }
    note("cutset analysis over " + std::to_string(report.cutset_reports.size()) +
         " components of A");
    return report;
}

} // namespace pab
