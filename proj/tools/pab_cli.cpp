// pab: command-line front door for the P(a,b) structure laboratory.
//
// Subcommands: gen, convert, detect, decompose, bounds, verify.  Every
// command emits machine-readable JSON with a stable key order and no
// timestamps, so identical invocations produce byte-identical output.
// Exit codes: 0 success / member, 1 negative finding (non-member, failed
// campaign instances, failed checks), 2 error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pab/pab.hpp"

namespace {

using pab::Json;

pab::GraphFormat parse_format_name(const std::string& name) {
    if (name == "graph6" || name == "g6") return pab::GraphFormat::Graph6;
    if (name == "dimacs") return pab::GraphFormat::Dimacs;
    if (name == "edgelist") return pab::GraphFormat::EdgeList;
    throw pab::PreconditionError("unknown format: " + name);
}

pab::GraphFormat infer_format(const std::string& path, const std::string& override_name) {
    if (!override_name.empty()) return parse_format_name(override_name);
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "g6" || ext == "graph6") return pab::GraphFormat::Graph6;
    if (ext == "dimacs" || ext == "col") return pab::GraphFormat::Dimacs;
    if (ext == "txt" || ext == "edges" || ext == "edgelist") return pab::GraphFormat::EdgeList;
    throw pab::PreconditionError("cannot infer format from '" + path +
                                 "'; pass --format graph6|dimacs|edgelist");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pab::PreconditionError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pab::PreconditionError("cannot open output file: " + path);
    out << payload;
}

void emit_json(const Json& j, const std::string& json_out) {
    std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out) throw pab::PreconditionError("cannot open output file: " + json_out);
        out << text << "\n";
    }
}

// c is given as "1", "1/m", or a decimal like "0.25"; the reciprocal must be
// a positive integer so the bound arithmetic stays exact.
long long parse_c_const(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        if (num <= 0 || den <= 0 || den % num != 0)
            throw pab::PreconditionError("--c-const must be the reciprocal of a positive integer");
        return den / num;
    }
    double value = std::stod(text);
    if (value <= 0 || value > 1)
        throw pab::PreconditionError("--c-const must lie in (0, 1]");
    double inv = 1.0 / value;
    long long rounded = (long long)(inv + 0.5);
    if (std::abs(inv - (double)rounded) > 1e-9)
        throw pab::PreconditionError("--c-const must be the reciprocal of a positive integer");
    return rounded;
}

pab::BoundConfig parse_bound_config(const std::string& c_const, const std::string& d_function) {
    pab::BoundConfig cfg;
    cfg.c_inverse = parse_c_const(c_const);
    if (d_function == "poly") {
        cfg.d_kind = pab::BoundConfig::DKind::Poly;
    } else if (d_function.rfind("fixed:", 0) == 0) {
        cfg.d_kind = pab::BoundConfig::DKind::Fixed;
        cfg.d_fixed = pab::BigInt(d_function.substr(6));
    } else {
        throw pab::PreconditionError("--d-function must be 'poly' or 'fixed:N'");
    }
    return cfg;
}

Json witness_json_with_graph(const pab::Graph& g, const pab::SubdivisionWitness& w) {
    Json j = pab::to_json(w);
    j["host"] = pab::to_json(g);
    return j;
}

Json summary_json(const pab::CampaignSummary& summary) {
    Json j;
    j["schema_version"] = pab::kSchemaVersion;
    j["campaign"] = summary.config.name;
    Json cfg;
    cfg["seed"] = summary.config.seed;
    cfg["instances"] = summary.config.instances;
    cfg["a"] = summary.config.a;
    cfg["n_min"] = summary.config.n_min;
    cfg["n_max"] = summary.config.n_max;
    cfg["edge_probabilities"] = summary.config.edge_probabilities;
    j["config"] = std::move(cfg);
    j["instances_run"] = summary.instances_run;
    j["passes"] = summary.passes;
    Json failures = Json::array();
    for (const auto& f : summary.failures) {
        Json entry;
        entry["index"] = f.index;
        entry["instance_seed"] = f.instance_seed;
        entry["diagnostic"] = f.diagnostic;
        failures.push_back(std::move(entry));
    }
    j["failures"] = std::move(failures);
    Json stats;
    for (const auto& [key, value] : summary.stats) stats[key] = value;
    j["stats"] = std::move(stats);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pab: structure laboratory for graphs excluding induced subdivisions of P(a,b)"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph and write it out");
    std::string gen_kind, gen_out = "-", gen_format = "graph6", gen_sizes;
    int gen_a = 2, gen_b = 2, gen_n = 10;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    gen->add_option("--kind", gen_kind, "pattern | multipartite | random | path | cycle | complete")
        ->required();
    gen->add_option("--a", gen_a, "pattern parameter a");
    gen->add_option("--b", gen_b, "pattern parameter b");
    gen->add_option("--sizes", gen_sizes, "comma-separated part sizes for multipartite");
    gen->add_option("--n", gen_n, "vertex count for random/path/cycle/complete");
    gen->add_option("--p", gen_p, "edge probability for random");
    gen->add_option("--seed", gen_seed, "seed for random");
    gen->add_option("--format", gen_format, "graph6 | dimacs | edgelist");
    gen->add_option("--out", gen_out, "output path ('-' for stdout)");

    // ---- convert --------------------------------------------------------------
    auto* convert = app.add_subcommand("convert", "convert a graph between formats");
    std::string conv_in, conv_out = "-", conv_from, conv_to;
    convert->add_option("--input", conv_in, "input path ('-' for stdin)")->required();
    convert->add_option("--output", conv_out, "output path ('-' for stdout)");
    convert->add_option("--from", conv_from, "input format (inferred from extension if absent)");
    convert->add_option("--to", conv_to, "output format")->required();

    // ---- detect ---------------------------------------------------------------
    auto* detect = app.add_subcommand("detect", "class membership test with witness extraction");
    std::string det_in, det_format, det_json_out;
    int det_a = 2;
    bool det_guard_override = false;
    detect->add_option("--input", det_in, "input path ('-' for stdin)")->required();
    detect->add_option("--format", det_format, "graph6 | dimacs | edgelist");
    detect->add_option("--a", det_a, "pattern parameter (pattern is P(a,a))");
    detect->add_option("--json-out", det_json_out, "also write the JSON report here");
    detect->add_flag("--guard-override", det_guard_override, "lift all size guards");

    // ---- decompose -------------------------------------------------------------
    auto* decompose = app.add_subcommand("decompose", "run the full structural pipeline");
    std::string dec_in, dec_format, dec_json_out, dec_tau_mode = "oracle";
    std::string dec_c_const = "1", dec_d_function = "poly";
    int dec_a = 2;
    bool dec_guard_override = false;
    decompose->add_option("--input", dec_in, "input path ('-' for stdin)")->required();
    decompose->add_option("--format", dec_format, "graph6 | dimacs | edgelist");
    decompose->add_option("--a", dec_a, "class parameter (a >= 2)");
    decompose->add_option("--tau-mode", dec_tau_mode, "oracle | fixed:N");
    decompose->add_option("--c-const", dec_c_const, "Ramsey constant c (reciprocal integer)");
    decompose->add_option("--d-function", dec_d_function, "poly | fixed:N");
    decompose->add_option("--json-out", dec_json_out, "also write the JSON report here");
    decompose->add_flag("--guard-override", dec_guard_override, "lift all size guards");

    // ---- bounds ----------------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "evaluate the bound sheet exactly");
    int b_a = 2, b_omega = 3;
    long long b_tau = 0;
    std::string b_c_const = "1", b_d_function = "poly", b_json_out;
    bounds->add_option("--a", b_a, "class parameter (a >= 2)")->required();
    bounds->add_option("--omega", b_omega, "clique number")->required();
    bounds->add_option("--tau", b_tau, "inductive colour count")->required();
    bounds->add_option("--c-const", b_c_const, "Ramsey constant c (reciprocal integer)");
    bounds->add_option("--d-function", b_d_function, "poly | fixed:N");
    bounds->add_option("--json-out", b_json_out, "also write the JSON report here");

    // ---- verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "randomized verification campaigns");
    pab::CampaignConfig campaign;
    std::string ver_json_out, ver_ps;
    int ver_replay = -1;
    bool ver_guard_override = false;
    verify->add_option("--campaign", campaign.name,
                       "lemma1 | growth | claim2 | cutset | witnesses")->required();
    verify->add_option("--instances", campaign.instances, "instance count");
    verify->add_option("--seed", campaign.seed, "campaign seed");
    verify->add_option("--a", campaign.a, "class parameter");
    verify->add_option("--n-min", campaign.n_min, "smallest host size");
    verify->add_option("--n-max", campaign.n_max, "largest host size");
    verify->add_option("--p", ver_ps, "comma-separated edge probabilities");
    verify->add_option("--replay", ver_replay, "re-run one instance and print its report");
    verify->add_option("--json-out", ver_json_out, "also write the JSON summary here");
    verify->add_flag("--guard-override", ver_guard_override, "lift all size guards");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            pab::Graph g;
            if (gen_kind == "pattern") {
                g = pab::gen_pattern(gen_a, gen_b).underlying;
            } else if (gen_kind == "multipartite") {
                std::vector<int> sizes;
                std::stringstream ss(gen_sizes);
                std::string tok;
                while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
                g = pab::gen_complete_multipartite(sizes);
            } else if (gen_kind == "random") {
                g = pab::gen_random(gen_n, gen_p, gen_seed);
            } else if (gen_kind == "path") {
                g = pab::gen_path(gen_n);
            } else if (gen_kind == "cycle") {
                g = pab::gen_cycle(gen_n);
            } else if (gen_kind == "complete") {
                g = pab::gen_complete(gen_n);
            } else {
                throw pab::PreconditionError("unknown generator: " + gen_kind);
            }
            write_output(gen_out, pab::emit_graph(g, parse_format_name(gen_format)));
            return 0;
        }

        if (convert->parsed()) {
            pab::GraphFormat from = conv_from.empty() && conv_in != "-"
                                        ? infer_format(conv_in, conv_from)
                                        : parse_format_name(conv_from.empty() ? "graph6"
                                                                              : conv_from);
            pab::Graph g = pab::parse_graph(read_input(conv_in), from);
            write_output(conv_out, pab::emit_graph(g, parse_format_name(conv_to)));
            return 0;
        }

        if (detect->parsed()) {
            pab::Guards guards =
                det_guard_override ? pab::Guards::unlimited() : pab::default_guards();
            pab::Graph g = pab::parse_graph(read_input(det_in), infer_format(det_in, det_format));
            pab::PatternPab pattern = pab::gen_pattern(det_a, det_a);
            auto witness = pab::detect_induced_subdivision(pattern, g, guards);
            Json j;
            j["schema_version"] = pab::kSchemaVersion;
            j["a"] = det_a;
            j["n"] = g.vertex_count();
            j["member"] = !witness.has_value();
            if (witness) j["witness"] = witness_json_with_graph(g, *witness);
            emit_json(j, det_json_out);
            return witness ? 1 : 0;
        }

        if (decompose->parsed()) {
            pab::DriverConfig cfg;
            cfg.a = dec_a;
            cfg.guards = dec_guard_override ? pab::Guards::unlimited() : pab::default_guards();
            cfg.bound_config = parse_bound_config(dec_c_const, dec_d_function);
            if (dec_tau_mode == "oracle") {
                cfg.tau_override = std::nullopt;
            } else if (dec_tau_mode.rfind("fixed:", 0) == 0) {
                cfg.tau_override = std::stoll(dec_tau_mode.substr(6));
            } else {
                throw pab::PreconditionError("--tau-mode must be 'oracle' or 'fixed:N'");
            }
            pab::Graph g = pab::parse_graph(read_input(dec_in), infer_format(dec_in, dec_format));
            pab::DecompositionReport report = pab::decompose_driver(g, cfg);
            emit_json(pab::to_json(report), dec_json_out);
            return report.member && report.checks_ok ? 0 : 1;
        }

        if (bounds->parsed()) {
            pab::BoundSheet sheet =
                pab::compute_bounds(b_a, b_omega, b_tau, parse_bound_config(b_c_const,
                                                                            b_d_function));
            emit_json(pab::to_json(sheet), b_json_out);
            return 0;
        }

        if (verify->parsed()) {
            if (ver_guard_override) campaign.guards = pab::Guards::unlimited();
            if (!ver_ps.empty()) {
                campaign.edge_probabilities.clear();
                std::stringstream ss(ver_ps);
                std::string tok;
                while (std::getline(ss, tok, ',')) campaign.edge_probabilities.push_back(
                    std::stod(tok));
            }
            if (ver_replay >= 0) {
                pab::InstanceOutcome outcome = pab::run_campaign_instance(campaign, ver_replay);
                Json j;
                j["schema_version"] = pab::kSchemaVersion;
                j["campaign"] = campaign.name;
                j["index"] = ver_replay;
                j["instance_seed"] = pab::mix_seed(campaign.seed, (std::uint64_t)ver_replay);
                j["pass"] = outcome.pass;
                if (!outcome.diagnostic.empty()) j["diagnostic"] = outcome.diagnostic;
                Json stats;
                for (const auto& [key, value] : outcome.stats) stats[key] = value;
                j["stats"] = std::move(stats);
                emit_json(j, ver_json_out);
                return outcome.pass ? 0 : 1;
            }
            pab::CampaignSummary summary = pab::run_campaign(campaign);
            emit_json(summary_json(summary), ver_json_out);
            return summary.failures.empty() ? 0 : 1;
        }
    } catch (const pab::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
