// Command-line front end for the spn library. All analysis is done by
// library calls; this file only parses arguments and formats reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spn/domination.hpp"
#include "spn/dot.hpp"
#include "spn/examples.hpp"
#include "spn/execution.hpp"
#include "spn/io.hpp"
#include "spn/model.hpp"
#include "spn/signing.hpp"
#include "spn/synthesis.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace spn;

struct CommonOpts {
    bool strict = false;
    std::string format = "text";

    bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_flag("--strict", opts.strict,
                  "exit with status 1 on a negative analysis verdict");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
}

void add_caps(CLI::App* cmd, ExplorationCaps& caps) {
    cmd->add_option("--max-nodes", caps.max_nodes, "reachability tree node cap")
        ->capture_default_str();
    cmd->add_option("--max-depth", caps.max_depth, "reachability tree depth cap")
        ->capture_default_str();
    cmd->add_option("--max-tokens", caps.max_tokens_per_place,
                    "per-place token cap during exploration")
        ->capture_default_str();
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream stream(text);
    while (std::getline(stream, item, ',')) {
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.pop_back();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

VertexId resolve_vertex(const SpnStructure& structure, const std::string& name) {
    if (auto v = structure.find_vertex(name)) return *v;
    // fall back to positional names pN / tN for unlabeled nets
    if (name.size() >= 2 && (name[0] == 'p' || name[0] == 't')) {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
        if (digits) {
            VertexId v = name[0] == 'p' ? VertexId::place(std::stoi(name.substr(1)))
                                        : VertexId::transition(std::stoi(name.substr(1)));
            if (structure.in_range(v)) return v;
        }
    }
    throw std::runtime_error("unknown vertex \"" + name + "\"");
}

VertexSet parse_vertex_set(const SpnStructure& structure, const std::string& csv) {
    std::vector<VertexId> members;
    for (const std::string& name : split_csv(csv))
        members.push_back(resolve_vertex(structure, name));
    return VertexSet(std::move(members));
}

std::vector<int> parse_node_ids(const std::string& csv) {
    std::vector<int> out;
    for (const std::string& item : split_csv(csv)) out.push_back(std::stoi(item));
    return out;
}

std::string set_to_string(const SpnStructure& structure, const VertexSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.members.size(); ++i) {
        if (i) out += ",";
        out += structure.label(set.members[i]);
    }
    return out + "}";
}

Marking marking_or_initial(const SignedPetriNet& net,
                           const std::string& marking_text) {
    if (marking_text.empty()) return net.initial_marking;
    return parse_marking(marking_text, net.structure.place_count());
}

json marking_json(const Marking& m) {
    return json{{"positive", m.positive}, {"negative", m.negative}};
}

json vertex_list_json(const SpnStructure& structure,
                      const std::vector<VertexId>& vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(structure.label(v));
    return out;
}

json domination_report_json(const SpnStructure& structure,
                            const DominationReport& report) {
    json failures = json::array();
    for (const DominationFailure& f : report.failures) {
        json entry;
        entry["vertex"] = structure.label(f.vertex);
        entry["reason"] = f.reason == DominationFailureReason::sign_mismatch
                              ? "sign-mismatch"
                              : "empty-postset-intersection";
        if (f.witness) entry["witness"] = structure.label(*f.witness);
        if (f.context) entry["context"] = *f.context;
        failures.push_back(entry);
    }
    return json{{"set", vertex_list_json(structure, report.set.members)},
                {"dominating", report.dominating},
                {"failures", failures}};
}

void print_domination_report(const SpnStructure& structure,
                             const DominationReport& report,
                             const char* context_name) {
    std::cout << "set: " << set_to_string(structure, report.set) << "\n";
    std::cout << "dominating: " << (report.dominating ? "yes" : "no") << "\n";
    for (const DominationFailure& f : report.failures) {
        std::cout << "  " << structure.label(f.vertex) << ": ";
        if (f.reason == DominationFailureReason::sign_mismatch)
            std::cout << "sign mismatch towards " << structure.label(*f.witness);
        else
            std::cout << "postset does not meet the set";
        if (f.context) std::cout << " (" << context_name << " " << *f.context << ")";
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Signed Petri net toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- validate ----------------------------------------------------
    auto* validate_cmd = app.add_subcommand("validate", "check net structure");
    static std::string validate_model;
    static CommonOpts validate_opts;
    validate_cmd->add_option("model", validate_model, "model file")->required();
    add_common(validate_cmd, validate_opts);
    validate_cmd->callback([&] {
        SignedPetriNet net = load_model_file(validate_model);
        ValidationReport report = validate(net.structure);
        if (validate_opts.structured()) {
            json violations = json::array();
            for (const Violation& v : report.violations)
                violations.push_back({{"code", v.code},
                                      {"vertex", net.structure.label(v.vertex)},
                                      {"message", v.message}});
            std::cout << json{{"ok", report.ok},
                              {"violations", violations},
                              {"is_ordinary", report.is_ordinary},
                              {"is_negative_spn", report.is_negative_spn},
                              {"has_sources", report.has_sources},
                              {"has_sinks", report.has_sinks}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "ok: " << (report.ok ? "yes" : "no") << "\n";
            for (const Violation& v : report.violations)
                std::cout << "  " << v.code << ": " << v.message << "\n";
            std::cout << "ordinary: " << (report.is_ordinary ? "yes" : "no")
                      << "\nnegative spn: " << (report.is_negative_spn ? "yes" : "no")
                      << "\nsources: " << (report.has_sources ? "yes" : "no")
                      << "\nsinks: " << (report.has_sinks ? "yes" : "no") << "\n";
        }
        if (validate_opts.strict && !report.ok) exit_code = 1;
    });

    // ---- fire --------------------------------------------------------
    auto* fire_cmd = app.add_subcommand("fire", "fire a transition sequence");
    static std::string fire_model, fire_seq, fire_marking;
    static CommonOpts fire_opts;
    fire_cmd->add_option("model", fire_model, "model file")->required();
    fire_cmd->add_option("--seq", fire_seq, "comma-separated transitions")
        ->required();
    fire_cmd->add_option("--marking", fire_marking,
                         "start marking ((..),(..)); default: initial marking");
    add_common(fire_cmd, fire_opts);
    fire_cmd->callback([&] {
        SignedPetriNet net = load_model_file(fire_model);
        FiringSequence seq;
        for (const std::string& name : split_csv(fire_seq)) {
            VertexId t = resolve_vertex(net.structure, name);
            if (!t.is_transition())
                throw std::runtime_error("\"" + name + "\" is not a transition");
            seq.transitions.push_back(t);
        }
        Marking start = marking_or_initial(net, fire_marking);
        FireSequenceResult result = fire_sequence(net.structure, start, seq);
        if (fire_opts.structured()) {
            json trace = json::array();
            for (const Marking& m : result.trace) trace.push_back(marking_json(m));
            json doc{{"trace", trace}};
            doc["failed_step"] =
                result.failed_step ? json(*result.failed_step) : json(nullptr);
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const Marking& m : result.trace) std::cout << to_string(m) << "\n";
            if (result.failed_step)
                std::cout << "step " << *result.failed_step + 1 << " ("
                          << net.structure.label(
                                 seq.transitions[*result.failed_step])
                          << ") is not enabled\n";
        }
        if (fire_opts.strict && !result.ok()) exit_code = 1;
    });

    // ---- reach -------------------------------------------------------
    auto* reach_cmd = app.add_subcommand("reach", "explore reachable markings");
    static std::string reach_model;
    static CommonOpts reach_opts;
    static ExplorationCaps reach_caps;
    static bool reach_tree = false;
    reach_cmd->add_option("model", reach_model, "model file")->required();
    add_caps(reach_cmd, reach_caps);
    reach_cmd->add_flag("--tree", reach_tree, "print the reachability tree");
    add_common(reach_cmd, reach_opts);
    reach_cmd->callback([&] {
        SignedPetriNet net = load_model_file(reach_model);
        ReachabilityTree tree = reachability_tree(net, reach_caps);
        ReachabilitySet set = reachability_set(net, reach_caps);
        if (reach_opts.structured()) {
            json nodes = json::array();
            for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
                const TreeNode& n = tree.nodes[i];
                json entry{{"id", i}, {"marking", marking_json(n.marking)}};
                entry["parent"] = n.parent < 0 ? json(nullptr) : json(n.parent);
                entry["via"] = n.via < 0 ? json(nullptr)
                                         : json(net.structure.label(
                                               VertexId::transition(n.via)));
                nodes.push_back(entry);
            }
            json markings = json::array();
            for (const Marking& m : set.markings) markings.push_back(marking_json(m));
            std::cout << json{{"tree", {{"nodes", nodes}, {"truncated", tree.truncated}}},
                              {"markings", markings},
                              {"complete", set.complete}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "tree nodes: " << tree.nodes.size()
                      << (tree.truncated ? " (truncated)" : "") << "\n";
            if (reach_tree)
                for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
                    const TreeNode& n = tree.nodes[i];
                    std::cout << "  " << i << ": " << to_string(n.marking);
                    if (n.parent >= 0)
                        std::cout << " via "
                                  << net.structure.label(VertexId::transition(n.via))
                                  << " from " << n.parent;
                    std::cout << "\n";
                }
            std::cout << "distinct markings: " << set.markings.size()
                      << "\ncomplete: " << (set.complete ? "yes" : "no") << "\n";
            for (const Marking& m : set.markings)
                std::cout << to_string(m) << "\n";
        }
    });

    // ---- signs -------------------------------------------------------
    auto* signs_cmd = app.add_subcommand("signs", "vertex sign table");
    static std::string signs_model, signs_marking;
    static CommonOpts signs_opts;
    signs_cmd->add_option("model", signs_model, "model file")->required();
    signs_cmd->add_option("--marking", signs_marking,
                          "marking for the marking-based column");
    add_common(signs_cmd, signs_opts);
    signs_cmd->callback([&] {
        SignedPetriNet net = load_model_file(signs_model);
        Marking marking = marking_or_initial(net, signs_marking);
        auto table = sign_table(net.structure, marking);
        if (signs_opts.structured()) {
            json rows = json::array();
            for (const VertexSignAssignment& row : table)
                rows.push_back({{"vertex", net.structure.label(row.vertex)},
                                {"sign", std::string(1, to_char(row.sign))},
                                {"basis", row.basis == SignBasis::arcs ? "arcs"
                                                                       : "marking"}});
            std::cout << json{{"signs", rows}}.dump(2) << "\n";
        } else {
            std::cout << "vertex\tarc-sign\tmarking-sign\n";
            for (VertexId v : net.structure.vertices()) {
                std::cout << net.structure.label(v) << "\t";
                if (v.is_place())
                    std::cout << to_char(place_sign_wrt_arcs(net.structure, v))
                              << "\t" << to_char(place_sign_wrt_marking(marking, v));
                else
                    std::cout << to_char(transition_sign(net.structure, v)) << "\t";
                std::cout << "\n";
            }
        }
    });

    // ---- dominate ------------------------------------------------------
    auto* dom = app.add_subcommand("dominate", "domination analysis");
    dom->require_subcommand(1);

    auto* dom_check = dom->add_subcommand("check", "test one vertex set");
    static std::string dc_model, dc_set, dc_marking;
    static CommonOpts dc_opts;
    dom_check->add_option("model", dc_model, "model file")->required();
    dom_check->add_option("--set", dc_set, "comma-separated vertex set")->required();
    dom_check->add_option("--marking", dc_marking, "marking; default: initial");
    add_common(dom_check, dc_opts);
    dom_check->callback([&] {
        SignedPetriNet net = load_model_file(dc_model);
        VertexSet d = parse_vertex_set(net.structure, dc_set);
        Marking marking = marking_or_initial(net, dc_marking);
        DominationReport report = is_dominating(net.structure, d, marking);
        if (dc_opts.structured())
            std::cout << domination_report_json(net.structure, report).dump(2) << "\n";
        else
            print_domination_report(net.structure, report, "marking");
        if (dc_opts.strict && !report.dominating) exit_code = 1;
    });

    auto* dom_minimal = dom->add_subcommand("minimal", "all minimal dominating sets");
    static std::string dm_model, dm_set, dm_marking;
    static CommonOpts dm_opts;
    dom_minimal->add_option("model", dm_model, "model file")->required();
    dom_minimal->add_option("--set", dm_set, "restrict the search to this set");
    dom_minimal->add_option("--marking", dm_marking, "marking; default: initial");
    add_common(dom_minimal, dm_opts);
    dom_minimal->callback([&] {
        SignedPetriNet net = load_model_file(dm_model);
        std::optional<VertexSet> restrict_to;
        if (!dm_set.empty()) restrict_to = parse_vertex_set(net.structure, dm_set);
        Marking marking = marking_or_initial(net, dm_marking);
        auto sets = minimal_dominating_sets(net.structure, marking, restrict_to);
        if (dm_opts.structured()) {
            json out = json::array();
            for (const VertexSet& s : sets)
                out.push_back(vertex_list_json(net.structure, s.members));
            std::cout << json{{"minimal_dominating_sets", out}}.dump(2) << "\n";
        } else {
            std::cout << sets.size() << " minimal dominating set"
                      << (sets.size() == 1 ? "" : "s") << "\n";
            for (const VertexSet& s : sets)
                std::cout << set_to_string(net.structure, s) << "\n";
        }
    });

    auto* dom_minimum = dom->add_subcommand("minimum", "smallest dominating set");
    static std::string dmin_model, dmin_marking;
    static CommonOpts dmin_opts;
    dom_minimum->add_option("model", dmin_model, "model file")->required();
    dom_minimum->add_option("--marking", dmin_marking, "marking; default: initial");
    add_common(dom_minimum, dmin_opts);
    dom_minimum->callback([&] {
        SignedPetriNet net = load_model_file(dmin_model);
        Marking marking = marking_or_initial(net, dmin_marking);
        VertexSet set = minimum_dominating_set(net.structure, marking);
        if (dmin_opts.structured())
            std::cout << json{{"minimum_dominating_set",
                               vertex_list_json(net.structure, set.members)}}
                             .dump(2)
                      << "\n";
        else
            std::cout << set_to_string(net.structure, set) << " (size "
                      << set.size() << ")\n";
    });

    auto* dom_dep = dom->add_subcommand("dependent",
                                        "test a set over a reachability subtree");
    static std::string dd_model, dd_set, dd_nodes;
    static CommonOpts dd_opts;
    static ExplorationCaps dd_caps;
    dom_dep->add_option("model", dd_model, "model file")->required();
    dom_dep->add_option("--set", dd_set, "comma-separated vertex set")->required();
    dom_dep->add_option("--nodes", dd_nodes, "comma-separated tree node ids")
        ->required();
    add_caps(dom_dep, dd_caps);
    add_common(dom_dep, dd_opts);
    dom_dep->callback([&] {
        SignedPetriNet net = load_model_file(dd_model);
        VertexSet d = parse_vertex_set(net.structure, dd_set);
        ReachabilityTree tree = reachability_tree(net, dd_caps);
        DominationReport report = is_dependent_dominating(
            net.structure, d, tree, parse_node_ids(dd_nodes));
        if (dd_opts.structured())
            std::cout << domination_report_json(net.structure, report).dump(2) << "\n";
        else
            print_domination_report(net.structure, report, "node");
        if (dd_opts.strict && !report.dominating) exit_code = 1;
    });

    auto* dom_max = dom->add_subcommand(
        "maximal-markings", "largest root-anchored dominated subtree");
    static std::string dmm_model, dmm_set;
    static CommonOpts dmm_opts;
    static ExplorationCaps dmm_caps;
    dom_max->add_option("model", dmm_model, "model file")->required();
    dom_max->add_option("--set", dmm_set, "comma-separated vertex set")->required();
    add_caps(dom_max, dmm_caps);
    add_common(dom_max, dmm_opts);
    dom_max->callback([&] {
        SignedPetriNet net = load_model_file(dmm_model);
        VertexSet d = parse_vertex_set(net.structure, dmm_set);
        ReachabilityTree tree = reachability_tree(net, dmm_caps);
        std::vector<int> nodes = maximal_dependent_marking_set(net.structure, d, tree);
        if (dmm_opts.structured()) {
            json out = json::array();
            for (int id : nodes)
                out.push_back({{"id", id},
                               {"marking", marking_json(tree.nodes[id].marking)}});
            std::cout << json{{"nodes", out}, {"truncated", tree.truncated}}.dump(2)
                      << "\n";
        } else {
            std::cout << nodes.size() << " dominated node"
                      << (nodes.size() == 1 ? "" : "s")
                      << (tree.truncated ? " (tree truncated)" : "") << "\n";
            for (int id : nodes)
                std::cout << "  " << id << ": " << to_string(tree.nodes[id].marking)
                          << "\n";
        }
    });

    // ---- similar (also available as `dominate similar`) ---------------
    static std::string sim_model, sim_marking;
    static CommonOpts sim_opts;
    auto setup_similar = [&](CLI::App* cmd, std::string& model_arg,
                             std::string& marking_arg, CommonOpts& opts) {
        cmd->add_option("model", model_arg, "model file")->required();
        cmd->add_option("--marking", marking_arg,
                        "post-matching marking; default: initial");
        add_common(cmd, opts);
        cmd->callback([&, cmd] {
            (void)cmd;
            SignedPetriNet net = load_model_file(model_arg);
            Marking marking = marking_or_initial(net, marking_arg);
            SimilarityReport report = similarity_report(net.structure, marking);
            if (opts.structured()) {
                std::cout << json{{"similar",
                                   vertex_list_json(net.structure, report.similar)},
                                  {"d2", vertex_list_json(net.structure,
                                                          report.d2.members)},
                                  {"d1_dominates", report.d1_dominates}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "similar: {";
                for (std::size_t i = 0; i < report.similar.size(); ++i)
                    std::cout << (i ? "," : "")
                              << net.structure.label(report.similar[i]);
                std::cout << "}\nD2: " << set_to_string(net.structure, report.d2)
                          << "\nplace set alone dominates: "
                          << (report.d1_dominates ? "yes" : "no") << "\n";
            }
        });
    };
    setup_similar(app.add_subcommand(
                      "similar", "domination-based similarity on a hub net"),
                  sim_model, sim_marking, sim_opts);
    static std::string dsim_model, dsim_marking;
    static CommonOpts dsim_opts;
    setup_similar(dom->add_subcommand("similar", "alias of the top-level command"),
                  dsim_model, dsim_marking, dsim_opts);

    // ---- synth ---------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "marking synthesis");
    synth->require_subcommand(1);
    static std::string synth_model;
    static CommonOpts synth_opts;
    auto setup_synth = [&](CLI::App* cmd, bool theorem2) {
        cmd->add_option("model", synth_model, "model file")->required();
        add_common(cmd, synth_opts);
        cmd->callback([&, theorem2] {
            SignedPetriNet net = load_model_file(synth_model);
            SynthesisReport report = theorem2
                                         ? synthesize_theorem2(net.structure)
                                         : synthesize_theorem1(net.structure);
            const SpnStructure& s = net.structure;
            if (synth_opts.structured()) {
                json doc;
                doc["hypothesis_ok"] = report.hypothesis_ok;
                doc["violated_hypotheses"] = report.violated_hypotheses;
                doc["source_set"] = vertex_list_json(s, report.source_set.members);
                json parities = json::array();
                for (int i = 0; i < s.place_count(); ++i)
                    parities.push_back({{"place", s.label(VertexId::place(i))},
                                        {"parity", to_string(
                                             report.parity_constraints[i])}});
                doc["parity_constraints"] = parities;
                doc["marking"] =
                    report.marking ? marking_json(*report.marking) : json(nullptr);
                json sets = json::array();
                for (const VertexSet& d : report.dominating_sets)
                    sets.push_back(vertex_list_json(s, d.members));
                doc["dominating_sets"] = sets;
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "hypotheses: "
                          << (report.hypothesis_ok ? "ok" : "violated") << "\n";
                for (const std::string& v : report.violated_hypotheses)
                    std::cout << "  " << v << "\n";
                if (!theorem2)
                    std::cout << "A: " << set_to_string(s, report.source_set) << "\n";
                if (report.hypothesis_ok) {
                    std::cout << "place\tparity\ttokens\n";
                    for (int i = 0; i < s.place_count(); ++i)
                        std::cout << s.label(VertexId::place(i)) << "\t"
                                  << to_string(report.parity_constraints[i]) << "\t("
                                  << report.marking->positive[i] << ","
                                  << report.marking->negative[i] << ")\n";
                    std::cout << "marking: " << to_string(*report.marking) << "\n";
                    for (const VertexSet& d : report.dominating_sets)
                        std::cout << "verified dominating: " << set_to_string(s, d)
                                  << "\n";
                }
            }
            if (synth_opts.strict && !report.hypothesis_ok) exit_code = 1;
        });
    };
    setup_synth(synth->add_subcommand("thm1",
                                      "marking making V minus the sources dominate"),
                false);
    setup_synth(synth->add_subcommand(
                    "thm2", "marking making both places and transitions dominate"),
                true);

    // ---- export-dot ----------------------------------------------------
    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering");
    static std::string dot_model, dot_marking, dot_output;
    dot_cmd->add_option("model", dot_model, "model file")->required();
    dot_cmd->add_option("--marking", dot_marking, "marking; default: initial");
    dot_cmd->add_option("-o,--output", dot_output, "output file; default: stdout");
    dot_cmd->callback([&] {
        SignedPetriNet net = load_model_file(dot_model);
        Marking marking = marking_or_initial(net, dot_marking);
        std::string dot = export_dot(net.structure, marking);
        if (dot_output.empty()) {
            std::cout << dot;
        } else {
            std::ofstream out(dot_output, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + dot_output);
            out << dot;
        }
    });

    // ---- examples --------------------------------------------------------
    auto* ex = app.add_subcommand("examples", "bundled demonstration models");
    ex->require_subcommand(1);
    auto* ex_list = ex->add_subcommand("list", "list bundled models");
    ex_list->callback([] {
        for (const ExampleModel& e : bundled_models()) {
            std::cout << e.id << ": " << e.summary << "\n";
            std::cout << "    " << e.notes << "\n";
        }
    });
    auto* ex_copy = ex->add_subcommand("copy", "write a bundled model file");
    static std::string ex_id, ex_dest;
    ex_copy->add_option("id", ex_id, "model id")->required();
    ex_copy->add_option("dest", ex_dest, "destination path")->required();
    ex_copy->callback([&] {
        const ExampleModel* e = find_example(ex_id);
        if (!e) throw std::runtime_error("unknown example id \"" + ex_id + "\"");
        save_model_file(e->model, ex_dest);
        std::cout << "wrote " << ex_dest << "\n";
    });

    if (argc <= 1) {
        std::cout << app.help();
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const spn::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
