// Command line front end: every verification the library offers, one
// subcommand each. Exit codes: 0 verified/success, 1 check failed or target
// missed, 2 usage or input errors.
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kn/canonical.hpp"
#include "kn/core.hpp"
#include "kn/cross_index.hpp"
#include "kn/freeness.hpp"
#include "kn/io.hpp"
#include "kn/kernel.hpp"
#include "kn/optimizer.hpp"
#include "kn/render.hpp"
#include "kn/rerouted.hpp"

namespace {

using nlohmann::ordered_json;

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json envelope() { return ordered_json{{"schema", 1}}; }

ordered_json pair_json(kn::vpair e) { return ordered_json::array({e.first, e.second}); }

ordered_json report_json(const kn::crossing_report& r) {
    ordered_json out;
    out["total"] = r.total;
    ordered_json per_edge = ordered_json::array();
    for (const auto& [e, c] : r.per_edge)
        per_edge.push_back({{"edge", pair_json(e)}, {"count", c}});
    out["per_edge"] = std::move(per_edge);
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : r.pairs) pairs.push_back({pair_json(a), pair_json(b)});
    out["pairs"] = std::move(pairs);
    if (!r.half_arcs.empty()) {
        ordered_json arcs = ordered_json::array();
        for (const auto& h : r.half_arcs) {
            ordered_json north = ordered_json::array(), south = ordered_json::array();
            for (auto e : h.north_crossers) north.push_back(pair_json(e));
            for (auto e : h.south_crossers) south.push_back(pair_json(e));
            arcs.push_back({{"chord", pair_json({h.parent.i, h.parent.j})},
                            {"north_crossers", std::move(north)},
                            {"south_crossers", std::move(south)}});
        }
        out["half_arcs"] = std::move(arcs);
    }
    return out;
}

ordered_json block_report_json(const kn::block_report& r) {
    ordered_json out;
    out["n"] = r.n;
    out["residue"] = r.residue;
    out["north_partition_ok"] = r.north_partition_ok;
    out["south_partition_ok"] = r.south_partition_ok;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"enumerated", c.enumerated},
                          {"closed_form", c.closed_form},
                          {"integral", c.integral},
                          {"matches", c.matches}});
    out["checks"] = std::move(checks);
    out["grand_total"] = r.grand_total;
    out["z"] = r.z;
    out["total_ok"] = r.total_ok;
    out["all_ok"] = r.all_ok();
    return out;
}

std::string cycle_text(const std::vector<int>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(cycle[i]);
    }
    return s;
}

std::string mode_name(kn::search_mode m) {
    switch (m) {
        case kn::search_mode::exhaustive: return "exhaustive";
        case kn::search_mode::stochastic: return "anneal";
        case kn::search_mode::reroute: return "reroute";
    }
    return "?";
}

// Shared input selector: exactly one of a canonical n, a rerouted diagram n,
// or a file path.
struct diagram_source {
    int canonical_n = 0;
    int dprime_n = 0;
    std::string file;

    void attach(CLI::App* cmd, bool with_dprime) {
        auto* a = cmd->add_option("--canonical", canonical_n, "Canonical matrix for this n");
        CLI::Option* b = nullptr;
        if (with_dprime)
            b = cmd->add_option("--dprime", dprime_n, "Rerouted construction for this odd n");
        auto* c = cmd->add_option("--matrix,--diagram", file, "Matrix or diagram file");
        a->excludes(c);
        c->excludes(a);
        if (b) {
            a->excludes(b);
            b->excludes(a);
            b->excludes(c);
            c->excludes(b);
        }
    }

    kn::diagram_variant load() const {
        if (canonical_n) return kn::canonical_matrix(canonical_n);
        if (dprime_n) return kn::build_dprime(dprime_n);
        if (!file.empty()) return kn::load_diagram(file);
        throw CLI::ValidationError("pick an input: --canonical, --dprime, or a file");
    }
};

void write_or_print(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        kn::write_text_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-page drawings of complete graphs: canonical matrices, cross-index "
                 "verification, rerouted diagrams, freeness checks, and search"};
    app.require_subcommand(1);
    int rc = 0;

    // zvalue
    {
        auto* cmd = app.add_subcommand("zvalue", "Quadruple floor bound Z(n)");
        auto n = std::make_shared<int>(0);
        auto json = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "Number of vertices")->required()->check(CLI::Range(3, 1'000'000));
        cmd->add_flag("--json", *json, "Machine readable output");
        cmd->callback([n, json] {
            auto z = kn::z_value(*n);
            if (*json) {
                auto out = envelope();
                out["n"] = *n;
                out["z"] = z;
                emit_json(out);
            } else {
                std::cout << z << "\n";
            }
        });
    }

    // canonical
    {
        auto* cmd = app.add_subcommand("canonical", "Emit the canonical matrix M_n");
        auto n = std::make_shared<int>(0);
        auto out_path = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("text");
        auto json = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "Number of vertices")->required()->check(CLI::Range(4, 100'000));
        cmd->add_option("--out", *out_path, "Write to this file instead of stdout");
        cmd->add_option("--format", *format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--json", *json, "Machine readable output");
        cmd->callback([n, out_path, format, json] {
            auto m = kn::canonical_matrix(*n);
            if (*json) {
                auto out = envelope();
                out["n"] = *n;
                out["matrix"] = kn::matrix_to_json(m);
                emit_json(out);
                return;
            }
            write_or_print(*out_path, *format == "json" ? kn::matrix_to_json(m).dump(2) + "\n"
                                                        : kn::matrix_to_text(m));
        });
    }

    // cross-index
    {
        auto* cmd = app.add_subcommand("cross-index", "Crossing counts of a drawing");
        auto src = std::make_shared<diagram_source>();
        src->attach(cmd, /*with_dprime=*/true);
        auto report_fmt = std::make_shared<std::string>("text");
        auto per_edge = std::make_shared<bool>(false);
        auto json = std::make_shared<bool>(false);
        cmd->add_option("--report", *report_fmt, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--per-edge", *per_edge, "List every edge's crossing count");
        cmd->add_flag("--json", *json, "Machine readable output");
        cmd->callback([src, report_fmt, per_edge, json] {
            auto input = src->load();
            kn::crossing_report report;
            int n = 0;
            if (std::holds_alternative<kn::page_matrix>(input)) {
                const auto& m = std::get<kn::page_matrix>(input);
                n = m.n;
                report = kn::make_crossing_report(m);
            } else {
                const auto& d = std::get<kn::extended_diagram>(input);
                n = d.n();
                report = kn::extended_crossing_report(d);
            }
            if (*json || *report_fmt == "json") {
                auto out = envelope();
                out["n"] = n;
                out.update(report_json(report));
                emit_json(out);
                return;
            }
            std::cout << "total: " << report.total << "\n";
            if (*per_edge)
                for (const auto& [e, c] : report.per_edge)
                    std::cout << "(" << e.first << "," << e.second << "): " << c << "\n";
        });
    }

    // verify-blocks
    {
        auto* cmd = app.add_subcommand("verify-blocks",
                                       "Check the block decomposition against its closed forms");
        auto n = std::make_shared<int>(0);
        auto sweep = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "Single n to verify")->check(CLI::Range(8, 100'000));
        cmd->add_option("--sweep", *sweep, "Range lo..hi of n to verify");
        cmd->add_flag("--json", *json, "Machine readable output");
        cmd->callback([&rc, n, sweep, json] {
            std::vector<int> targets;
            if (*n) targets.push_back(*n);
            if (!sweep->empty()) {
                auto dots = sweep->find("..");
                if (dots == std::string::npos)
                    throw CLI::ValidationError("--sweep wants lo..hi, got " + *sweep);
                int lo = std::stoi(sweep->substr(0, dots));
                int hi = std::stoi(sweep->substr(dots + 2));
                if (lo < 8 || hi < lo)
                    throw CLI::ValidationError("--sweep wants 8 <= lo <= hi, got " + *sweep);
                for (int k = lo; k <= hi; ++k) targets.push_back(k);
            }
            if (targets.empty()) throw CLI::ValidationError("pass --n or --sweep");
            ordered_json results = ordered_json::array();
            bool all = true;
            for (int k : targets) {
                auto report = kn::verify_blocks(k);
                all = all && report.all_ok();
                if (*json) {
                    results.push_back(block_report_json(report));
                    continue;
                }
                std::cout << "n=" << k << " residue " << report.residue << ": ";
                if (report.all_ok()) {
                    std::cout << report.checks.size() << " blocks match, total "
                              << report.grand_total << " = Z(" << k << ")\n";
                } else {
                    std::cout << "FAILED\n";
                    if (!report.north_partition_ok) std::cout << "  North partition broken\n";
                    if (!report.south_partition_ok) std::cout << "  South partition broken\n";
                    for (const auto& c : report.checks)
                        if (!c.matches)
                            std::cout << "  block " << c.name << ": enumerated " << c.enumerated
                                      << ", closed form " << c.closed_form << "\n";
                    if (!report.total_ok)
                        std::cout << "  grand total " << report.grand_total << " != Z(" << k
                                  << ") = " << report.z << "\n";
                }
            }
            if (*json) {
                auto out = envelope();
                out["results"] = std::move(results);
                out["all_ok"] = all;
                emit_json(out);
            }
            if (!all) rc = 1;
        });
    }

    // dprime
    {
        auto* cmd = app.add_subcommand("dprime", "Build the rerouted construction for odd n");
        auto n = std::make_shared<int>(0);
        auto check = std::make_shared<bool>(false);
        auto out_path = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "Odd number of vertices")->required()->check(CLI::Range(5, 10'000));
        cmd->add_flag("--check", *check, "Verify optimality, tree freeness, cycle freeness");
        cmd->add_option("--out", *out_path, "Write the diagram JSON here");
        cmd->add_flag("--json", *json, "Machine readable output");
        cmd->callback([&rc, n, check, out_path, json] {
            auto d = kn::build_dprime(*n);
            if (!*check) {
                auto text = kn::diagram_to_json(d).dump(2) + "\n";
                if (*json) {
                    auto out = envelope();
                    out["n"] = *n;
                    out["diagram"] = kn::diagram_to_json(d);
                    emit_json(out);
                    if (!out_path->empty()) kn::write_text_file(*out_path, text);
                    return;
                }
                write_or_print(*out_path, text);
                return;
            }
            auto report = kn::extended_crossing_report(d);
            bool optimal = report.total == kn::z_value(*n);
            std::vector<kn::vpair> tree;
            for (int v = 2; v < *n; ++v) tree.push_back({v, v + 1});
            tree.push_back({1, *n});
            bool tree_free = kn::tree_is_crossing_free(d, tree);
            auto cycle = kn::find_free_hamiltonian_cycle(d);
            bool no_cycle = cycle.status == kn::cycle_search_status::absent;
            bool ok = optimal && tree_free && no_cycle;
            if (*json) {
                auto out = envelope();
                out["n"] = *n;
                out["total"] = report.total;
                out["z"] = kn::z_value(*n);
                out["optimal"] = optimal;
                out["tree_free"] = tree_free;
                out["no_free_cycle"] = no_cycle;
                if (cycle.status == kn::cycle_search_status::found)
                    out["free_cycle"] = cycle.cycle;
                out["ok"] = ok;
                emit_json(out);
            } else {
                std::cout << "total " << report.total << (optimal ? " = " : " != ") << "Z(" << *n
                          << ") = " << kn::z_value(*n) << "\n";
                std::cout << "linear tree crossing-free: " << (tree_free ? "yes" : "no") << "\n";
                if (cycle.status == kn::cycle_search_status::found)
                    std::cout << "free hamiltonian cycle: " << cycle_text(cycle.cycle) << "\n";
                else if (cycle.status == kn::cycle_search_status::absent)
                    std::cout << "free hamiltonian cycle: none\n";
                else
                    std::cout << "free hamiltonian cycle: search budget exhausted\n";
            }
            if (!out_path->empty()) kn::write_text_file(*out_path, kn::diagram_to_json(d).dump(2) + "\n");
            if (!ok) rc = 1;
        });
    }

    // free-cycles
    {
        auto* cmd = app.add_subcommand("free-cycles",
                                       "Hamiltonian cycle through crossing-free edges, if any");
        auto src = std::make_shared<diagram_source>();
        src->attach(cmd, /*with_dprime=*/true);
        auto json = std::make_shared<bool>(false);
        cmd->add_flag("--json", *json, "Machine readable output");
        cmd->callback([&rc, src, json] {
            auto input = src->load();
            kn::cycle_search_result result;
            int n = 0;
            if (std::holds_alternative<kn::page_matrix>(input)) {
                const auto& m = std::get<kn::page_matrix>(input);
                n = m.n;
                result = kn::find_free_hamiltonian_cycle(m);
            } else {
                const auto& d = std::get<kn::extended_diagram>(input);
                n = d.n();
                result = kn::find_free_hamiltonian_cycle(d);
            }
            const char* status = result.status == kn::cycle_search_status::found   ? "found"
                                 : result.status == kn::cycle_search_status::absent ? "absent"
                                                                                    : "budget_exhausted";
            if (*json) {
                auto out = envelope();
                out["n"] = n;
                out["status"] = status;
                out["cycle"] = result.cycle;
                out["nodes_visited"] = result.nodes_visited;
                emit_json(out);
            } else if (result.status == kn::cycle_search_status::found) {
                std::cout << cycle_text(result.cycle) << "\n";
            } else {
                std::cout << "NONE\n";
            }
            if (result.status == kn::cycle_search_status::budget_exhausted) rc = 1;
        });
    }

    // verify-theorem1
    {
        auto* cmd = app.add_subcommand(
            "verify-theorem1", "Optimal rerouted diagram without a free hamiltonian cycle");
        auto n = std::make_shared<int>(0);
        auto json = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "Odd n of at least 9")->required();
        cmd->add_flag("--json", *json, "Machine readable output");
        cmd->callback([&rc, n, json] {
            auto check = kn::verify_theorem_1(*n);
            if (*json) {
                auto out = envelope();
                out["n"] = check.n;
                out["total"] = check.total;
                out["z"] = check.z;
                out["optimal"] = check.optimal;
                out["tree_free"] = check.tree_free;
                out["no_free_cycle"] = check.no_free_cycle;
                out["ok"] = check.ok();
                emit_json(out);
            } else {
                std::cout << "n=" << check.n << ": total " << check.total << " vs Z=" << check.z
                          << (check.optimal ? " ok" : " MISMATCH") << ", tree "
                          << (check.tree_free ? "free" : "BLOCKED") << ", free cycle "
                          << (check.no_free_cycle ? "none" : "PRESENT") << "\n";
            }
            if (!check.ok()) rc = 1;
        });
    }

    // search
    {
        auto* cmd = app.add_subcommand("search", "Minimize crossings over page assignments");
        auto n = std::make_shared<int>(0);
        auto mode = std::make_shared<std::string>();
        auto seed = std::make_shared<std::uint64_t>(1);
        auto steps = std::make_shared<int>(50'000);
        auto restarts = std::make_shared<int>(20);
        auto cap = std::make_shared<int>(8);
        auto json = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "Number of vertices")->required()->check(CLI::Range(4, 100'000));
        cmd->add_option("--mode", *mode, "exhaustive or anneal")
            ->required()
            ->check(CLI::IsMember({"exhaustive", "anneal"}));
        cmd->add_option("--seed", *seed, "Master seed for anneal");
        cmd->add_option("--steps", *steps, "Anneal steps per restart")->check(CLI::PositiveNumber);
        cmd->add_option("--restarts", *restarts, "Anneal restarts")->check(CLI::PositiveNumber);
        cmd->add_option("--cap", *cap, "Exhaustive size cap");
        cmd->add_flag("--json", *json, "Machine readable output");
        cmd->callback([&rc, n, mode, seed, steps, restarts, cap, json] {
            kn::search_result result;
            if (*mode == "exhaustive") {
                result = kn::exhaustive_min(*n, *cap);
            } else {
                kn::anneal_params params;
                params.steps = *steps;
                params.restarts = *restarts;
                result = kn::stochastic_min(*n, *seed, params);
            }
            auto z = kn::z_value(*n);
            bool achieved = result.best_value == z && !result.inconsistent;
            if (*json) {
                auto out = envelope();
                out["n"] = *n;
                out["mode"] = mode_name(result.mode);
                out["best_value"] = result.best_value;
                out["z"] = z;
                out["achieved"] = achieved;
                if (result.mode == kn::search_mode::stochastic) {
                    out["seed"] = result.stats.seed;
                    out["inconsistent"] = result.inconsistent;
                }
                out["assignments_examined"] = result.stats.assignments_examined;
                out["witness"] = kn::matrix_to_json(result.witness);
                emit_json(out);
            } else {
                std::cout << result.best_value << "\n";
                std::cerr << "examined " << result.stats.assignments_examined << " assignments in "
                          << result.stats.wall_ms << " ms (kernel " << kn::kernel::selected_kernel_name()
                          << ")\n";
                if (result.inconsistent)
                    std::cerr << "INCONSISTENT: best value below the floor bound\n";
            }
            if (!achieved) rc = 1;
        });
    }

    // witness7
    {
        auto* cmd = app.add_subcommand(
            "witness7", "Optimal n=7 single-reroute diagram with no free hamiltonian cycle");
        auto json = std::make_shared<bool>(false);
        cmd->add_flag("--json", *json, "Machine readable output");
        cmd->callback([&rc, json] {
            auto found = kn::reroute_witness_search(7);
            if (*json) {
                auto out = envelope();
                out["n"] = 7;
                out["found"] = found.has_value();
                if (found) {
                    out["best_value"] = found->best_value;
                    out["diagram"] = kn::diagram_to_json(*found->rerouted);
                    ordered_json tree = ordered_json::array();
                    for (auto e : found->tree) tree.push_back(pair_json(e));
                    out["tree"] = std::move(tree);
                }
                emit_json(out);
            } else if (found) {
                const auto& r = found->rerouted->reroutes.front();
                std::cout << "total " << found->best_value << ", reroute (" << r.edge.i << ","
                          << r.edge.j << ") through gap (" << r.gap.first << "," << r.gap.second
                          << ") with vertex " << r.north_endpoint << " North\n";
                std::cout << "base matrix:\n" << kn::matrix_to_text(found->witness);
                std::cout << "crossing-free spanning path edges:";
                for (auto e : found->tree)
                    std::cout << " (" << e.first << "," << e.second << ")";
                std::cout << "\n";
                std::cerr << "searched " << found->stats.assignments_examined << " assignments in "
                          << found->stats.wall_ms << " ms\n";
            } else {
                std::cout << "single-reroute space exhausted, no witness\n";
            }
            if (!found) rc = 1;
        });
    }

    // render
    {
        auto* cmd = app.add_subcommand("render", "SVG picture of a drawing");
        auto src = std::make_shared<diagram_source>();
        src->attach(cmd, /*with_dprime=*/true);
        auto layout = std::make_shared<std::string>("circle");
        auto size = std::make_shared<int>(800);
        auto no_labels = std::make_shared<bool>(false);
        auto out_path = std::make_shared<std::string>();
        cmd->add_option("--layout", *layout, "circle or linear")
            ->check(CLI::IsMember({"circle", "linear"}));
        cmd->add_option("--size", *size, "Canvas edge in pixels")->check(CLI::PositiveNumber);
        cmd->add_flag("--no-labels", *no_labels, "Skip vertex labels");
        cmd->add_option("--out", *out_path, "Write the SVG here instead of stdout");
        cmd->callback([src, layout, size, no_labels, out_path] {
            kn::render_spec spec;
            spec.layout = *layout == "circle" ? kn::layout_kind::circle : kn::layout_kind::linear;
            spec.size = *size;
            spec.labels = !*no_labels;
            auto input = src->load();
            std::string svg = std::holds_alternative<kn::page_matrix>(input)
                                  ? kn::render_svg(std::get<kn::page_matrix>(input), spec)
                                  : kn::render_svg(std::get<kn::extended_diagram>(input), spec);
            write_or_print(*out_path, svg);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
