// skewfact: constructs and certifies dihedral factorizations X = G D of
// finite simple groups, and re-checks the companion nonexistence facts.
//
// Exit codes: 0 all pass, 1 verification failure, 2 usage/input/fixture
// error, 3 inconclusive (randomized negative without required coverage).

#include "skewfact/action.hpp"
#include "skewfact/constructors.hpp"
#include "skewfact/errors.hpp"
#include "skewfact/factorization.hpp"
#include "skewfact/report.hpp"
#include "skewfact/scenarios.hpp"
#include "skewfact/subgroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace skewfact;
using nlohmann::ordered_json;

namespace {

int report_exit(const std::vector<ScenarioReport>& reps) {
    if (any_fail(reps)) return 1;
    if (!all_pass(reps)) return 3;
    return 0;
}

void print_reports(const std::vector<ScenarioReport>& reps, bool json) {
    if (json) {
        std::cout << reports_to_json(reps) << "\n";
        return;
    }
    for (const auto& r : reps) {
        std::cout << "[" << to_string(r.status) << "] " << r.scenario << "  ("
                  << to_string(r.evidence) << ", " << r.checks.size() << " checks, "
                  << r.elapsed_ms << " ms)\n";
        for (const auto& c : r.checks)
            if (!c.ok)
                std::cout << "    check " << c.name << ": expected " << c.expected
                          << ", got " << c.actual << "\n";
        for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    }
}

std::vector<std::string> ids_with_prefix(const ScenarioOptions& opt,
                                         const std::string& prefix) {
    std::vector<std::string> out;
    for (const auto& id : default_scenario_ids(opt))
        if (id.rfind(prefix, 0) == 0) out.push_back(id);
    return out;
}

GroupHandle padded_subgroup(const GroupHandle& x, const std::string& subspec) {
    GroupHandle h = make_group(subspec);
    if (h.degree() > x.degree())
        throw input_error("subgroup degree exceeds the parent degree");
    std::vector<Perm> gens;
    for (const auto& g : h.generators()) gens.push_back(pad(g, x.degree()));
    GroupHandle padded(std::move(gens), h.label());
    if (!is_subgroup(padded, x))
        throw input_error(subspec + " is not a subgroup of the parent group");
    return padded;
}

ordered_json action_json(const ActionReport& rep) {
    ordered_json doc;
    doc["degree"] = rep.degree;
    doc["orbit_sizes"] = rep.orbit_sizes;
    doc["transitive"] = rep.transitive;
    doc["regular"] = rep.regular;
    if (rep.two_transitive) doc["two_transitive"] = *rep.two_transitive;
    if (rep.primitive) doc["primitive"] = *rep.primitive;
    switch (rep.quasiprimitive.verdict) {
        case Verdict3::yes: doc["quasiprimitive"] = "yes"; break;
        case Verdict3::no: doc["quasiprimitive"] = "no"; break;
        case Verdict3::inconclusive: doc["quasiprimitive"] = "inconclusive"; break;
    }
    if (rep.quasiprimitive.witness) {
        doc["witness_order"] = rep.quasiprimitive.witness->order().to_string();
        doc["witness_orbits"] = rep.quasiprimitive.witness_orbit_sizes;
    }
    if (!rep.sample_block_sizes.empty()) doc["block_sizes"] = rep.sample_block_sizes;
    return doc;
}

void print_action_human(const ActionReport& rep) {
    std::cout << "degree " << rep.degree << ", orbits";
    for (uint32_t s : rep.orbit_sizes) std::cout << " " << s;
    std::cout << "\ntransitive: " << (rep.transitive ? "yes" : "no")
              << ", regular: " << (rep.regular ? "yes" : "no") << "\n";
    if (rep.two_transitive)
        std::cout << "2-transitive: " << (*rep.two_transitive ? "yes" : "no") << "\n";
    if (rep.primitive)
        std::cout << "primitive: " << (*rep.primitive ? "yes" : "no") << "\n";
    if (rep.transitive) {
        std::cout << "quasiprimitive: ";
        switch (rep.quasiprimitive.verdict) {
            case Verdict3::yes: std::cout << "yes"; break;
            case Verdict3::no: std::cout << "no"; break;
            case Verdict3::inconclusive: std::cout << "inconclusive"; break;
        }
        if (rep.quasiprimitive.witness) {
            std::cout << "  (witness normal subgroup of order "
                      << rep.quasiprimitive.witness->order().to_string() << ", orbits";
            for (uint32_t s : rep.quasiprimitive.witness_orbit_sizes) std::cout << " " << s;
            std::cout << ")";
        }
        std::cout << "\n";
    }
    if (!rep.sample_block_sizes.empty()) {
        std::cout << "block system with sizes";
        for (uint32_t s : rep.sample_block_sizes) std::cout << " " << s;
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation-group factorization verifier"};
    app.require_subcommand(1);
    app.fallthrough();

    uint64_t seed = 1729;
    bool json = false;
    Limits limits;
    app.add_option("--seed", seed, "random seed for the scenario streams");
    app.add_flag("--json", json, "machine-readable reports");
    app.add_option("--max-enum", limits.enum_limit, "element enumeration limit");
    app.add_option("--max-orbit", limits.orbit_limit, "conjugation orbit limit");
    app.add_option("--max-subgroup", limits.subgroup_limit, "small-subgroup limit");
    app.add_option("--max-index", limits.index_limit, "coset index limit");

    auto* verify = app.add_subcommand("verify", "run registered verification scenarios");
    verify->require_subcommand(1);

    int row = 0;
    uint32_t m_param = 0;
    bool extended = false;
    auto* table1 = verify->add_subcommand("table1", "the eight factorization families");
    table1->add_option("--row", row, "single row 1..8")->check(CLI::Range(1, 8));
    table1->add_option("--m", m_param, "parameter for the chosen parametric row");
    table1->add_flag("--extended", extended, "add larger parameter values");

    int item = 0;
    auto* lemma = verify->add_subcommand("lemma-magma",
                                         "exhaustive and normalizer-based nonexistence checks");
    lemma->add_option("--item", item, "single item 1..4")->check(CLI::Range(1, 4));

    std::string t2case;
    uint32_t t2m = 0;
    auto* theorem2 = verify->add_subcommand("theorem2", "dihedral-product cases");
    theorem2->add_option("--case", t2case, "one of 1.1, 1.2, 1.3, 2");
    theorem2->add_option("--m", t2m, "parameter for case 2 (m/2 even, >= 8)");

    auto* propskew = verify->add_subcommand("prop-skew", "cyclic-complement instances");

    std::string spec_text, action_sel = "natural";
    auto* analyze = app.add_subcommand("analyze", "orders, simplicity, action properties");
    analyze->add_option("spec", spec_text, "group spec")->required();
    analyze->add_option("--action", action_sel, "natural | cosets:<subspec>");

    std::string sd_spec;
    uint64_t sd_order = 0;
    bool sd_regular = false, sd_exhaustive = false;
    auto* search = app.add_subcommand("search-dihedral", "find a dihedral subgroup");
    search->add_option("spec", sd_spec, "group spec")->required();
    search->add_option("--order", sd_order, "dihedral group order (even, >= 4)")->required();
    search->add_flag("--regular", sd_regular, "search for a point-regular subgroup");
    search->add_flag("--exhaustive", sd_exhaustive, "enumerate instead of sampling");

    std::string core_spec, core_sub;
    auto* core_cmd = app.add_subcommand("core", "largest normal subgroup inside a subgroup");
    core_cmd->add_option("spec", core_spec, "parent group spec")->required();
    core_cmd->add_option("--sub", core_sub, "subgroup spec")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        ScenarioOptions opt;
        opt.seed = seed;
        opt.limits = limits;
        opt.extended = extended;

        if (table1->parsed()) {
            if (m_param) {
                if (row == 4) {
                    if (m_param < 2) throw input_error("row 4 requires m >= 2");
                    opt.row4_m = m_param;
                } else if (row == 6) {
                    if (m_param < 6 || m_param % 2)
                        throw input_error("row 6 requires even m >= 6");
                    opt.row6_m = m_param;
                } else if (row == 8) {
                    if (m_param < 2) throw input_error("row 8 requires m >= 2");
                    opt.row8_m = m_param;
                } else {
                    throw input_error("--m applies to rows 4, 6 and 8");
                }
            }
            std::string prefix = row ? "table1.row" + std::to_string(row) : "table1.";
            auto ids = ids_with_prefix(opt, prefix);
            if (ids.empty()) throw input_error("no scenarios selected");
            auto reps = run_scenarios(ids, opt);
            print_reports(reps, json);
            return report_exit(reps);
        }
        if (lemma->parsed()) {
            std::string prefix =
                item ? "lemma24.item" + std::to_string(item) : "lemma24.";
            auto reps = run_scenarios(ids_with_prefix(opt, prefix), opt);
            print_reports(reps, json);
            return report_exit(reps);
        }
        if (theorem2->parsed()) {
            if (t2m) {
                if (t2m % 2 || (t2m / 2) % 2 || t2m / 2 < 4)
                    throw input_error("case 2 requires m with m/2 even and m/2 >= 4 "
                                      "(m/2 = 3 would make the reflection odd)");
                opt.theorem2_m = t2m;
            }
            std::string prefix = "theorem2.";
            if (t2case == "1.1") prefix = "theorem2.case11";
            else if (t2case == "1.2") prefix = "theorem2.case12";
            else if (t2case == "1.3") prefix = "theorem2.case13";
            else if (t2case == "2") prefix = "theorem2.case2.";
            else if (!t2case.empty()) throw input_error("unknown case '" + t2case + "'");
            auto ids = ids_with_prefix(opt, prefix);
            if (ids.empty()) throw input_error("no scenarios selected");
            auto reps = run_scenarios(ids, opt);
            print_reports(reps, json);
            return report_exit(reps);
        }
        if (propskew->parsed()) {
            auto reps = run_scenarios(ids_with_prefix(opt, "prop-skew."), opt);
            print_reports(reps, json);
            return report_exit(reps);
        }

        if (analyze->parsed()) {
            GroupHandle g = make_group(spec_text);
            RandomSource rng(seed);
            GroupHandle subject = g;
            std::optional<uint64_t> coset_degree;
            if (action_sel.rfind("cosets:", 0) == 0) {
                GroupHandle h = padded_subgroup(g, action_sel.substr(7));
                auto act = coset_action(g, h, limits);
                subject = act.image;
                coset_degree = act.degree;
            } else if (action_sel != "natural") {
                throw input_error("--action must be natural or cosets:<subspec>");
            }
            auto rep = analyze_action(subject, rng, limits);
            auto simple = is_simple(g, rng, limits, 64, 500000);
            if (json) {
                ordered_json doc;
                doc["spec"] = spec_text;
                doc["label"] = g.label();
                doc["degree"] = g.degree();
                doc["order"] = g.order().to_string();
                doc["simple"] = simple.verdict == Verdict3::yes
                                    ? "yes"
                                    : (simple.verdict == Verdict3::no ? "no" : "inconclusive");
                if (coset_degree) doc["coset_degree"] = *coset_degree;
                doc["action"] = action_json(rep);
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << g.label() << ": order " << g.order().to_string() << ", simple: "
                          << (simple.verdict == Verdict3::yes
                                  ? "yes"
                                  : (simple.verdict == Verdict3::no ? "no" : "inconclusive"))
                          << "\n";
                if (simple.witness)
                    std::cout << "  normal witness of order "
                              << simple.witness->order().to_string() << "\n";
                if (coset_degree) std::cout << "coset action of degree " << *coset_degree << "\n";
                print_action_human(rep);
            }
            return 0;
        }

        if (search->parsed()) {
            GroupHandle g = make_group(sd_spec);
            RandomSource rng(seed);
            DihedralSearch result;
            if (sd_regular) {
                if (sd_order != g.degree())
                    throw input_error("a point-regular dihedral subgroup has order equal "
                                      "to the degree (" + std::to_string(g.degree()) + ")");
                result = find_regular_dihedral(g, rng, 4000, limits);
            } else {
                result = find_dihedral(g, sd_order,
                                       sd_exhaustive ? SearchMode::exhaustive
                                                     : SearchMode::randomized,
                                       rng, limits);
            }
            if (json) {
                ordered_json doc;
                doc["spec"] = sd_spec;
                doc["order"] = sd_order;
                doc["found"] = result.witness.has_value();
                doc["evidence"] = result.evidence.deterministic ? "deterministic" : "randomized";
                doc["method"] = result.evidence.method;
                if (result.evidence.elements_enumerated)
                    doc["elements_enumerated"] = result.evidence.elements_enumerated;
                if (result.witness) {
                    doc["rotation"] = to_cycle_string(result.witness->rotation);
                    doc["reflection"] = to_cycle_string(result.witness->reflection);
                    doc["degenerate_klein"] = result.witness->degenerate_klein;
                }
                if (!result.evidence.note.empty()) doc["note"] = result.evidence.note;
                std::cout << doc.dump(2) << "\n";
            } else if (result.witness) {
                std::cout << "found D" << 2 * result.witness->n << ":\n  rotation   "
                          << to_cycle_string(result.witness->rotation) << "\n  reflection "
                          << to_cycle_string(result.witness->reflection) << "\n  ("
                          << result.evidence.method << ")\n";
            } else {
                std::cout << "none ("
                          << (result.evidence.deterministic ? "deterministic" : "randomized")
                          << ", " << result.evidence.method;
                if (!result.evidence.note.empty()) std::cout << ": " << result.evidence.note;
                std::cout << ")\n";
            }
            if (!result.witness && !result.evidence.deterministic) return 3;
            return 0;
        }

        if (core_cmd->parsed()) {
            GroupHandle x = make_group(core_spec);
            GroupHandle h = padded_subgroup(x, core_sub);
            auto res = core_small(x, h, limits);
            std::vector<Perm> gens;
            if (!res.core.is_trivial())
                gens = shrink_generating_set(res.core.generators(), res.core.order(),
                                             res.core.degree());
            if (json) {
                ordered_json doc;
                doc["parent"] = core_spec;
                doc["sub"] = core_sub;
                doc["core_order"] = res.core.order().to_string();
                ordered_json out = ordered_json::array();
                for (const auto& g : gens) out.push_back(to_cycle_string(g));
                doc["core_generators"] = out;
                doc["iterations"] = res.iterations;
                doc["method"] = res.method == CoreMethod::iterated_intersection
                                    ? "iterated-intersection"
                                    : "brute-force";
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "core order " << res.core.order().to_string() << " ("
                          << res.iterations << " passes)\n";
                for (const auto& g : gens) std::cout << "  " << to_cycle_string(g) << "\n";
            }
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fixture_error& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return 2;
    } catch (const over_threshold& e) {
        std::cerr << "limit error: " << e.what() << "\n";
        return 2;
    } catch (const index_too_large& e) {
        std::cerr << "limit error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
