// elp: world views of ground epistemic logic programs.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elp/conformant.hpp"
#include "elp/eht.hpp"
#include "elp/errors.hpp"
#include "elp/foundedness.hpp"
#include "elp/properties.hpp"
#include "elp/semantics.hpp"
#include "elp/splitting.hpp"

#ifndef ELP_FIXTURE_DIR
#define ELP_FIXTURE_DIR "fixtures"
#endif

namespace {

using nlohmann::json;

struct Common {
    std::string semantics = "g91";
    bool eliminate_m = false;
    std::optional<std::size_t> max_atoms;
    bool json_out = false;

    void attach(CLI::App* app) {
        app->add_option("--semantics", semantics, "g91, g11, k15, s17, f15 or c19")->capture_default_str();
        app->add_flag("--eliminate-m", eliminate_m, "rewrite M l as not K not l for K-only semantics");
        app->add_option("--max-atoms", max_atoms, "cap on atoms for the stable-model search (default 20, env ELP_MAX_ATOMS)");
        app->add_flag("--json", json_out, "machine-readable output");
    }

    elp::Semantics parsed() const {
        auto s = elp::parse_semantics(semantics);
        if (!s) {
            throw CLI::ValidationError("--semantics", "unknown semantics " + semantics);
        }
        return *s;
    }

    elp::SolveOptions options() const {
        elp::SolveOptions o;
        o.eliminate_m = eliminate_m;
        if (max_atoms) {
            o.limits.max_atoms = *max_atoms;
        }
        return o;
    }
};

std::string pair_text(const elp::UnfoundedPair& p, const elp::AtomTable& t) {
    return "<" + t.format(p.x) + ", " + t.format(p.i) + ">";
}

json pair_json(const elp::UnfoundedPair& p, const elp::AtomTable& t) {
    return {{"x", t.names(p.x)}, {"i", t.names(p.i)}};
}

int cmd_solve(const std::string& file, const Common& c, bool explain_unfounded, bool trace_eht) {
    const auto sem = c.parsed();
    const auto opts = c.options();
    const auto p = elp::load_program_file(file);
    const auto& t = p.table();
    const auto views = elp::world_views(p, sem, opts);

    json j;
    j["semantics"] = elp::name(sem);
    j["world_views"] = elp::to_json(views, t);

    if (!c.json_out) {
        if (views.empty()) {
            std::cout << "no world view\n";
        }
        for (const auto& wv : views) {
            std::cout << elp::format(wv, t) << "\n";
        }
    }

    if (explain_unfounded) {
        // Under C19 the interesting views are the G91 ones it rejects.
        const auto candidates =
            sem == elp::Semantics::C19 ? elp::world_views(p, elp::Semantics::G91, opts) : views;
        j["unfounded"] = json::array();
        for (const auto& wv : candidates) {
            const auto u = elp::greatest_unfounded_set(p, wv, opts.limits);
            json entry{{"world_view", elp::to_json(wv, t)}, {"founded", u.empty()}, {"pairs", json::array()}};
            for (const auto& pr : u.pairs) {
                entry["pairs"].push_back(pair_json(pr, t));
            }
            j["unfounded"].push_back(entry);
            if (!c.json_out) {
                std::cout << "unfounded set of " << elp::format(wv, t) << ":";
                if (u.empty()) {
                    std::cout << " none (founded)";
                }
                for (const auto& pr : u.pairs) {
                    std::cout << " " << pair_text(pr, t);
                }
                std::cout << "\n";
            }
        }
    }

    if (trace_eht) {
        const auto eq = elp::equilibrium_eht_models(p, opts.limits);
        const auto refuted = elp::refuted_s5_models(p, opts.limits);
        j["equilibrium_models"] = elp::to_json(eq, t);
        j["refuted"] = json::array();
        for (const auto& r : refuted) {
            json h = json::array();
            for (std::size_t k = 0; k < r.wv.size(); ++k) {
                h.push_back({{"there", t.names(r.wv.members()[k])}, {"here", t.names(r.countermodel[k])}});
            }
            j["refuted"].push_back({{"world_view", elp::to_json(r.wv, t)}, {"countermodel", h}});
        }
        if (!c.json_out) {
            std::cout << "equilibrium models: " << elp::format(eq, t) << "\n";
            for (const auto& r : refuted) {
                std::cout << "not in equilibrium: " << elp::format(r.wv, t) << " refuted by here-map";
                for (std::size_t k = 0; k < r.wv.size(); ++k) {
                    std::cout << " " << t.format(r.wv.members()[k]) << "->" << t.format(r.countermodel[k]);
                }
                std::cout << "\n";
            }
        }
    }

    if (c.json_out) {
        std::cout << j.dump(2) << "\n";
    }
    return views.empty() ? 1 : 0;
}

json split_json(const elp::Program& p, elp::AtomSet u, elp::Semantics sem, const elp::SolveOptions& opts,
                bool& agrees, bool text) {
    const auto& t = p.table();
    const auto split = elp::epistemic_split(p, u);
    const auto direct = elp::world_views(p, sem, opts);
    json j;
    j["U"] = t.names(u);
    j["bottom"] = split.bottom.to_string();
    j["top"] = split.top.to_string();
    j["solutions"] = json::array();
    if (text) {
        std::cout << "U = " << t.format(u) << "\nbottom:\n" << split.bottom.to_string() << "top:\n"
                  << split.top.to_string();
    }
    elp::WorldViewSet combined;
    for (const auto& wv_b : elp::world_views(split.bottom, sem, opts)) {
        const auto e = elp::top_simplification(split, wv_b);
        const auto tops = elp::world_views(e, sem, opts);
        json sol{{"wv_b", elp::to_json(wv_b, t)}, {"simplified_top", e.to_string()}, {"wv_t", elp::to_json(tops, t)}};
        if (text) {
            std::cout << "bottom world view " << elp::format(wv_b, t) << "\n  simplified top:\n";
            std::istringstream lines(e.to_string());
            for (std::string line; std::getline(lines, line);) {
                std::cout << "    " << line << "\n";
            }
            std::cout << "  top world views: " << elp::format(tops, t) << "\n";
        }
        for (const auto& wv_t : tops) {
            combined.insert(elp::combine(wv_b, wv_t));
        }
        j["solutions"].push_back(sol);
    }
    agrees = combined == direct;
    j["combined"] = elp::to_json(combined, t);
    j["direct"] = elp::to_json(direct, t);
    j["agrees"] = agrees;
    if (text) {
        std::cout << "combined: " << elp::format(combined, t) << "\ndirect:   " << elp::format(direct, t) << "\n"
                  << (agrees ? "agree\n" : "MISMATCH: composition differs from direct solving\n");
    }
    return j;
}

int cmd_split(const std::string& file, const Common& c, const std::string& split_spec, bool enumerate) {
    const auto sem = c.parsed();
    const auto opts = c.options();
    const auto p = elp::load_program_file(file);
    const auto& t = p.table();

    std::vector<elp::AtomSet> sets;
    if (!split_spec.empty()) {
        std::string list = split_spec;
        if (list.rfind("U=", 0) == 0) {
            list = list.substr(2);
        }
        sets.push_back(t.parse_set(list));
    }
    if (enumerate) {
        for (auto u : elp::enumerate_epistemic_splitting_sets(p)) {
            if (std::find(sets.begin(), sets.end(), u) == sets.end()) {
                sets.push_back(u);
            }
        }
    }
    if (!enumerate && sets.empty()) {
        throw CLI::ValidationError("split", "give --split U=a,b,... or --enumerate-splits");
    }
    if (sets.empty()) {
        if (c.json_out) {
            std::cout << json::array().dump(2) << "\n";
        } else {
            std::cout << "no proper epistemic splitting set\n";
        }
        return 0;
    }

    json out = json::array();
    bool all_agree = true;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!c.json_out && i > 0) {
            std::cout << "\n";
        }
        bool agrees = true;
        out.push_back(split_json(p, sets[i], sem, opts, agrees, !c.json_out));
        all_agree = all_agree && agrees;
    }
    if (c.json_out) {
        std::cout << json{{"semantics", elp::name(sem)}, {"splits", out}}.dump(2) << "\n";
    }
    return all_agree ? 0 : 1;
}

std::vector<elp::Semantics> semantics_list(const std::string& text) {
    std::vector<elp::Semantics> out;
    if (text.empty() || text == "all") {
        return {elp::kAllSemantics.begin(), elp::kAllSemantics.end()};
    }
    for (const auto& part : elp::split_top_level(text)) {
        auto s = elp::parse_semantics(part);
        if (!s) {
            throw CLI::ValidationError("--semantics", "unknown semantics " + part);
        }
        out.push_back(*s);
    }
    return out;
}

int cmd_properties(const std::string& dir, const Common& c, const std::string& sems, std::uint64_t seed,
                   std::size_t count) {
    elp::MatrixOptions mo;
    mo.semantics = semantics_list(sems);
    mo.seed = seed;
    mo.count = count;
    mo.solve = c.options();
    const auto corpus = elp::load_corpus(dir);
    const auto m = elp::run_property_matrix(corpus, mo);
    if (c.json_out) {
        std::cout << elp::to_json(m).dump(2) << "\n";
    } else {
        std::cout << elp::render_text(m);
    }
    return m.fixture_failures.empty() && m.matches_expected() ? 0 : 1;
}

int cmd_conformant(const std::string& file, const Common& c, const std::string& goal, const std::string& actions_text,
                   bool generate) {
    const auto sem = c.parsed();
    const auto opts = c.options();
    const auto domain = elp::load_program_file(file);
    const auto actions = elp::split_top_level(actions_text);
    if (!elp::splitting_safe(sem)) {
        std::cerr << "warning: " << elp::name(sem)
                  << " does not satisfy epistemic splitting; plan verdicts may depend on the encoding\n";
    }
    if (generate) {
        const auto p = elp::generate_define_test(domain, goal, actions);
        const auto views = elp::world_views(p, sem, opts);
        if (c.json_out) {
            std::cout << json{{"semantics", elp::name(sem)},
                              {"program", p.to_string()},
                              {"world_views", elp::to_json(views, p.table())}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << p.to_string() << "world views:\n";
            if (views.empty()) {
                std::cout << "  none\n";
            }
            for (const auto& wv : views) {
                std::cout << "  " << elp::format(wv, p.table()) << "\n";
            }
        }
        return views.empty() ? 1 : 0;
    }

    const auto verdicts = elp::check_plans(domain, goal, actions, sem, opts);
    json arr = json::array();
    bool any = false;
    for (const auto& v : verdicts) {
        any = any || v.conformant();
        std::string plan = "{";
        for (std::size_t i = 0; i < v.actions.size(); ++i) {
            plan += (i ? "," : "") + v.actions[i];
        }
        plan += "}";
        if (!c.json_out) {
            std::cout << plan << ": " << (v.conformant() ? "conformant" : "not conformant");
            if (v.conformant()) {
                std::cout << " " << elp::format(v.views, v.program.table());
            }
            std::cout << "\n";
        }
        arr.push_back({{"actions", v.actions},
                       {"conformant", v.conformant()},
                       {"world_views", elp::to_json(v.views, v.program.table())}});
    }
    if (c.json_out) {
        std::cout << json{{"semantics", elp::name(sem)}, {"goal", goal}, {"plans", arr}}.dump(2) << "\n";
    }
    return any ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"world views of ground epistemic logic programs"};
    app.require_subcommand(1);

    Common solve_c;
    std::string solve_file;
    bool explain_unfounded = false;
    bool trace_eht = false;
    auto* solve = app.add_subcommand("solve", "print the world views of a program");
    solve->add_option("file", solve_file, "program file")->required();
    solve_c.attach(solve);
    solve->add_flag("--explain-unfounded", explain_unfounded, "print the greatest unfounded set of each view");
    solve->add_flag("--trace-eht", trace_eht, "print equilibrium models and refuted S5 models");

    Common split_c;
    std::string split_file;
    std::string split_spec;
    bool enumerate = false;
    auto* split = app.add_subcommand("split", "evaluate a program through an epistemic splitting set");
    split->add_option("file", split_file, "program file")->required();
    split_c.attach(split);
    split->add_option("--split", split_spec, "splitting set, U=a,b,...");
    split->add_flag("--enumerate-splits", enumerate, "try every proper epistemic splitting set");

    Common prop_c;
    std::string corpus_dir = ELP_FIXTURE_DIR;
    std::string prop_sems;
    std::uint64_t seed = 1;
    std::size_t count = 100;
    auto* props = app.add_subcommand("properties", "property matrix over the fixture corpus and random programs");
    props->add_option("corpus", corpus_dir, "fixture directory")->capture_default_str();
    props->add_option("--semantics", prop_sems, "comma separated list (default: all)");
    props->add_flag("--eliminate-m", prop_c.eliminate_m, "rewrite M l as not K not l");
    props->add_option("--max-atoms", prop_c.max_atoms, "cap on atoms for the stable-model search");
    props->add_option("--seed", seed, "base seed")->capture_default_str();
    props->add_option("--count", count, "random programs per row")->capture_default_str();
    props->add_flag("--json", prop_c.json_out, "machine-readable output");

    Common conf_c;
    std::string conf_file;
    std::string goal;
    std::string actions;
    bool generate = false;
    auto* conf = app.add_subcommand("conformant", "check or generate conformant plans");
    conf->add_option("file", conf_file, "domain program")->required();
    conf_c.attach(conf);
    conf->add_option("--goal", goal, "goal atom")->required();
    conf->add_option("--actions", actions, "comma separated action atoms")->required();
    conf->add_flag("--generate", generate, "generate-define-test mode with choice rules");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve) {
            return cmd_solve(solve_file, solve_c, explain_unfounded, trace_eht);
        }
        if (*split) {
            return cmd_split(split_file, split_c, split_spec, enumerate);
        }
        if (*props) {
            return cmd_properties(corpus_dir, prop_c, prop_sems, seed, count);
        }
        if (*conf) {
            return cmd_conformant(conf_file, conf_c, goal, actions, generate);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
