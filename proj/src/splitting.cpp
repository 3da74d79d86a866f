#include "elp/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "elp/errors.hpp"
#include "elp/foundedness.hpp"
#include "elp/modal.hpp"

namespace elp {

std::vector<std::pair<AtomId, AtomId>> dep_relation(const Program& p) {
    std::vector<std::pair<AtomId, AtomId>> out;
    for (const auto& r : p.rules()) {
        const AtomSet from = r.head_set() | r.body_obj_atoms();
        const AtomSet to = r.body_sub_atoms();
        from.for_each([&](AtomId a) { to.for_each([&](AtomId b) { out.emplace_back(a, b); }); });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool cond_bottom(const Rule& r, AtomSet u) { return r.atoms().subset_of(u); }
bool cond_top(const Rule& r, AtomSet u) { return !(r.head_set() | r.body_obj_atoms()).intersects(u); }

} // namespace

bool is_epistemic_splitting_set(const Program& p, AtomSet u) {
    return std::all_of(p.rules().begin(), p.rules().end(),
                       [&](const Rule& r) { return cond_bottom(r, u) || cond_top(r, u); });
}

std::vector<std::size_t> flexible_rules(const Program& p, AtomSet u) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (cond_bottom(p[k], u) && cond_top(p[k], u)) {
            out.push_back(k);
        }
    }
    return out;
}

EpistemicSplit epistemic_split(const Program& p, AtomSet u, const Placement& placement) {
    EpistemicSplit s;
    s.u = u;
    std::vector<Rule> bottom;
    std::vector<Rule> top;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Rule& r = p[k];
        const bool in_bottom = cond_bottom(r, u);
        const bool in_top = cond_top(r, u);
        if (!in_bottom && !in_top) {
            throw NotAnEpistemicSplittingSet(k, p.to_string(r));
        }
        if (in_bottom && in_top) {
            s.flexible.push_back(k);
        }
        if (in_bottom && (!in_top || !placement.to_top(k))) {
            bottom.push_back(r);
            s.bottom_rules.push_back(k);
        } else {
            top.push_back(r);
            s.top_rules.push_back(k);
        }
    }
    s.bottom = p.with_rules(std::move(bottom));
    s.top = p.with_rules(std::move(top));
    return s;
}

Program top_simplification(const EpistemicSplit& split, const WorldView& wv_b) {
    return subjective_reduct(split.top, wv_b, split.u);
}

std::vector<EpistemicSolution> epistemic_solutions(const Program& p, AtomSet u, Semantics s,
                                                   const Placement& placement, const SolveOptions& opts) {
    const auto split = epistemic_split(p, u, placement);
    std::vector<EpistemicSolution> out;
    for (const auto& wv_b : world_views(split.bottom, s, opts)) {
        for (const auto& wv_t : world_views(top_simplification(split, wv_b), s, opts)) {
            out.push_back({wv_b, wv_t});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

WorldViewSet combined_views(const std::vector<EpistemicSolution>& solutions) {
    WorldViewSet out;
    for (const auto& sol : solutions) {
        out.insert(sol.combined());
    }
    return out;
}

std::vector<AtomSet> enumerate_epistemic_splitting_sets(const Program& p) {
    const AtomSet at = p.atoms();
    if (at.size() > 20) {
        throw CapacityError("splitting-set enumeration over " + std::to_string(at.size()) + " atoms exceeds the cap of 20");
    }
    std::vector<AtomSet> out;
    at.for_each_subset([&](AtomSet u) {
        if (!u.empty() && u != at && is_epistemic_splitting_set(p, u)) {
            out.push_back(u);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view name(Property p) {
    switch (p) {
    case Property::EpistemicSplitting: return "epistemic_splitting";
    case Property::ConstraintMonotonicity: return "subjective_constraint_monotonicity";
    case Property::SupraAsp: return "supra_asp";
    case Property::SupraS5: return "supra_s5";
    case Property::Foundedness: return "foundedness";
    }
    return "?";
}

std::string_view name(Verdict v) { return v == Verdict::Holds ? "holds" : "violated"; }

nlohmann::json to_json(const PropertyReport& r) {
    const AtomTable& t = *r.table;
    nlohmann::json j;
    j["property"] = name(r.property);
    j["semantics"] = name(r.semantics);
    j["program"] = r.program;
    j["U"] = r.u ? nlohmann::json(t.names(*r.u)) : nlohmann::json(nullptr);
    j["verdict"] = name(r.verdict);
    j["lhs"] = to_json(r.lhs, t);
    j["rhs"] = to_json(r.rhs, t);
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    if (!r.detail.empty()) {
        j["detail"] = r.detail;
    }
    return j;
}

namespace {

PropertyReport splitting_report(const Program& p, AtomSet u, Semantics s, const WorldViewSet& direct,
                                const Placement& placement, const SolveOptions& opts) {
    PropertyReport rep;
    rep.property = Property::EpistemicSplitting;
    rep.semantics = s;
    rep.program = p.to_string();
    rep.table = p.table_ptr();
    rep.u = u;
    rep.lhs = direct;
    rep.rhs = combined_views(epistemic_solutions(p, u, s, placement, opts));
    rep.verdict = rep.lhs == rep.rhs ? Verdict::Holds : Verdict::Violated;
    return rep;
}

std::string describe(const Program& p, const Placement& placement, const std::vector<std::size_t>& flexible) {
    std::string out = "rules placed in the top:";
    bool any = false;
    for (auto k : flexible) {
        if (placement.to_top(k)) {
            out += " `" + p.to_string(p[k]) + "`";
            any = true;
        }
    }
    return any ? out : "";
}

} // namespace

PropertyReport check_epistemic_splitting(const Program& p, AtomSet u, Semantics s, const Placement& placement,
                                         const SolveOptions& opts) {
    if (!is_epistemic_splitting_set(p, u)) {
        epistemic_split(p, u, placement); // throws with the offending rule
    }
    auto rep = splitting_report(p, u, s, world_views(p, s, opts), placement, opts);
    rep.detail = describe(p, placement, flexible_rules(p, u));
    return rep;
}

PropertyReport check_epistemic_splitting(const Program& p, AtomSet u, Semantics s, const SolveOptions& opts) {
    const auto flexible = flexible_rules(p, u);
    std::vector<Placement> placements;
    if (flexible.size() <= 6) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << flexible.size()); ++mask) {
            Placement pl{Placement::Kind::Explicit, {}};
            for (std::size_t i = 0; i < flexible.size(); ++i) {
                if ((mask >> i) & 1U) {
                    pl.top.push_back(flexible[i]);
                }
            }
            placements.push_back(std::move(pl));
        }
    } else {
        placements = {Placement::all_bottom(), Placement::all_top()};
    }
    if (!is_epistemic_splitting_set(p, u)) {
        epistemic_split(p, u);
    }
    const auto direct = world_views(p, s, opts);
    PropertyReport first;
    for (std::size_t i = 0; i < placements.size(); ++i) {
        auto rep = splitting_report(p, u, s, direct, placements[i], opts);
        if (!rep.holds()) {
            rep.detail = describe(p, placements[i], flexible);
            return rep;
        }
        if (i == 0) {
            first = std::move(rep);
        }
    }
    return first;
}

PropertyReport check_constraint_monotonicity(const Program& p, const Rule& r, Semantics s, const SolveOptions& opts) {
    if (!r.is_subjective_constraint()) {
        throw std::invalid_argument("not a subjective constraint: " + p.to_string(r));
    }
    PropertyReport rep;
    rep.property = Property::ConstraintMonotonicity;
    rep.semantics = s;
    const Program extended = p.with_rule(r);
    rep.program = extended.to_string();
    rep.table = extended.table_ptr();
    rep.lhs = world_views(extended, s, opts);
    for (const auto& wv : world_views(p, s, opts)) {
        if (modal_satisfies(wv, wv.members().front(), r)) {
            rep.rhs.insert(wv);
        }
    }
    rep.verdict = rep.lhs == rep.rhs ? Verdict::Holds : Verdict::Violated;
    rep.detail = "constraint `" + p.to_string(r) + "`";
    return rep;
}

PropertyReport check_supra_asp(const Program& p, Semantics s, const SolveOptions& opts) {
    if (!p.objective()) {
        throw std::invalid_argument("supra-ASP applies to objective programs only");
    }
    PropertyReport rep;
    rep.property = Property::SupraAsp;
    rep.semantics = s;
    rep.program = p.to_string();
    rep.table = p.table_ptr();
    rep.lhs = world_views(p, s, opts);
    auto sm = stable_models(p, opts.limits);
    if (!sm.empty()) {
        rep.rhs.insert(WorldView(std::move(sm)));
    }
    rep.verdict = rep.lhs == rep.rhs ? Verdict::Holds : Verdict::Violated;
    return rep;
}

PropertyReport check_supra_s5(const Program& p, Semantics s, const SolveOptions& opts) {
    PropertyReport rep;
    rep.property = Property::SupraS5;
    rep.semantics = s;
    rep.program = p.to_string();
    rep.table = p.table_ptr();
    rep.lhs = world_views(p, s, opts);
    for (const auto& wv : rep.lhs) {
        if (!is_s5_model(wv, p)) {
            rep.rhs.insert(wv);
        }
    }
    rep.verdict = rep.rhs.empty() ? Verdict::Holds : Verdict::Violated;
    return rep;
}

PropertyReport check_foundedness(const Program& p, Semantics s, const SolveOptions& opts) {
    PropertyReport rep;
    rep.property = Property::Foundedness;
    rep.semantics = s;
    rep.program = p.to_string();
    rep.table = p.table_ptr();
    rep.lhs = world_views(p, s, opts);
    for (const auto& wv : rep.lhs) {
        if (!is_founded(p, wv, opts.limits)) {
            rep.rhs.insert(wv);
        }
    }
    rep.verdict = rep.rhs.empty() ? Verdict::Holds : Verdict::Violated;
    return rep;
}

int Stratification::layers() const {
    int top = -1;
    for (int l : lambda) {
        top = std::max(top, l);
    }
    return top + 1;
}

Stratification stratify(const Program& p) {
    const auto& table = p.table();
    const std::size_t n = table.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& r : p.rules()) {
        const AtomSet same = r.atoms() - r.body_sub_atoms();
        if (same.empty()) {
            continue;
        }
        const auto root = find(same.first_id());
        same.for_each([&](AtomId a) { parent[find(a)] = root; });
    }

    const AtomSet at = p.atoms();
    const auto dep = dep_relation(p);
    std::vector<std::vector<std::size_t>> edges(n); // group -> groups that must be strictly lower
    for (const auto& [a, b] : dep) {
        const auto ga = find(a);
        const auto gb = find(b);
        if (ga == gb) {
            throw NotStratified("atoms " + table.text(a) + " and " + table.text(b) +
                                " share a layer but " + table.text(a) + " depends on K/M of " + table.text(b));
        }
        edges[ga].push_back(gb);
    }

    // Longest path with cycle detection; 0 = unvisited, 1 = on stack, 2 = done.
    std::vector<int> state(n, 0);
    std::vector<int> level(n, 0);
    std::vector<std::size_t> stack;
    std::function<void(std::size_t)> visit = [&](std::size_t g) {
        state[g] = 1;
        stack.push_back(g);
        for (auto h : edges[g]) {
            if (state[h] == 1) {
                std::string cycle;
                auto it = std::find(stack.begin(), stack.end(), h);
                for (; it != stack.end(); ++it) {
                    cycle += table.text(static_cast<AtomId>(*it)) + " -> ";
                }
                throw NotStratified("modal dependency cycle: " + cycle + table.text(static_cast<AtomId>(h)));
            }
            if (state[h] == 0) {
                visit(h);
            }
            level[g] = std::max(level[g], level[h] + 1);
        }
        stack.pop_back();
        state[g] = 2;
    };

    Stratification out;
    out.lambda.assign(n, -1);
    std::vector<std::vector<AtomId>> by_root(n);
    at.for_each([&](AtomId a) {
        const auto g = find(a);
        if (state[g] == 0) {
            visit(g);
        }
        by_root[g].push_back(a);
    });
    at.for_each([&](AtomId a) { out.lambda[a] = level[find(a)]; });
    for (auto& g : by_root) {
        if (!g.empty()) {
            out.groups.push_back(std::move(g));
        }
    }
    std::sort(out.groups.begin(), out.groups.end());
    return out;
}

std::optional<WorldView> layered_world_view(const Program& p, Semantics s, const SolveOptions& opts) {
    const auto strat = stratify(p);
    const int n = strat.layers();
    // Rules with no atom outside subjective bodies go into an extra final layer.
    std::vector<std::vector<Rule>> layer(static_cast<std::size_t>(n) + 1);
    for (const auto& r : p.rules()) {
        const AtomSet same = r.atoms() - r.body_sub_atoms();
        const int l = same.empty() ? n : strat.lambda[same.first_id()];
        layer[static_cast<std::size_t>(l)].push_back(r);
    }

    std::optional<WorldView> result = WorldView{AtomSet{}};
    AtomSet below;
    for (std::size_t i = 0; i < layer.size() && result; ++i) {
        const Program simplified = subjective_reduct(p.with_rules(layer[i]), *result, below);
        if (!simplified.objective()) {
            throw std::logic_error("layer " + std::to_string(i) + " still has subjective literals after simplification");
        }
        auto sm = stable_models(simplified, opts.limits);
        if (sm.empty()) {
            result.reset();
        } else {
            result = combine(*result, WorldView(std::move(sm)));
        }
        for (std::size_t a = 0; a < strat.lambda.size(); ++a) {
            if (strat.lambda[a] == static_cast<int>(i)) {
                below.insert(static_cast<AtomId>(a));
            }
        }
    }

    const auto direct = world_views(p, s, opts);
    const bool agrees = result ? (direct.size() == 1 && *direct.begin() == *result) : direct.empty();
    if (!agrees) {
        throw std::logic_error("layered evaluation disagrees with the direct " + std::string(name(s)) +
                               " world views: layered " + (result ? format(*result, p.table()) : "none") +
                               ", direct " + format(direct, p.table()));
    }
    return result;
}

} // namespace elp
