#include "elp/conformant.hpp"

#include <algorithm>

namespace elp {

bool splitting_safe(Semantics s) { return s == Semantics::G91 || s == Semantics::C19; }

PlanVerdict check_plan(const Program& domain, const std::string& goal, const std::vector<std::string>& actions,
                       Semantics s, const SolveOptions& opts) {
    std::string text;
    for (const auto& a : actions) {
        text += a + ".\n";
    }
    text += ":- not K " + goal + ".\n";
    PlanVerdict v;
    v.actions = actions;
    v.program = extend(domain, text);
    v.views = world_views(v.program, s, opts);
    return v;
}

std::vector<PlanVerdict> check_plans(const Program& domain, const std::string& goal,
                                     const std::vector<std::string>& actions, Semantics s, const SolveOptions& opts) {
    std::vector<std::vector<std::string>> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << actions.size()); ++mask) {
        std::vector<std::string> chosen;
        for (std::size_t i = 0; i < actions.size(); ++i) {
            if ((mask >> i) & 1U) {
                chosen.push_back(actions[i]);
            }
        }
        subsets.push_back(std::move(chosen));
    }
    std::stable_sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::vector<PlanVerdict> out;
    for (const auto& sub : subsets) {
        out.push_back(check_plan(domain, goal, sub, s, opts));
    }
    return out;
}

Program generate_define_test(const Program& domain, const std::string& goal, const std::vector<std::string>& actions) {
    std::string text;
    for (const auto& a : actions) {
        text += a + " :- not K not " + a + ".\n";
    }
    text += ":- not K " + goal + ".\n";
    const Program ext = extend(domain, text);

    AtomSet action_ids;
    for (const auto& a : actions) {
        action_ids.insert(ext.table().id(a));
    }
    std::vector<Rule> rules = ext.rules();
    for (std::size_t k = 0; k < domain.size(); ++k) {
        for (auto& l : rules[k].body) {
            const auto* o = std::get_if<ObjectiveLiteral>(&l);
            if (o != nullptr && o->base == Base::Atom && o->negations == 0 && action_ids.contains(o->atom)) {
                l = SubjectiveLiteral{false, SubjectiveCore{Modality::K, *o}};
            }
        }
    }
    return ext.with_rules(std::move(rules));
}

} // namespace elp
