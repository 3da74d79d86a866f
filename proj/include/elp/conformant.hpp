#pragma once

#include <string>
#include <vector>

#include "elp/interpretation.hpp"
#include "elp/program.hpp"
#include "elp/semantics.hpp"

namespace elp {

struct PlanVerdict {
    std::vector<std::string> actions;
    Program program; // domain + action facts + goal constraint
    WorldViewSet views;
    bool conformant() const { return !views.empty(); }
};

/// Adds the actions as facts and `:- not K goal.`; conformant iff a world view remains.
PlanVerdict check_plan(const Program& domain, const std::string& goal, const std::vector<std::string>& actions,
                       Semantics s, const SolveOptions& opts = {});
/// check_plan for every subset of `actions`, smallest first.
std::vector<PlanVerdict> check_plans(const Program& domain, const std::string& goal,
                                     const std::vector<std::string>& actions, Semantics s,
                                     const SolveOptions& opts = {});

/// Choice rules `a :- not K not a.` for each action, the domain with positive body
/// occurrences of actions replaced by `K a`, and the goal constraint.
Program generate_define_test(const Program& domain, const std::string& goal, const std::vector<std::string>& actions);

/// Semantics under which the plan encodings are known to behave modularly.
bool splitting_safe(Semantics s);

} // namespace elp
