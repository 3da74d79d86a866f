#pragma once

#include <utility>
#include <vector>

#include "elp/limits.hpp"
#include "elp/program.hpp"

namespace elp {

bool classical_satisfies(Interpretation i, const ObjectiveLiteral& l);
/// Throws UnsupportedLiteral if the rule has a subjective literal.
bool classical_satisfies(Interpretation i, const Rule& r);
bool classical_satisfies(Interpretation i, const Program& p);

/// Replaces every negated objective literal by #true or #false according to `i`.
Program objective_reduct(const Program& p, Interpretation i);

/// A rule with constants folded away: head ← pos, not neg, not not negneg.
struct FlatRule {
    AtomSet head;
    AtomSet pos;
    AtomSet neg;
    AtomSet negneg;
    friend bool operator==(const FlatRule&, const FlatRule&) = default;
};

/// Appends `l` to the rule body; returns false if the literal is a false constant.
bool add_literal(FlatRule& r, const ObjectiveLiteral& l);
/// Flattens an objective program, dropping rules with a false constant in the body.
std::vector<FlatRule> flatten(const Program& p);

/// Stable models sorted canonically. Candidates are subsets of the head atoms.
std::vector<Interpretation> stable_models(const std::vector<FlatRule>& rules, const Limits& limits = {});
std::vector<Interpretation> stable_models(const Program& p, const Limits& limits = {});

/// Where rules that may go either way (both split conditions hold) are placed.
struct Placement {
    enum class Kind { AllBottom, AllTop, Explicit };
    Kind kind = Kind::AllBottom;
    std::vector<std::size_t> top; // rule indices sent to the top when kind == Explicit

    static Placement all_bottom() { return {}; }
    static Placement all_top() { return {Kind::AllTop, {}}; }
    bool to_top(std::size_t rule) const;
};

struct ObjectiveSplit {
    AtomSet u;
    Program bottom;
    Program top;
    std::vector<std::size_t> bottom_rules; // indices into the original program
    std::vector<std::size_t> top_rules;
};

/// Throws NotASplittingSet naming the first rule meeting neither condition.
ObjectiveSplit objective_split(const Program& p, AtomSet u, const Placement& placement = {});
bool is_splitting_set(const Program& p, AtomSet u);

/// e_U: every atom of U in the top replaced by #true if in i_b, else #false.
Program bottom_evaluation(const Program& top, AtomSet u, Interpretation i_b);

std::vector<std::pair<Interpretation, Interpretation>> objective_solutions(const Program& p, AtomSet u,
                                                                           const Placement& placement = {},
                                                                           const Limits& limits = {});

} // namespace elp
