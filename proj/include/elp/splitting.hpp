#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "elp/interpretation.hpp"
#include "elp/objective.hpp"
#include "elp/program.hpp"
#include "elp/semantics.hpp"

namespace elp {

/// dep(a,b): some rule has a in its head or objective body and b in a subjective body literal.
std::vector<std::pair<AtomId, AtomId>> dep_relation(const Program& p);

struct EpistemicSplit {
    AtomSet u;
    Program bottom;
    Program top;
    std::vector<std::size_t> bottom_rules;
    std::vector<std::size_t> top_rules;
    std::vector<std::size_t> flexible; // rules meeting both conditions
};

bool is_epistemic_splitting_set(const Program& p, AtomSet u);
/// Throws NotAnEpistemicSplittingSet naming the first rule meeting neither condition.
EpistemicSplit epistemic_split(const Program& p, AtomSet u, const Placement& placement = {});
/// Indices of rules that may go to either side for this U.
std::vector<std::size_t> flexible_rules(const Program& p, AtomSet u);

/// E_U(Π, W_b): subjective literals over U in the top replaced by their value in W_b.
Program top_simplification(const EpistemicSplit& split, const WorldView& wv_b);

struct EpistemicSolution {
    WorldView wv_b;
    WorldView wv_t;
    WorldView combined() const { return combine(wv_b, wv_t); }
    friend auto operator<=>(const EpistemicSolution&, const EpistemicSolution&) = default;
};

std::vector<EpistemicSolution> epistemic_solutions(const Program& p, AtomSet u, Semantics s,
                                                   const Placement& placement = {}, const SolveOptions& opts = {});
WorldViewSet combined_views(const std::vector<EpistemicSolution>& solutions);

/// All U with ∅ ⊂ U ⊂ Atoms(Π) that are epistemic splitting sets.
std::vector<AtomSet> enumerate_epistemic_splitting_sets(const Program& p);

enum class Property { EpistemicSplitting, ConstraintMonotonicity, SupraAsp, SupraS5, Foundedness };
enum class Verdict { Holds, Violated };

std::string_view name(Property p);
std::string_view name(Verdict v);

/// Outcome of one property check. lhs/rhs are the two sides compared; for supra-S5 rhs holds
/// the offending views.
struct PropertyReport {
    Property property = Property::EpistemicSplitting;
    Semantics semantics = Semantics::G91;
    std::string program;
    AtomTablePtr table; // renders U, lhs and rhs
    std::optional<AtomSet> u;
    Verdict verdict = Verdict::Holds;
    WorldViewSet lhs;
    WorldViewSet rhs;
    std::optional<std::uint64_t> seed;
    std::string detail;

    bool holds() const { return verdict == Verdict::Holds; }
};

nlohmann::json to_json(const PropertyReport& r);

/// Compares the direct world views with the combined solutions for one placement.
PropertyReport check_epistemic_splitting(const Program& p, AtomSet u, Semantics s, const Placement& placement,
                                         const SolveOptions& opts = {});
/// Checks every placement of the flexible rules; violated if any placement disagrees.
PropertyReport check_epistemic_splitting(const Program& p, AtomSet u, Semantics s, const SolveOptions& opts = {});

/// r must be a subjective constraint over p's atom table.
PropertyReport check_constraint_monotonicity(const Program& p, const Rule& r, Semantics s,
                                             const SolveOptions& opts = {});
/// p must be objective.
PropertyReport check_supra_asp(const Program& p, Semantics s, const SolveOptions& opts = {});
PropertyReport check_supra_s5(const Program& p, Semantics s, const SolveOptions& opts = {});
/// Every world view is founded; rhs holds the unfounded ones.
PropertyReport check_foundedness(const Program& p, Semantics s, const SolveOptions& opts = {});

struct Stratification {
    std::vector<int> lambda;              // per atom id; -1 for atoms not in the program
    std::vector<std::vector<AtomId>> groups; // atoms forced to share a layer
    int layers() const;
};

/// Throws NotStratified with a witness (an internal dependency or a cycle).
Stratification stratify(const Program& p);

/// Layer-by-layer evaluation: each layer's rules are simplified by the view built so far and
/// solved as an objective program. Subjective constraints are evaluated last. Returns nullopt
/// if some layer has no world view; throws std::logic_error if the result differs from the
/// direct computation.
std::optional<WorldView> layered_world_view(const Program& p, Semantics s, const SolveOptions& opts = {});

} // namespace elp
