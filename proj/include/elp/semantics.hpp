#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "elp/interpretation.hpp"
#include "elp/limits.hpp"
#include "elp/program.hpp"

namespace elp {

enum class Semantics { G91, G11, K15, S17, F15, C19 };

/// Column order of the property matrix.
inline constexpr std::array<Semantics, 6> kAllSemantics{Semantics::G91, Semantics::G11, Semantics::F15,
                                                        Semantics::K15, Semantics::S17, Semantics::C19};

std::string_view name(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view text);
/// G11, K15 and S17 define their reducts for K only.
bool k_only(Semantics s);

/// Which interpretations ≤_Π quantifies over in the F15 selection.
enum class F15Domain {
    ProgramWide, // members of any equilibrium model of the program
    Compared,    // members of the two views being compared
};

struct SolveOptions {
    Limits limits = Limits::from_env();
    bool eliminate_m = false;
    F15Domain f15_domain = F15Domain::ProgramWide;
};

/// Truth values assigned to every distinct subjective core of a program.
struct ModalGuess {
    std::vector<SubjectiveCore> cores;
    std::uint64_t values = 0;

    bool value(std::size_t i) const { return (values >> i) & 1U; }
    /// Value of `core`, which must be one of `cores`.
    bool value(const SubjectiveCore& core) const;
};

/// Reduct of `p` under a guess. G91 replaces every subjective literal by its truth value.
/// G11 and K15: false `K l` becomes #false, true `K l` becomes l; under K15 a true `not K l`
/// becomes `not l`, under G11 it becomes #false. Throws UnsupportedLiteral on M for G11/K15.
Program semantics_reduct(const Program& p, const ModalGuess& guess, Semantics s);

/// Guess-and-check world views for G91, G11 and K15.
WorldViewSet reduct_world_views(const Program& p, Semantics s, const SolveOptions& opts = {});
/// K15 world views with a ⊆-maximal set of satisfied `not K l`.
WorldViewSet s17_world_views(const Program& p, const SolveOptions& opts = {});
/// C19: G91 world views without an unfounded set.
WorldViewSet c19_world_views(const Program& p, const SolveOptions& opts = {});

/// Dispatches to the semantics. M literals under G11/K15/S17 are rewritten when
/// opts.eliminate_m is set and rejected otherwise.
WorldViewSet world_views(const Program& p, Semantics s, const SolveOptions& opts = {});

/// Enumerates every non-empty set of interpretations over Atoms(p) and tests it against the
/// definition directly (reducts built from the candidate itself, no guessing).
WorldViewSet brute_force_world_views(const Program& p, Semantics s, const SolveOptions& opts = {});

/// Stable models by testing every subset of `universe` and every smaller subset for minimality.
/// Deliberately naive; used as an oracle for the kernel-backed search.
std::vector<Interpretation> naive_stable_models(const Program& p, AtomSet universe);

/// Prepares `p` for a K-only semantics, applying or rejecting M elimination.
Program prepare_for(const Program& p, Semantics s, const SolveOptions& opts);

} // namespace elp
