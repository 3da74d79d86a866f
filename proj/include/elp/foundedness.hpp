#pragma once

#include <compare>
#include <vector>

#include "elp/interpretation.hpp"
#include "elp/limits.hpp"
#include "elp/program.hpp"

namespace elp {

struct UnfoundedPair {
    AtomSet x;
    Interpretation i;
    friend auto operator<=>(const UnfoundedPair&, const UnfoundedPair&) = default;
};

struct UnfoundedSet {
    std::vector<UnfoundedPair> pairs; // sorted
    AtomSet y;                        // union of the X components

    bool empty() const { return pairs.empty(); }
    bool contains(const UnfoundedPair& p) const;
};

/// Atoms of positive objective body literals.
AtomSet positive_objective_atoms(const Rule& r);
/// Atoms of subjective literals without an outer `not` whose argument is a plain atom (K a, M a).
AtomSet positive_subjective_atoms(const Rule& r);

/// Whether `r` justifies the pair: the head meets X, the body holds at ⟨W,I⟩, no positive
/// objective body atom is in X, no other head atom is in I, and no positive subjective atom is in Y.
bool justifies(const Rule& r, const WorldView& wv, const UnfoundedPair& pair, AtomSet y);
bool has_justifying_rule(const Program& p, const WorldView& wv, const UnfoundedPair& pair, AtomSet y);

/// Greatest set of pairs ⟨X,I⟩ with I ∈ W and X ∩ I ≠ ∅ none of which has a justifying rule.
/// Built by deleting justified pairs until nothing changes. Empty iff W is founded.
UnfoundedSet greatest_unfounded_set(const Program& p, const WorldView& wv, const Limits& limits = {});
bool is_founded(const Program& p, const WorldView& wv, const Limits& limits = {});

} // namespace elp
