#pragma once

#include "elp/interpretation.hpp"
#include "elp/program.hpp"

namespace elp {

/// W ⊨ K l / M l; the point is irrelevant for subjective literals.
bool holds(const WorldView& wv, const SubjectiveCore& core);
bool holds(const WorldView& wv, const SubjectiveLiteral& l);

bool modal_satisfies(const WorldView& wv, Interpretation point, const Literal& l);
bool modal_satisfies(const WorldView& wv, Interpretation point, const Rule& r);
bool modal_satisfies(const WorldView& wv, Interpretation point, const Program& p);
/// Every literal of the body holds at ⟨wv, point⟩.
bool body_holds(const WorldView& wv, Interpretation point, const Rule& r);

/// W ⊨ Π: every member of W satisfies every rule.
bool is_s5_model(const WorldView& wv, const Program& p);

/// Π^W_U: subjective literals whose atom is in U replaced by a truth constant.
/// The K/M core is replaced and an outer `not` is kept, e.g. `not K a` becomes `not #false`.
Program subjective_reduct(const Program& p, const WorldView& wv, AtomSet u);
Program subjective_reduct(const Program& p, const WorldView& wv);

} // namespace elp
