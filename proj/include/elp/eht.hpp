#pragma once

#include <optional>
#include <vector>

#include "elp/interpretation.hpp"
#include "elp/program.hpp"
#include "elp/semantics.hpp"

namespace elp {

/// The "here" valuation h of an EHT-interpretation ⟨W,h⟩, one entry per member of W
/// in member order, with h[k] ⊆ W.members()[k].
using HereMap = std::vector<AtomSet>;

HereMap identity_map(const WorldView& wv);
bool is_total(const WorldView& wv, const HereMap& h);

/// Satisfaction at the k-th member of wv. Atoms are read from h, K and M range over all
/// members, and `not` is evaluated under the identity map.
bool eht_satisfies(const WorldView& wv, const HereMap& h, std::size_t k, const Literal& l);
bool eht_satisfies(const WorldView& wv, const HereMap& h, std::size_t k, const Rule& r);
/// Same, addressed by interpretation; throws std::invalid_argument if `point` is not in wv.
bool eht_satisfies(const WorldView& wv, const HereMap& h, Interpretation point, const Rule& r);
/// ⟨W,h⟩ satisfies every rule at every point.
bool is_eht_model(const WorldView& wv, const HereMap& h, const Program& p);

/// Some EHT-model ⟨W,h⟩ of p with h(I) ⊂ I for at least one I, where h must be the identity on
/// every member flagged in `fixed_total`.
std::optional<HereMap> find_non_total_model(const Program& p, const WorldView& wv,
                                            const std::vector<bool>& fixed_total = {});

/// ⟨W,id⟩ is an EHT-model and no non-total ⟨W,h⟩ is.
bool is_equilibrium(const Program& p, const WorldView& wv);
WorldViewSet equilibrium_eht_models(const Program& p, const Limits& limits = {});

/// W,X ⊨* Π: every member of X satisfies Π under id, and every EHT-model of Π that is total
/// on W \ X is total.
bool models_star(const WorldView& wv, const WorldView& x, const Program& p);

WorldViewSet f15_world_views(const Program& p, const SolveOptions& opts = {});
/// Equilibrium models not strictly below another one by ⊂ or by <_Π.
WorldViewSet f15_select(const Program& p, const WorldViewSet& equilibria, F15Domain domain);

/// An S5 model of p that is not in equilibrium, with the non-total model refuting it.
struct EquilibriumRefutation {
    WorldView wv;
    HereMap countermodel;
};
std::vector<EquilibriumRefutation> refuted_s5_models(const Program& p, const Limits& limits = {});

} // namespace elp
