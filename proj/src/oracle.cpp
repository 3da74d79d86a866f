// Definitional world-view search used to cross-check the guess-based solver.

#include <map>
#include <string>

#include "elp/eht.hpp"
#include "elp/errors.hpp"
#include "elp/modal.hpp"
#include "elp/objective.hpp"
#include "elp/semantics.hpp"
#include "semantics_internal.hpp"

namespace elp {

std::vector<Interpretation> naive_stable_models(const Program& p, AtomSet universe) {
    std::vector<Interpretation> out;
    universe.for_each_subset([&](Interpretation i) {
        if (!classical_satisfies(i, p)) {
            return;
        }
        const Program reduct = objective_reduct(p, i);
        bool minimal = true;
        universe.for_each_subset([&](Interpretation j) {
            if (minimal && j.proper_subset_of(i) && classical_satisfies(j, reduct)) {
                minimal = false;
            }
        });
        if (minimal) {
            out.push_back(i);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// The reduct of p with respect to the candidate view itself.
Program reduct_for(const Program& p, const WorldView& wv, Semantics s) {
    std::vector<Rule> rules = p.rules();
    for (auto& r : rules) {
        for (auto& l : r.body) {
            const auto* sl = std::get_if<SubjectiveLiteral>(&l);
            if (sl == nullptr) {
                continue;
            }
            const bool k_true = holds(wv, sl->core);
            switch (s) {
            case Semantics::G91:
                l = holds(wv, *sl) ? ObjectiveLiteral::top() : ObjectiveLiteral::bottom();
                break;
            case Semantics::G11:
                if (!k_true) {
                    l = ObjectiveLiteral::bottom(sl->negated ? 1 : 0);
                } else {
                    l = sl->negated ? ObjectiveLiteral::bottom() : sl->core.inner;
                }
                break;
            default: // K15
                if (!k_true) {
                    l = ObjectiveLiteral::bottom(sl->negated ? 1 : 0);
                } else {
                    l = sl->negated ? sl->core.inner.negated() : sl->core.inner;
                }
                break;
            }
        }
    }
    return p.with_rules(std::move(rules));
}

WorldViewSet fixpoint_views(const Program& p, Semantics s, AtomSet at) {
    std::vector<Interpretation> interps;
    at.for_each_subset([&](AtomSet i) { interps.push_back(i); });
    const auto cores = p.cores();
    std::map<std::uint64_t, WorldView> memo;

    WorldViewSet out;
    const std::uint64_t count = std::uint64_t{1} << interps.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        std::vector<Interpretation> members;
        for (std::size_t i = 0; i < interps.size(); ++i) {
            if ((mask >> i) & 1U) {
                members.push_back(interps[i]);
            }
        }
        const WorldView wv(std::move(members));
        // The reduct depends on wv only through the truth of each core.
        std::uint64_t key = 0;
        for (std::size_t c = 0; c < cores.size(); ++c) {
            if (holds(wv, cores[c])) {
                key |= std::uint64_t{1} << c;
            }
        }
        auto it = memo.find(key);
        if (it == memo.end()) {
            it = memo.emplace(key, WorldView(naive_stable_models(reduct_for(p, wv, s), at))).first;
        }
        if (it->second == wv) {
            out.insert(wv);
        }
    }
    return out;
}

} // namespace

WorldViewSet brute_force_world_views(const Program& input, Semantics s, const SolveOptions& opts) {
    const Program p = prepare_for(input, s == Semantics::C19 ? Semantics::G91 : s, opts);
    const AtomSet at = p.atoms();
    if (at.size() > opts.limits.max_brute_force_atoms) {
        throw CapacityError("brute-force search over " + std::to_string(at.size()) + " atoms exceeds the cap of " +
                            std::to_string(opts.limits.max_brute_force_atoms));
    }
    switch (s) {
    case Semantics::G91:
    case Semantics::G11:
    case Semantics::K15: return fixpoint_views(p, s, at);
    case Semantics::S17: return detail::s17_select(p, fixpoint_views(p, Semantics::K15, at));
    case Semantics::C19: return detail::founded_only(p, fixpoint_views(p, Semantics::G91, at), opts.limits);
    case Semantics::F15: {
        WorldViewSet eq;
        std::vector<Interpretation> interps;
        at.for_each_subset([&](AtomSet i) { interps.push_back(i); });
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << interps.size()); ++mask) {
            std::vector<Interpretation> members;
            for (std::size_t i = 0; i < interps.size(); ++i) {
                if ((mask >> i) & 1U) {
                    members.push_back(interps[i]);
                }
            }
            WorldView wv(std::move(members));
            if (is_equilibrium(p, wv)) {
                eq.insert(std::move(wv));
            }
        }
        return f15_select(p, eq, opts.f15_domain);
    }
    }
    return {};
}

} // namespace elp
