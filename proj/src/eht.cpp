#include "elp/eht.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "elp/errors.hpp"
#include "elp/modal.hpp"

namespace elp {

HereMap identity_map(const WorldView& wv) { return HereMap(wv.begin(), wv.end()); }

bool is_total(const WorldView& wv, const HereMap& h) { return std::equal(wv.begin(), wv.end(), h.begin(), h.end()); }

namespace {

bool obj_here(const ObjectiveLiteral& l, AtomSet here, Interpretation there) {
    if (l.base == Base::Atom && l.negations == 0) {
        return here.contains(l.atom);
    }
    return l.eval(there);
}

bool rule_at(const WorldView& wv, const HereMap& h, std::size_t k, const Rule& r) {
    for (const auto& l : r.body) {
        if (!eht_satisfies(wv, h, k, l)) {
            return true;
        }
    }
    return r.head_set().intersects(h[k]);
}

} // namespace

bool eht_satisfies(const WorldView& wv, const HereMap& h, std::size_t k, const Literal& l) {
    if (const auto* o = std::get_if<ObjectiveLiteral>(&l)) {
        return obj_here(*o, h[k], wv.members()[k]);
    }
    const auto& s = std::get<SubjectiveLiteral>(l);
    if (s.negated) {
        return !holds(wv, s.core);
    }
    auto at = [&](std::size_t j) { return obj_here(s.core.inner, h[j], wv.members()[j]); };
    bool all = true;
    bool any = false;
    for (std::size_t j = 0; j < wv.size(); ++j) {
        const bool v = at(j);
        all = all && v;
        any = any || v;
    }
    return s.core.modality == Modality::K ? all : any;
}

bool eht_satisfies(const WorldView& wv, const HereMap& h, std::size_t k, const Rule& r) { return rule_at(wv, h, k, r); }

bool eht_satisfies(const WorldView& wv, const HereMap& h, Interpretation point, const Rule& r) {
    auto it = std::lower_bound(wv.begin(), wv.end(), point);
    if (it == wv.end() || *it != point) {
        throw std::invalid_argument("point is not a member of the world view");
    }
    return rule_at(wv, h, static_cast<std::size_t>(it - wv.begin()), r);
}

bool is_eht_model(const WorldView& wv, const HereMap& h, const Program& p) {
    for (std::size_t k = 0; k < wv.size(); ++k) {
        for (const auto& r : p.rules()) {
            if (!rule_at(wv, h, k, r)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// A rule split into the parts that depend on h and the parts that do not.
struct Split {
    AtomSet head;
    AtomSet pos;                  // positive objective atoms, read from h(I)
    std::vector<std::size_t> dep; // indices of positive K a / M a cores
    std::vector<bool> fixed_ok;   // remaining literals at each point
};

struct DepCore {
    Modality modality;
    AtomId atom;
};

} // namespace

std::optional<HereMap> find_non_total_model(const Program& p, const WorldView& wv,
                                            const std::vector<bool>& fixed_total) {
    const std::size_t n = wv.size();
    const auto& members = wv.members();
    const HereMap id = identity_map(wv);
    std::vector<DepCore> cores;
    std::vector<Split> rules;
    for (const auto& r : p.rules()) {
        Split s;
        s.head = r.head_set();
        s.fixed_ok.assign(n, true);
        for (const auto& l : r.body) {
            const auto* o = std::get_if<ObjectiveLiteral>(&l);
            if (o && o->base == Base::Atom && o->negations == 0) {
                s.pos.insert(o->atom);
                continue;
            }
            const auto* sl = std::get_if<SubjectiveLiteral>(&l);
            if (sl && !sl->negated && sl->core.inner.base == Base::Atom && sl->core.inner.negations == 0) {
                auto it = std::find_if(cores.begin(), cores.end(), [&](const DepCore& c) {
                    return c.modality == sl->core.modality && c.atom == sl->core.inner.atom;
                });
                s.dep.push_back(static_cast<std::size_t>(it - cores.begin()));
                if (it == cores.end()) {
                    cores.push_back({sl->core.modality, sl->core.inner.atom});
                }
                continue;
            }
            // Everything else is evaluated against the "there" valuation only.
            for (std::size_t k = 0; k < n; ++k) {
                if (!eht_satisfies(wv, id, k, l)) {
                    s.fixed_ok[k] = false;
                }
            }
        }
        rules.push_back(std::move(s));
    }
    if (cores.size() > 20) {
        throw CapacityError("too many modal atoms for the EHT search");
    }

    std::vector<std::vector<AtomSet>> allowed(n);
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << cores.size()); ++g) {
        auto gv = [&](std::size_t j) { return ((g >> j) & 1U) != 0; };
        AtomSet must;    // K a claimed true: a in every h(I)
        AtomSet mustnt;  // M a claimed false: a in no h(I)
        for (std::size_t j = 0; j < cores.size(); ++j) {
            if (cores[j].modality == Modality::K && gv(j)) {
                must.insert(cores[j].atom);
            }
            if (cores[j].modality == Modality::M && !gv(j)) {
                mustnt.insert(cores[j].atom);
            }
        }
        bool feasible = true;
        for (std::size_t k = 0; k < n && feasible; ++k) {
            allowed[k].clear();
            const bool fixed = k < fixed_total.size() && fixed_total[k];
            auto consider = [&](AtomSet here) {
                if (!must.subset_of(here) || here.intersects(mustnt)) {
                    return;
                }
                for (const auto& r : rules) {
                    bool body = r.fixed_ok[k] && r.pos.subset_of(here);
                    for (std::size_t j : r.dep) {
                        body = body && gv(j);
                    }
                    if (body && !r.head.intersects(here)) {
                        return;
                    }
                }
                allowed[k].push_back(here);
            };
            if (fixed) {
                consider(members[k]);
            } else {
                members[k].for_each_subset(consider);
            }
            feasible = !allowed[k].empty();
        }
        if (!feasible) {
            continue;
        }
        // Odometer over the product of allowed choices.
        std::vector<std::size_t> pick(n, 0);
        HereMap h(n);
        while (true) {
            bool non_total = false;
            for (std::size_t k = 0; k < n; ++k) {
                h[k] = allowed[k][pick[k]];
                non_total = non_total || h[k] != members[k];
            }
            bool exact = non_total;
            for (std::size_t j = 0; j < cores.size() && exact; ++j) {
                const bool claimed = gv(j);
                bool all = true;
                bool any = false;
                for (std::size_t k = 0; k < n; ++k) {
                    const bool v = h[k].contains(cores[j].atom);
                    all = all && v;
                    any = any || v;
                }
                exact = (cores[j].modality == Modality::K ? all : any) == claimed;
            }
            if (exact) {
                return h;
            }
            std::size_t k = 0;
            while (k < n && ++pick[k] == allowed[k].size()) {
                pick[k++] = 0;
            }
            if (k == n) {
                break;
            }
        }
    }
    return std::nullopt;
}

bool is_equilibrium(const Program& p, const WorldView& wv) {
    return !wv.empty() && is_s5_model(wv, p) && !find_non_total_model(p, wv).has_value();
}

namespace {

template <class F>
void for_each_candidate(const Program& p, const Limits& limits, F&& f) {
    const AtomSet heads = p.head_atoms();
    if (heads.size() > limits.max_eht_atoms) {
        throw CapacityError("F15 search over " + std::to_string(heads.size()) + " head atoms exceeds the cap of " +
                            std::to_string(limits.max_eht_atoms));
    }
    // Members containing a non-head atom always admit a smaller "here" valuation, so
    // equilibrium views range over sets of head atoms only.
    std::vector<Interpretation> interps;
    heads.for_each_subset([&](AtomSet s) { interps.push_back(s); });
    const std::uint64_t count = std::uint64_t{1} << interps.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        std::vector<Interpretation> members;
        for (std::size_t i = 0; i < interps.size(); ++i) {
            if ((mask >> i) & 1U) {
                members.push_back(interps[i]);
            }
        }
        f(WorldView(std::move(members)));
    }
}

} // namespace

WorldViewSet equilibrium_eht_models(const Program& p, const Limits& limits) {
    WorldViewSet out;
    for_each_candidate(p, limits, [&](const WorldView& wv) {
        if (is_equilibrium(p, wv)) {
            out.insert(wv);
        }
    });
    return out;
}

std::vector<EquilibriumRefutation> refuted_s5_models(const Program& p, const Limits& limits) {
    std::vector<EquilibriumRefutation> out;
    for_each_candidate(p, limits, [&](const WorldView& wv) {
        if (!is_s5_model(wv, p)) {
            return;
        }
        if (auto h = find_non_total_model(p, wv)) {
            out.push_back({wv, *h});
        }
    });
    return out;
}

bool models_star(const WorldView& wv, const WorldView& x, const Program& p) {
    for (auto i : x) {
        if (!modal_satisfies(wv, i, p)) {
            return false;
        }
    }
    std::vector<bool> fixed(wv.size());
    for (std::size_t k = 0; k < wv.size(); ++k) {
        fixed[k] = !x.contains(wv.members()[k]);
    }
    return !find_non_total_model(p, wv, fixed).has_value();
}

WorldViewSet f15_world_views(const Program& p, const SolveOptions& opts) {
    return f15_select(p, equilibrium_eht_models(p, opts.limits), opts.f15_domain);
}

WorldViewSet f15_select(const Program& p, const WorldViewSet& equilibria, F15Domain domain_kind) {
    const std::vector<WorldView> eq(equilibria.begin(), equilibria.end());
    std::vector<Interpretation> domain;
    for (const auto& wv : eq) {
        domain.insert(domain.end(), wv.begin(), wv.end());
    }
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());

    // star[w][d]: wv ∪ {I_d}, wv ⊨* Π
    std::vector<std::vector<bool>> star(eq.size(), std::vector<bool>(domain.size()));
    for (std::size_t w = 0; w < eq.size(); ++w) {
        for (std::size_t d = 0; d < domain.size(); ++d) {
            star[w][d] = models_star(eq[w].with(domain[d]), eq[w], p);
        }
    }
    auto leq = [&](std::size_t a, std::size_t b) {
        for (std::size_t d = 0; d < domain.size(); ++d) {
            if (domain_kind == F15Domain::Compared && !eq[a].contains(domain[d]) && !eq[b].contains(domain[d])) {
                continue;
            }
            if (star[a][d] && !star[b][d]) {
                return false;
            }
        }
        return true;
    };

    WorldViewSet out;
    for (std::size_t a = 0; a < eq.size(); ++a) {
        bool beaten = false;
        for (std::size_t b = 0; b < eq.size() && !beaten; ++b) {
            if (a == b) {
                continue;
            }
            beaten = eq[a].proper_subset_of(eq[b]) || (leq(a, b) && !leq(b, a));
        }
        if (!beaten) {
            out.insert(eq[a]);
        }
    }
    return out;
}

} // namespace elp
