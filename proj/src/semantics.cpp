#include "elp/semantics.hpp"

#include <algorithm>
#include <string>

#include "elp/eht.hpp"
#include "elp/errors.hpp"
#include "elp/foundedness.hpp"
#include "elp/modal.hpp"
#include "elp/objective.hpp"
#include "semantics_internal.hpp"

namespace elp {

std::string_view name(Semantics s) {
    switch (s) {
    case Semantics::G91: return "G91";
    case Semantics::G11: return "G11";
    case Semantics::K15: return "K15";
    case Semantics::S17: return "S17";
    case Semantics::F15: return "F15";
    case Semantics::C19: return "C19";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto s : kAllSemantics) {
        std::string n(name(s));
        std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
        if (n == lower) {
            return s;
        }
    }
    return std::nullopt;
}

bool k_only(Semantics s) { return s == Semantics::G11 || s == Semantics::K15 || s == Semantics::S17; }

bool ModalGuess::value(const SubjectiveCore& core) const {
    auto it = std::find(cores.begin(), cores.end(), core);
    if (it == cores.end()) {
        throw std::invalid_argument("subjective core is not part of the guess");
    }
    return value(static_cast<std::size_t>(it - cores.begin()));
}

Program prepare_for(const Program& p, Semantics s, const SolveOptions& opts) {
    if (!k_only(s) || !p.has_m()) {
        return p;
    }
    if (opts.eliminate_m) {
        return eliminate_m(p);
    }
    throw UnsupportedLiteral(std::string(name(s)) + " is defined for K literals only; rewrite M with --eliminate-m");
}

namespace detail {

ObjectiveLiteral reduct_literal(const SubjectiveLiteral& l, bool core_value, Semantics s) {
    if (s == Semantics::G91 || s == Semantics::C19) {
        return (core_value != l.negated) ? ObjectiveLiteral::top() : ObjectiveLiteral::bottom();
    }
    if (l.core.modality != Modality::K) {
        throw UnsupportedLiteral(std::string(name(s)) + " reduct is undefined for M literals");
    }
    if (!core_value) {
        return ObjectiveLiteral::bottom(l.negated ? 1 : 0);
    }
    if (!l.negated) {
        return l.core.inner;
    }
    if (s == Semantics::G11) {
        return ObjectiveLiteral::bottom();
    }
    return l.core.inner.negated();
}

} // namespace detail

Program semantics_reduct(const Program& p, const ModalGuess& guess, Semantics s) {
    std::vector<Rule> rules = p.rules();
    for (auto& r : rules) {
        for (auto& l : r.body) {
            if (const auto* sl = std::get_if<SubjectiveLiteral>(&l)) {
                l = detail::reduct_literal(*sl, guess.value(sl->core), s);
            }
        }
    }
    return p.with_rules(std::move(rules));
}

namespace {

// Rule with subjective literals kept aside as (core index, outer negation) pairs.
struct GuessRule {
    FlatRule base;
    bool dead = false;
    std::vector<std::pair<std::size_t, const SubjectiveLiteral*>> subj;
};

} // namespace

WorldViewSet reduct_world_views(const Program& input, Semantics s, const SolveOptions& opts) {
    const Semantics reduct = s == Semantics::C19 ? Semantics::G91 : s;
    const Program p = prepare_for(input, reduct, opts);
    const auto cores = p.cores();
    if (cores.size() > opts.limits.max_guess_cores) {
        throw CapacityError("program has " + std::to_string(cores.size()) + " subjective cores; the guess cap is " +
                            std::to_string(opts.limits.max_guess_cores));
    }
    if (p.atoms().size() > opts.limits.max_atoms) {
        throw CapacityError("program has " + std::to_string(p.atoms().size()) + " atoms; the stable-model cap is " +
                            std::to_string(opts.limits.max_atoms));
    }

    std::vector<GuessRule> rules;
    for (const auto& r : p.rules()) {
        GuessRule g;
        g.base.head = r.head_set();
        for (const auto& l : r.body) {
            if (const auto* o = std::get_if<ObjectiveLiteral>(&l)) {
                g.dead = !add_literal(g.base, *o) || g.dead;
            } else {
                const auto& sl = std::get<SubjectiveLiteral>(l);
                auto idx = static_cast<std::size_t>(std::find(cores.begin(), cores.end(), sl.core) - cores.begin());
                g.subj.emplace_back(idx, &sl);
            }
        }
        if (!g.dead) {
            rules.push_back(std::move(g));
        }
    }

    WorldViewSet out;
    std::vector<FlatRule> flat;
    for (std::uint64_t guess = 0; guess < (std::uint64_t{1} << cores.size()); ++guess) {
        flat.clear();
        for (const auto& g : rules) {
            FlatRule f = g.base;
            bool alive = true;
            for (const auto& [idx, sl] : g.subj) {
                const auto lit = detail::reduct_literal(*sl, (guess >> idx) & 1U, reduct);
                alive = add_literal(f, lit) && alive;
            }
            if (alive) {
                flat.push_back(f);
            }
        }
        WorldView wv(stable_models(flat, opts.limits));
        if (wv.empty()) {
            continue;
        }
        bool consistent = true;
        for (std::size_t c = 0; c < cores.size() && consistent; ++c) {
            consistent = holds(wv, cores[c]) == (((guess >> c) & 1U) != 0);
        }
        if (consistent) {
            out.insert(std::move(wv));
        }
    }
    return out;
}

namespace detail {

WorldViewSet s17_select(const Program& p, const WorldViewSet& k15) {
    std::vector<SubjectiveCore> k_cores;
    for (const auto& c : p.cores()) {
        if (c.modality == Modality::K) {
            k_cores.push_back(c);
        }
    }
    auto phi = [&](const WorldView& wv) {
        AtomSet bits;
        for (std::size_t i = 0; i < k_cores.size(); ++i) {
            if (!holds(wv, k_cores[i])) {
                bits.insert(static_cast<AtomId>(i));
            }
        }
        return bits;
    };
    WorldViewSet out;
    for (const auto& wv : k15) {
        const AtomSet mine = phi(wv);
        const bool dominated =
            std::any_of(k15.begin(), k15.end(), [&](const WorldView& o) { return mine.proper_subset_of(phi(o)); });
        if (!dominated) {
            out.insert(wv);
        }
    }
    return out;
}

WorldViewSet founded_only(const Program& p, const WorldViewSet& g91, const Limits& limits) {
    WorldViewSet out;
    for (const auto& wv : g91) {
        if (is_founded(p, wv, limits)) {
            out.insert(wv);
        }
    }
    return out;
}

} // namespace detail

WorldViewSet s17_world_views(const Program& input, const SolveOptions& opts) {
    const Program p = prepare_for(input, Semantics::S17, opts);
    return detail::s17_select(p, reduct_world_views(p, Semantics::K15, opts));
}

WorldViewSet c19_world_views(const Program& p, const SolveOptions& opts) {
    return detail::founded_only(p, reduct_world_views(p, Semantics::G91, opts), opts.limits);
}

WorldViewSet world_views(const Program& p, Semantics s, const SolveOptions& opts) {
    switch (s) {
    case Semantics::G91:
    case Semantics::G11:
    case Semantics::K15: return reduct_world_views(p, s, opts);
    case Semantics::S17: return s17_world_views(p, opts);
    case Semantics::F15: return f15_world_views(p, opts);
    case Semantics::C19: return c19_world_views(p, opts);
    }
    return {};
}

} // namespace elp
