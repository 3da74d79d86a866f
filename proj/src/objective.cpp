#include "elp/objective.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "elp/errors.hpp"
#include "elp/kernels.hpp"

namespace elp {

Limits Limits::from_env() {
    Limits l;
    if (const char* v = std::getenv("ELP_MAX_ATOMS"); v != nullptr && *v != '\0') {
        l.max_atoms = static_cast<std::size_t>(std::stoul(v));
    }
    return l;
}

bool classical_satisfies(Interpretation i, const ObjectiveLiteral& l) { return l.eval(i); }

bool classical_satisfies(Interpretation i, const Rule& r) {
    bool body = true;
    for (const auto& l : r.body) {
        const auto* o = std::get_if<ObjectiveLiteral>(&l);
        if (o == nullptr) {
            throw UnsupportedLiteral("classical satisfaction is undefined for subjective literals");
        }
        body = body && o->eval(i);
    }
    return !body || r.head_set().intersects(i);
}

bool classical_satisfies(Interpretation i, const Program& p) {
    return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) { return classical_satisfies(i, r); });
}

Program objective_reduct(const Program& p, Interpretation i) {
    std::vector<Rule> rules = p.rules();
    for (auto& r : rules) {
        for (auto& l : r.body) {
            auto* o = std::get_if<ObjectiveLiteral>(&l);
            if (o == nullptr) {
                throw UnsupportedLiteral("objective reduct of a program with subjective literals");
            }
            if (o->negations > 0) {
                *o = o->eval(i) ? ObjectiveLiteral::top() : ObjectiveLiteral::bottom();
            }
        }
    }
    return p.with_rules(std::move(rules));
}

bool add_literal(FlatRule& r, const ObjectiveLiteral& l) {
    if (l.is_constant()) {
        return l.eval(AtomSet{});
    }
    switch (l.negations) {
    case 0: r.pos.insert(l.atom); break;
    case 1: r.neg.insert(l.atom); break;
    default: r.negneg.insert(l.atom); break;
    }
    return true;
}

std::vector<FlatRule> flatten(const Program& p) {
    std::vector<FlatRule> out;
    for (const auto& r : p.rules()) {
        FlatRule f;
        f.head = r.head_set();
        bool alive = true;
        for (const auto& l : r.body) {
            const auto* o = std::get_if<ObjectiveLiteral>(&l);
            if (o == nullptr) {
                throw UnsupportedLiteral("stable models are defined for objective programs only");
            }
            alive = add_literal(f, *o) && alive;
        }
        if (alive) {
            out.push_back(f);
        }
    }
    return out;
}

namespace {

constexpr std::size_t kBatch = 256;

// Is some proper subset of i a model of the reduct rules?
bool has_smaller_model(const std::vector<kernels::PackedRule>& reduct, Interpretation i) {
    std::array<std::uint64_t, kBatch> buf{};
    std::size_t n = 0;
    const std::uint64_t full = i.bits();
    if (full == 0) {
        return false;
    }
    std::uint64_t s = full;
    do {
        s = (s - 1) & full;
        buf[n++] = s;
        if (n == kBatch) {
            if (kernels::any_model(reduct, std::span(buf.data(), n))) {
                return true;
            }
            n = 0;
        }
    } while (s != 0);
    return n > 0 && kernels::any_model(reduct, std::span(buf.data(), n));
}

} // namespace

std::vector<Interpretation> stable_models(const std::vector<FlatRule>& rules, const Limits& limits) {
    AtomSet heads;
    for (const auto& r : rules) {
        heads |= r.head;
    }
    if (heads.size() > limits.max_atoms) {
        throw CapacityError("stable-model search over " + std::to_string(heads.size()) +
                            " atoms exceeds the cap of " + std::to_string(limits.max_atoms));
    }
    std::vector<kernels::PackedRule> classical;
    classical.reserve(rules.size());
    for (const auto& r : rules) {
        classical.push_back({(r.pos | r.negneg).bits(), r.neg.bits(), r.head.bits()});
    }

    std::vector<Interpretation> out;
    std::vector<kernels::PackedRule> reduct;
    std::array<std::uint64_t, kBatch> cand{};
    std::array<std::uint8_t, kBatch> flags{};
    std::size_t n = 0;

    auto flush = [&] {
        kernels::models(classical, std::span(cand.data(), n), std::span(flags.data(), n));
        for (std::size_t k = 0; k < n; ++k) {
            if (!flags[k]) {
                continue;
            }
            const Interpretation i{cand[k]};
            reduct.clear();
            for (const auto& r : rules) {
                if (!r.neg.intersects(i) && r.negneg.subset_of(i)) {
                    reduct.push_back({r.pos.bits(), 0, r.head.bits()});
                }
            }
            if (!has_smaller_model(reduct, i)) {
                out.push_back(i);
            }
        }
        n = 0;
    };

    heads.for_each_subset([&](AtomSet s) {
        cand[n++] = s.bits();
        if (n == kBatch) {
            flush();
        }
    });
    if (n > 0) {
        flush();
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interpretation> stable_models(const Program& p, const Limits& limits) {
    const AtomSet at = p.atoms();
    if (at.size() > limits.max_atoms) {
        throw CapacityError("program has " + std::to_string(at.size()) + " atoms; the stable-model cap is " +
                            std::to_string(limits.max_atoms));
    }
    return stable_models(flatten(p), limits);
}

bool Placement::to_top(std::size_t rule) const {
    switch (kind) {
    case Kind::AllBottom: return false;
    case Kind::AllTop: return true;
    case Kind::Explicit: return std::find(top.begin(), top.end(), rule) != top.end();
    }
    return false;
}

ObjectiveSplit objective_split(const Program& p, AtomSet u, const Placement& placement) {
    ObjectiveSplit s;
    s.u = u;
    std::vector<Rule> bottom;
    std::vector<Rule> top;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Rule& r = p[k];
        const bool cond_i = r.atoms().subset_of(u);
        const bool cond_ii = !r.head_set().intersects(u);
        if (!cond_i && !cond_ii) {
            throw NotASplittingSet(k, p.to_string(r));
        }
        if (cond_i && (!cond_ii || !placement.to_top(k))) {
            bottom.push_back(r);
            s.bottom_rules.push_back(k);
        } else {
            top.push_back(r);
            s.top_rules.push_back(k);
        }
    }
    s.bottom = p.with_rules(std::move(bottom));
    s.top = p.with_rules(std::move(top));
    return s;
}

bool is_splitting_set(const Program& p, AtomSet u) {
    return std::all_of(p.rules().begin(), p.rules().end(),
                       [&](const Rule& r) { return r.atoms().subset_of(u) || !r.head_set().intersects(u); });
}

Program bottom_evaluation(const Program& top, AtomSet u, Interpretation i_b) {
    std::vector<Rule> rules = top.rules();
    for (auto& r : rules) {
        for (auto& l : r.body) {
            auto* o = std::get_if<ObjectiveLiteral>(&l);
            if (o != nullptr && o->base == Base::Atom && u.contains(o->atom)) {
                *o = i_b.contains(o->atom) ? ObjectiveLiteral::top(o->negations) : ObjectiveLiteral::bottom(o->negations);
            }
        }
    }
    return top.with_rules(std::move(rules));
}

std::vector<std::pair<Interpretation, Interpretation>> objective_solutions(const Program& p, AtomSet u,
                                                                           const Placement& placement,
                                                                           const Limits& limits) {
    const auto split = objective_split(p, u, placement);
    std::vector<std::pair<Interpretation, Interpretation>> out;
    for (auto ib : stable_models(split.bottom, limits)) {
        for (auto it : stable_models(bottom_evaluation(split.top, u, ib), limits)) {
            out.emplace_back(ib, it);
        }
    }
    return out;
}

} // namespace elp
