#include "elp/modal.hpp"

#include <algorithm>

namespace elp {

bool holds(const WorldView& wv, const SubjectiveCore& core) {
    if (core.modality == Modality::K) {
        return std::all_of(wv.begin(), wv.end(), [&](Interpretation i) { return core.inner.eval(i); });
    }
    return std::any_of(wv.begin(), wv.end(), [&](Interpretation i) { return core.inner.eval(i); });
}

bool holds(const WorldView& wv, const SubjectiveLiteral& l) { return holds(wv, l.core) != l.negated; }

bool modal_satisfies(const WorldView& wv, Interpretation point, const Literal& l) {
    if (const auto* o = std::get_if<ObjectiveLiteral>(&l)) {
        return o->eval(point);
    }
    return holds(wv, std::get<SubjectiveLiteral>(l));
}

bool body_holds(const WorldView& wv, Interpretation point, const Rule& r) {
    return std::all_of(r.body.begin(), r.body.end(), [&](const Literal& l) { return modal_satisfies(wv, point, l); });
}

bool modal_satisfies(const WorldView& wv, Interpretation point, const Rule& r) {
    return r.head_set().intersects(point) || !body_holds(wv, point, r);
}

bool modal_satisfies(const WorldView& wv, Interpretation point, const Program& p) {
    return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) { return modal_satisfies(wv, point, r); });
}

bool is_s5_model(const WorldView& wv, const Program& p) {
    return std::all_of(wv.begin(), wv.end(), [&](Interpretation i) { return modal_satisfies(wv, i, p); });
}

Program subjective_reduct(const Program& p, const WorldView& wv, AtomSet u) {
    std::vector<Rule> rules = p.rules();
    for (auto& r : rules) {
        for (auto& l : r.body) {
            const auto* s = std::get_if<SubjectiveLiteral>(&l);
            if (s == nullptr || (!s->core.inner.is_constant() && !u.contains(s->core.inner.atom))) {
                continue;
            }
            const int negs = s->negated ? 1 : 0;
            l = holds(wv, s->core) ? ObjectiveLiteral::top(negs) : ObjectiveLiteral::bottom(negs);
        }
    }
    return p.with_rules(std::move(rules));
}

Program subjective_reduct(const Program& p, const WorldView& wv) { return subjective_reduct(p, wv, p.table().all()); }

} // namespace elp
