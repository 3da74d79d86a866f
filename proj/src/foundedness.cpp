#include "elp/foundedness.hpp"

#include <algorithm>
#include <string>

#include "elp/errors.hpp"
#include "elp/modal.hpp"

namespace elp {

bool UnfoundedSet::contains(const UnfoundedPair& p) const { return std::binary_search(pairs.begin(), pairs.end(), p); }

AtomSet positive_objective_atoms(const Rule& r) {
    AtomSet s;
    for (const auto& l : r.body) {
        const auto* o = std::get_if<ObjectiveLiteral>(&l);
        if (o && o->base == Base::Atom && o->negations == 0) {
            s.insert(o->atom);
        }
    }
    return s;
}

AtomSet positive_subjective_atoms(const Rule& r) {
    AtomSet s;
    for (const auto& l : r.body) {
        const auto* sl = std::get_if<SubjectiveLiteral>(&l);
        if (sl && !sl->negated && sl->core.inner.base == Base::Atom && sl->core.inner.negations == 0) {
            s.insert(sl->core.inner.atom);
        }
    }
    return s;
}

bool justifies(const Rule& r, const WorldView& wv, const UnfoundedPair& pair, AtomSet y) {
    const AtomSet head = r.head_set();
    return head.intersects(pair.x) && body_holds(wv, pair.i, r) && !positive_objective_atoms(r).intersects(pair.x) &&
           !(head - pair.x).intersects(pair.i) && !positive_subjective_atoms(r).intersects(y);
}

bool has_justifying_rule(const Program& p, const WorldView& wv, const UnfoundedPair& pair, AtomSet y) {
    return std::any_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) { return justifies(r, wv, pair, y); });
}

namespace {

struct Prepared {
    AtomSet head;
    AtomSet pos_obj;
    AtomSet pos_sub;
};

} // namespace

UnfoundedSet greatest_unfounded_set(const Program& p, const WorldView& wv, const Limits& limits) {
    const AtomSet at = p.atoms();
    if (at.size() > limits.max_atoms) {
        throw CapacityError("unfounded-set search over " + std::to_string(at.size()) + " atoms exceeds the cap");
    }
    const std::size_t per_point = std::size_t{1} << at.size();
    if (per_point * wv.size() > limits.max_unfounded_pairs) {
        throw CapacityError("unfounded-set search needs more than " + std::to_string(limits.max_unfounded_pairs) +
                            " candidate pairs");
    }

    // Rules whose body holds at each point; condition 1 does not depend on X or Y.
    std::vector<std::vector<Prepared>> active(wv.size());
    for (std::size_t k = 0; k < wv.size(); ++k) {
        for (const auto& r : p.rules()) {
            if (!r.head.empty() && body_holds(wv, wv.members()[k], r)) {
                active[k].push_back({r.head_set(), positive_objective_atoms(r), positive_subjective_atoms(r)});
            }
        }
    }

    std::vector<UnfoundedPair> alive;
    for (std::size_t k = 0; k < wv.size(); ++k) {
        const Interpretation i = wv.members()[k];
        at.for_each_subset([&](AtomSet x) {
            if (x.intersects(i)) {
                alive.push_back({x, i});
            }
        });
    }
    auto index_of = [&](Interpretation i) {
        return static_cast<std::size_t>(std::lower_bound(wv.begin(), wv.end(), i) - wv.begin());
    };

    auto union_x = [&] {
        AtomSet y;
        for (const auto& pr : alive) {
            y |= pr.x;
        }
        return y;
    };

    AtomSet y = union_x();
    while (true) {
        std::erase_if(alive, [&](const UnfoundedPair& pr) {
            for (const auto& r : active[index_of(pr.i)]) {
                if (r.head.intersects(pr.x) && !r.pos_obj.intersects(pr.x) && !(r.head - pr.x).intersects(pr.i) &&
                    !r.pos_sub.intersects(y)) {
                    return true;
                }
            }
            return false;
        });
        const AtomSet next = union_x();
        if (next == y) {
            break;
        }
        y = next;
    }
    std::sort(alive.begin(), alive.end());
    return UnfoundedSet{std::move(alive), y};
}

bool is_founded(const Program& p, const WorldView& wv, const Limits& limits) {
    return greatest_unfounded_set(p, wv, limits).empty();
}

} // namespace elp
