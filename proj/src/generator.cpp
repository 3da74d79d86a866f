#include "elp/generator.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace elp {

AtomTablePtr letter_table(std::size_t n) {
    if (n > 26) {
        throw std::invalid_argument("letter tables hold at most 26 atoms");
    }
    static std::map<std::size_t, AtomTablePtr> cache;
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back(Atom{std::string(1, static_cast<char>('a' + i)), {}, false});
    }
    auto t = std::make_shared<const AtomTable>(std::move(atoms));
    cache.emplace(n, t);
    return t;
}

bool ProgramGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::size_t ProgramGenerator::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

ObjectiveLiteral ProgramGenerator::objective_literal(AtomId a, const GeneratorParams& params) {
    const double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    if (r < params.p_not_not) {
        return ObjectiveLiteral::of(a, 2);
    }
    if (r < params.p_not_not + params.p_not) {
        return ObjectiveLiteral::of(a, 1);
    }
    return ObjectiveLiteral::of(a);
}

SubjectiveLiteral ProgramGenerator::subjective_literal(AtomId a, const GeneratorParams& params) {
    SubjectiveLiteral l;
    l.core.modality = coin(params.p_m) ? Modality::M : Modality::K;
    l.core.inner = ObjectiveLiteral::of(a, coin(params.p_inner_not) ? 1 : 0);
    l.negated = coin(params.p_sub_negated);
    return l;
}

Program ProgramGenerator::random_program(const GeneratorParams& params) {
    const auto table = letter_table(params.atoms);
    const std::size_t n = params.atoms;
    std::vector<Rule> rules;
    const std::size_t count = uniform(1, params.max_rules);
    for (std::size_t k = 0; k < count; ++k) {
        Rule r;
        if (!coin(params.p_constraint)) {
            const std::size_t h = uniform(1, std::min(params.max_head, n));
            AtomSet head;
            while (head.size() < h) {
                head.insert(static_cast<AtomId>(uniform(0, n - 1)));
            }
            head.for_each([&](AtomId a) { r.head.push_back(a); });
        }
        const std::size_t b = uniform(r.head.empty() ? 1 : 0, params.max_body);
        for (std::size_t i = 0; i < b; ++i) {
            const auto a = static_cast<AtomId>(uniform(0, n - 1));
            if (coin(params.p_subjective)) {
                r.body.emplace_back(subjective_literal(a, params));
            } else {
                r.body.emplace_back(objective_literal(a, params));
            }
        }
        rules.push_back(std::move(r));
    }
    return Program(table, std::move(rules));
}

Program ProgramGenerator::objective_program(GeneratorParams params) {
    params.p_subjective = 0.0;
    return random_program(params);
}

Program ProgramGenerator::stratified_program(const GeneratorParams& params, std::size_t max_layers) {
    const auto table = letter_table(params.atoms);
    const std::size_t n = params.atoms;
    std::vector<std::size_t> layer(n);
    for (auto& l : layer) {
        l = uniform(0, max_layers - 1);
    }
    auto pick = [&](auto pred) -> std::optional<AtomId> {
        std::vector<AtomId> pool;
        for (std::size_t a = 0; a < n; ++a) {
            if (pred(layer[a])) {
                pool.push_back(static_cast<AtomId>(a));
            }
        }
        if (pool.empty()) {
            return std::nullopt;
        }
        return pool[uniform(0, pool.size() - 1)];
    };

    std::vector<Rule> rules;
    const std::size_t count = uniform(1, params.max_rules);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t level = layer[uniform(0, n - 1)];
        const auto same = [&](std::size_t l) { return l == level; };
        const auto lower = [&](std::size_t l) { return l < level; };
        Rule r;
        if (!coin(params.p_constraint)) {
            const std::size_t h = uniform(1, params.max_head);
            AtomSet head;
            for (std::size_t i = 0; i < h; ++i) {
                head.insert(*pick(same));
            }
            head.for_each([&](AtomId a) { r.head.push_back(a); });
        }
        const std::size_t b = uniform(r.head.empty() ? 1 : 0, params.max_body);
        for (std::size_t i = 0; i < b; ++i) {
            std::optional<AtomId> below;
            if (coin(params.p_subjective)) {
                below = pick(lower);
            }
            if (below) {
                r.body.emplace_back(subjective_literal(*below, params));
            } else {
                r.body.emplace_back(objective_literal(*pick(same), params));
            }
        }
        rules.push_back(std::move(r));
    }
    return Program(table, std::move(rules));
}

Rule ProgramGenerator::subjective_constraint(const Program& p, const GeneratorParams& params) {
    const std::size_t n = p.table().size();
    Rule r;
    const std::size_t b = uniform(1, 2);
    for (std::size_t i = 0; i < b; ++i) {
        r.body.emplace_back(subjective_literal(static_cast<AtomId>(uniform(0, n - 1)), params));
    }
    return r;
}

} // namespace elp
