#pragma once

#include <cstdint>
#include <random>

#include "elp/program.hpp"

namespace elp {

struct GeneratorParams {
    std::size_t atoms = 4;      // table size; atoms are named a, b, c, ...
    std::size_t max_rules = 5;  // rule count is uniform in [1, max_rules]
    std::size_t max_head = 2;
    std::size_t max_body = 3;
    double p_constraint = 0.2;  // empty head
    double p_subjective = 0.35; // per body literal
    double p_m = 0.0;           // M instead of K
    double p_sub_negated = 0.4; // outer `not` on a subjective literal
    double p_inner_not = 0.3;   // `K not a`
    double p_not = 0.35;        // `not a` in objective position
    double p_not_not = 0.05;    // `not not a`
};

/// Deterministic random programs for the property harness.
class ProgramGenerator {
public:
    explicit ProgramGenerator(std::uint64_t seed) : rng_(seed) {}

    Program random_program(const GeneratorParams& params);
    /// No subjective literals.
    Program objective_program(GeneratorParams params);
    /// Atoms get random layers; subjective literals only refer to atoms of lower layers.
    Program stratified_program(const GeneratorParams& params, std::size_t max_layers = 3);
    /// A constraint with one or two subjective literals over the table of `p`.
    Rule subjective_constraint(const Program& p, const GeneratorParams& params);

    std::mt19937_64& engine() { return rng_; }

private:
    bool coin(double p);
    std::size_t uniform(std::size_t lo, std::size_t hi);
    ObjectiveLiteral objective_literal(AtomId a, const GeneratorParams& params);
    SubjectiveLiteral subjective_literal(AtomId a, const GeneratorParams& params);

    std::mt19937_64 rng_;
};

/// Table with atoms a, b, c, ... (n ≤ 26).
AtomTablePtr letter_table(std::size_t n);

} // namespace elp
