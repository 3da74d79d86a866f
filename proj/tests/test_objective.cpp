#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "elp/errors.hpp"
#include "elp/generator.hpp"
#include "elp/objective.hpp"
#include "elp/semantics.hpp"
#include "oracle.hpp"

using namespace elp;

namespace {

std::vector<AtomSet> sets(const Program& p, std::initializer_list<const char*> lists) {
    std::vector<AtomSet> out;
    for (auto l : lists) {
        out.push_back(p.table().parse_set(l));
    }
    std::sort(out.begin(), out.end());
    return out;
}

const char* kTwoChoices = "a :- not b. b :- not a. c | d :- not a. d :- a, not b.";

} // namespace

TEST_CASE("stable models of the two-part example") {
    const auto p = load_program(kTwoChoices);
    CHECK(stable_models(p) == sets(p, {"a,d", "b,c", "b,d"}));
    CHECK(oracle::stable_models(p) == stable_models(p));
}

TEST_CASE("small stable model cases") {
    CHECK(stable_models(load_program("a :- not a.")).empty());
    const auto tau = load_program("a :- not not a.");
    CHECK(stable_models(tau) == sets(tau, {"", "a"}));
    const auto disj = load_program("a | b. a :- b. b :- a.");
    CHECK(stable_models(disj) == sets(disj, {"a,b"}));
    const auto c = load_program("a | b. :- a.");
    CHECK(stable_models(c) == sets(c, {"b"}));
    CHECK(stable_models(load_program(":- #true.")).empty());
    CHECK(stable_models(load_program("a :- #false.")) == std::vector<AtomSet>{AtomSet{}});
}

TEST_CASE("reduct replaces negated literals by constants") {
    const auto p = load_program(kTwoChoices);
    const auto r = objective_reduct(p, p.table().parse_set("a"));
    CHECK(canonicalize(r).to_string() == "a.\nd :- a.\n");
}

TEST_CASE("splitting the two-part example at {a,b}") {
    const auto p = load_program(kTwoChoices);
    const auto u = p.table().parse_set("a,b");
    const auto s = objective_split(p, u);
    CHECK(s.bottom_rules == std::vector<std::size_t>{0, 1});
    CHECK(s.top_rules == std::vector<std::size_t>{2, 3});
    const auto e = bottom_evaluation(s.top, u, p.table().parse_set("a"));
    CHECK(e.to_string() == "c | d :- not #true.\nd :- #true, not #false.\n");
    const auto sol = objective_solutions(p, u);
    REQUIRE(sol.size() == 3);
    CHECK(p.table().format(sol[0].first) == "{a}");
    CHECK(p.table().format(sol[0].second) == "{d}");
    CHECK_THROWS_AS(objective_split(p, p.table().parse_set("d")), NotASplittingSet);
    CHECK(is_splitting_set(p, AtomSet{}));
    CHECK(is_splitting_set(p, p.atoms()));
}

TEST_CASE("kernel-backed stable models agree with both oracles on random programs") {
    ProgramGenerator gen(7);
    GeneratorParams params;
    params.atoms = 5;
    params.max_rules = 6;
    for (int n = 0; n < 400; ++n) {
        const auto p = gen.objective_program(params);
        const auto fast = stable_models(p);
        CHECK(fast == oracle::stable_models(p));
        CHECK(fast == naive_stable_models(p, p.atoms()));
    }
}

TEST_CASE("composition of solutions equals the stable models") {
    ProgramGenerator gen(11);
    GeneratorParams params;
    params.atoms = 4;
    for (int n = 0; n < 200; ++n) {
        const auto p = gen.objective_program(params);
        const auto sm = oracle::stable_models(p);
        p.atoms().for_each_subset([&](AtomSet u) {
            if (!is_splitting_set(p, u)) {
                return;
            }
            std::vector<AtomSet> composed;
            for (const auto& [b, t] : objective_solutions(p, u)) {
                composed.push_back(b | t);
            }
            std::sort(composed.begin(), composed.end());
            CHECK(composed == sm);
        });
    }
}

TEST_CASE("atom cap raises a capacity error") {
    Limits small;
    small.max_atoms = 2;
    CHECK_THROWS_AS(stable_models(load_program("a | b | c."), small), CapacityError);
}
