#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elp/errors.hpp"
#include "elp/generator.hpp"
#include "elp/modal.hpp"
#include "elp/splitting.hpp"

using namespace elp;

namespace {

const char* kCollege =
    "eligible(X) :- high(X).\n"
    "eligible(X) :- minority(X), fair(X).\n"
    "-eligible(X) :- -fair(X), -high(X).\n"
    "fair(mike) | high(mike).\n"
    "interview(X) :- not K eligible(X), not K -eligible(X).\n";

AtomSet college_u(const Program& p) {
    return p.table().parse_set(
        "high(mike),fair(mike),minority(mike),eligible(mike),-high(mike),-fair(mike),-eligible(mike)");
}

} // namespace

TEST_CASE("modal dependence") {
    const auto p4 = load_program("a | b. c :- K a.");
    const auto d = dep_relation(p4);
    REQUIRE(d.size() == 1);
    CHECK(p4.table().text(d[0].first) == "c");
    CHECK(p4.table().text(d[0].second) == "a");
    CHECK(dep_relation(load_program("a :- not b. b :- not a.")).empty());

    const auto c = load_program(kCollege);
    const auto dc = dep_relation(c);
    const auto interview = c.table().id("interview(mike)");
    CHECK(std::count(dc.begin(), dc.end(), std::pair{interview, c.table().id("eligible(mike)")}) == 1);
    CHECK(std::count(dc.begin(), dc.end(), std::pair{interview, c.table().id("-eligible(mike)")}) == 1);
}

TEST_CASE("college split") {
    const auto p = load_program(kCollege);
    const auto u = college_u(p);
    const auto s = epistemic_split(p, u);
    // rules 0-3 and the consistency constraints are in the bottom; the interview rule is the top
    CHECK(s.top_rules == std::vector<std::size_t>{4});
    const auto& t = p.table();
    const WorldView wb{t.parse_set("fair(mike)"), t.parse_set("high(mike),eligible(mike)")};
    CHECK(top_simplification(s, wb).to_string() == "interview(mike) :- not #false, not #false.\n");
    const auto sol = epistemic_solutions(p, u, Semantics::G91);
    REQUIRE(sol.size() == 1);
    CHECK(sol[0].wv_b == wb);
    CHECK(sol[0].combined() == WorldView{t.parse_set("fair(mike),interview(mike)"),
                                         t.parse_set("high(mike),eligible(mike),interview(mike)")});
    CHECK(check_epistemic_splitting(p, u, Semantics::G91).holds());
}

TEST_CASE("objective body atoms block a split") {
    const auto p = load_program("p | q. s :- p, K q.");
    try {
        epistemic_split(p, p.table().parse_set("p,q"));
        FAIL("expected an error");
    } catch (const NotAnEpistemicSplittingSet& e) {
        CHECK(e.rule_index == 1);
    }
    CHECK_FALSE(is_epistemic_splitting_set(p, p.table().parse_set("p,q")));
}

TEST_CASE("trivial and enumerated splitting sets") {
    const auto p4 = load_program("a | b. c :- K a.");
    const auto all = epistemic_split(p4, p4.atoms());
    CHECK(all.top.size() == 0);
    const auto sets = enumerate_epistemic_splitting_sets(p4);
    CHECK(std::count(sets.begin(), sets.end(), p4.table().parse_set("a,b")) == 1);
    CHECK(enumerate_epistemic_splitting_sets(load_program("a :- b.")).empty());
}

TEST_CASE("top simplification without a bottom view") {
    const auto p5 = load_program("a | b. c :- K a. :- not c.");
    const auto u = p5.table().parse_set("a,b");
    const auto s = epistemic_split(p5, u);
    const auto& t = p5.table();
    const auto e = top_simplification(s, WorldView{t.parse_set("a"), t.parse_set("b")});
    CHECK(e.to_string() == "c :- #false.\n:- not c.\n");
    CHECK(epistemic_solutions(p5, u, Semantics::G91).empty());
}

TEST_CASE("splitting verdicts on the counterexamples") {
    const auto p5 = load_program("a | b. c :- K a. :- not c.");
    const auto u5 = p5.table().parse_set("a,b");
    CHECK(check_epistemic_splitting(p5, u5, Semantics::G91).holds());
    const auto g11 = check_epistemic_splitting(p5, u5, Semantics::G11);
    CHECK_FALSE(g11.holds());
    CHECK(g11.lhs == WorldViewSet{WorldView{p5.table().parse_set("a,c")}});
    CHECK(g11.rhs.empty());

    const auto p6 = load_program("a | b. :- not K a.");
    const auto u6 = p6.table().parse_set("a,b");
    const auto k15 = check_epistemic_splitting(p6, u6, Semantics::K15);
    CHECK_FALSE(k15.holds());
    CHECK(k15.lhs == WorldViewSet{WorldView{p6.table().parse_set("a")}});
    CHECK(k15.rhs.empty());
    // with the constraint in the bottom both sides coincide
    CHECK(check_epistemic_splitting(p6, u6, Semantics::K15, Placement::all_bottom()).holds());
    CHECK_FALSE(check_epistemic_splitting(p6, u6, Semantics::K15, Placement::all_top()).holds());
}

TEST_CASE("subjective constraint monotonicity") {
    const auto p = load_program("a | b.");
    const auto q = extend(p, ":- not K a.");
    const auto base = rebase(p, q.table_ptr());
    for (auto s : {Semantics::K15, Semantics::S17, Semantics::F15}) {
        CHECK_FALSE(check_constraint_monotonicity(base, q[1], s).holds());
    }
    for (auto s : {Semantics::G91, Semantics::G11, Semantics::C19}) {
        CHECK(check_constraint_monotonicity(base, q[1], s).holds());
    }
    CHECK_THROWS_AS(check_constraint_monotonicity(base, base[0], Semantics::G91), std::invalid_argument);
}

TEST_CASE("report JSON") {
    const auto p5 = load_program("a | b. c :- K a. :- not c.");
    auto rep = check_epistemic_splitting(p5, p5.table().parse_set("a,b"), Semantics::G11);
    rep.seed = 5;
    const auto j = to_json(rep);
    CHECK(j["property"] == "epistemic_splitting");
    CHECK(j["semantics"] == "G11");
    CHECK(j["verdict"] == "violated");
    CHECK(j["U"] == nlohmann::json::array({"a", "b"}));
    CHECK(j["lhs"] == nlohmann::json::parse(R"([[["a","c"]]])"));
    CHECK(j["rhs"] == nlohmann::json::array());
    CHECK(j["seed"] == 5);
    CHECK(j["program"].get<std::string>().find("c :- K a.") != std::string::npos);
}

TEST_CASE("stratification of the extended college program") {
    const auto p = load_program(std::string(kCollege) + "appointment(X) :- K interview(X).\n");
    const auto s = stratify(p);
    const auto& t = p.table();
    for (auto a : {"high(mike)", "fair(mike)", "minority(mike)", "eligible(mike)"}) {
        CHECK(s.lambda[t.id(a)] == 0);
    }
    CHECK(s.lambda[t.id("interview(mike)")] == 1);
    CHECK(s.lambda[t.id("appointment(mike)")] == 2);
    const auto w = layered_world_view(p, Semantics::G91);
    REQUIRE(w);
    for (auto i : *w) {
        CHECK(i.contains(t.id("appointment(mike)")));
    }
    CHECK(w->size() == 2);
}

TEST_CASE("stratification failures and trivial layering") {
    CHECK_THROWS_AS(stratify(load_program("a :- K a.")), NotStratified);
    CHECK_THROWS_AS(stratify(load_program("a :- K b. b :- K a.")), NotStratified);
    const auto obj = stratify(load_program("a :- not b. b :- not a. c :- a."));
    for (int l : obj.lambda) {
        CHECK(l == 0);
    }
    CHECK_FALSE(layered_world_view(load_program("a :- not a. b :- K a."), Semantics::G91));
}

TEST_CASE("G91 and C19 satisfy splitting under every placement") {
    ProgramGenerator gen(43);
    GeneratorParams params;
    params.p_m = 0.15;
    for (int n = 0; n < 150; ++n) {
        const auto p = gen.random_program(params);
        auto sets = enumerate_epistemic_splitting_sets(p);
        sets.push_back(p.atoms());
        for (auto u : sets) {
            for (auto s : {Semantics::G91, Semantics::C19}) {
                const auto bottom = check_epistemic_splitting(p, u, s, Placement::all_bottom());
                const auto top = check_epistemic_splitting(p, u, s, Placement::all_top());
                CHECK_MESSAGE(bottom.holds(), p.to_string());
                CHECK(bottom.verdict == top.verdict);
            }
        }
    }
}

TEST_CASE("splitting implies monotonicity for the same semantics") {
    ProgramGenerator gen(47);
    GeneratorParams params;
    params.atoms = 3;
    for (int n = 0; n < 150; ++n) {
        const auto p = gen.random_program(params);
        const Rule r = gen.subjective_constraint(p, params);
        const auto q = p.with_rule(r);
        for (auto s : {Semantics::G91, Semantics::G11, Semantics::K15, Semantics::C19}) {
            // the constraint over all atoms is a flexible rule of the full split
            if (check_epistemic_splitting(q, q.atoms() | r.atoms(), s).holds()) {
                CHECK(check_constraint_monotonicity(p, r, s).holds());
            }
        }
    }
}
