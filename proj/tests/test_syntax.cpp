#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elp/errors.hpp"
#include "elp/program.hpp"
#include "elp/syntax.hpp"

using namespace elp;

TEST_CASE("atom sets order like sorted id lists") {
    const AtomSet a{0b001};  // {0}
    const AtomSet ab{0b011}; // {0,1}
    const AtomSet b{0b010};  // {1}
    const AtomSet ac{0b101}; // {0,2}
    CHECK(AtomSet{} < a);
    CHECK(a < ab);
    CHECK(ab < ac);
    CHECK(ac < b);
    int n = 0;
    AtomSet{0b111}.for_each_subset([&](AtomSet) { ++n; });
    CHECK(n == 8);
    CHECK(ac.first_id() == 0);
    CHECK((ab - a) == b);
}

TEST_CASE("rules, comments and both disjunction separators parse") {
    const auto p = ast::parse_program("% comment\na | b.\nc v d :- not a, not not b. % trailing\n:- K a, not M -c.\n");
    REQUIRE(p.rules.size() == 3);
    CHECK(p.rules[0].head.size() == 2);
    CHECK(p.rules[1].head.size() == 2);
    CHECK(p.rules[1].body.size() == 2);
    CHECK(p.rules[2].head.empty());
    CHECK(ast::to_string(p.rules[1]) == "c | d :- not a, not not b.");
    CHECK(ast::to_string(p.rules[2]) == ":- K a, not M -c.");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(ast::parse_program("a :- K ."), ParseError);
    CHECK_THROWS_AS(ast::parse_program("a :- K K b."), ParseError);
    CHECK_THROWS_AS(ast::parse_program("a :- not not not b."), ParseError);
    CHECK_THROWS_AS(ast::parse_program("a :- K #true."), ParseError);
    CHECK_THROWS_AS(ast::parse_program("a :- not not K b."), ParseError);
    CHECK_THROWS_AS(ast::parse_program("a :- b"), ParseError);
    try {
        ast::parse_program("a.\nb :- ,.");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("grounding instantiates variables over all constants") {
    const auto g = ast::ground(ast::parse_program("p(a). p(b). q(X) :- p(X), not r(X)."));
    CHECK(g.rules.size() == 4);
    CHECK(ast::to_string(g.rules[2]) == "q(a) :- p(a), not r(a).");
    CHECK_THROWS_AS(ast::ground(ast::parse_program("q(X) :- p(X).")), GroundingError);
}

TEST_CASE("atom ids follow the text order and strong negation is normalized") {
    const auto p = load_program("b :- -a. a | c.");
    const auto& t = p.table();
    CHECK(t.text(0) == "-a");
    CHECK(t.text(1) == "a");
    CHECK(t.text(2) == "b");
    CHECK(t.text(3) == "c");
    // the consistency constraint for a / -a is added
    CHECK(p.to_string().find(":- a, -a.") != std::string::npos);
}

TEST_CASE("programs print and reload to the same rules") {
    const auto p = load_program("a | b :- not c, K d.\n:- not K a.\ne :- M not b, not not a.\n");
    const auto q = load_program(p.to_string());
    CHECK(p.to_string() == q.to_string());
    CHECK(p.cores().size() == 3);
    CHECK(p.has_m());
}

TEST_CASE("M elimination rewrites into K") {
    const auto p = load_program("a :- M b.\nc :- not M not b.\n");
    const auto q = eliminate_m(p);
    CHECK_FALSE(q.has_m());
    CHECK(q.to_string() == "a :- not K not b.\nc :- K not not b.\n");
}

TEST_CASE("extend merges tables and keeps the original rules first") {
    const auto p = load_program("a | b.");
    const auto q = extend(p, ":- not K c.");
    CHECK(q.size() == 2);
    CHECK(q.table().size() == 3);
    CHECK(q[1].is_subjective_constraint());
    const auto r = rebase(p, q.table_ptr());
    CHECK(r.to_string() == "a | b.\n");
}

TEST_CASE("literal negation collapses beyond two") {
    const auto l = ObjectiveLiteral::of(0, 2).negated();
    CHECK(l.negations == 1);
    CHECK(ObjectiveLiteral::of(0).negated().negations == 1);
    CHECK(ObjectiveLiteral::of(0, 1).negated().negations == 2);
}
