#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elp/modal.hpp"
#include "elp/program.hpp"

using namespace elp;

TEST_CASE("K and M quantify over the view") {
    const auto p = load_program(":- K a.\n:- M a.\n:- K not b.\n:- not M b.\n");
    const auto& t = p.table();
    const WorldView w{t.parse_set("a"), t.parse_set("")};
    const auto lit = [&](std::size_t r) { return std::get<SubjectiveLiteral>(p[r].body[0]); };
    CHECK_FALSE(holds(w, lit(0)));
    CHECK(holds(w, lit(1)));
    CHECK(holds(w, lit(2)));
    CHECK(holds(w, lit(3)));
}

TEST_CASE("modal satisfaction and S5 models") {
    const auto p = load_program("a | b.\nc :- K a.\n");
    const auto& t = p.table();
    CHECK(is_s5_model(WorldView{t.parse_set("a"), t.parse_set("b")}, p));
    CHECK_FALSE(is_s5_model(WorldView{t.parse_set("a")}, p));
    CHECK(is_s5_model(WorldView{t.parse_set("a,c")}, p));
    CHECK_FALSE(modal_satisfies(WorldView{t.parse_set("a")}, t.parse_set("a"), p[1]));
}

TEST_CASE("subjective reduct keeps the outer negation") {
    const auto p = load_program("interview :- not K eligible, not K -eligible.\nx :- K y, K eligible.\n");
    const auto& t = p.table();
    const WorldView w{t.parse_set("eligible"), t.parse_set("")};
    const auto u = t.parse_set("eligible,-eligible");
    const auto r = subjective_reduct(p, w, u);
    CHECK(r.to_string() == "interview :- not #false, not #false.\nx :- K y, #false.\n:- eligible, -eligible.\n");
    CHECK(subjective_reduct(p, w).to_string() == "interview :- not #false, not #false.\nx :- #false, #false.\n:- eligible, -eligible.\n");
}

TEST_CASE("project and combine") {
    const auto p = load_program("a. c. d.");
    const auto& t = p.table();
    const WorldView b{t.parse_set("a")};
    const WorldView top{t.parse_set("c"), t.parse_set("d")};
    CHECK(combine(b, top) == WorldView{t.parse_set("a,c"), t.parse_set("a,d")});
    CHECK(combine(top, WorldView{AtomSet{}}) == top);
    CHECK(project(combine(b, top), t.parse_set("a")) == b);
    CHECK(format(combine(b, top), t) == "[{a,c}, {a,d}]");
    const auto j = to_json(combine(b, top), t);
    CHECK(world_view_from_json(j, t) == combine(b, top));
}
