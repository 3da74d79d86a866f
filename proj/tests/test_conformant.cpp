#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "elp/conformant.hpp"

using namespace elp;

namespace {
Program lamps() { return load_program_file(std::filesystem::path(ELP_FIXTURE_DIR) / "lamps.elp"); }
} // namespace

TEST_CASE("toggling the plugged lamp is a conformant plan") {
    const auto v = check_plan(lamps(), "light", {"toggle(l1)"}, Semantics::G91);
    REQUIRE(v.conformant());
    const auto& t = v.program.table();
    for (const auto& w : v.views) {
        for (auto i : w) {
            CHECK(i.contains(t.id("light")));
        }
    }
}

TEST_CASE("toggling the uncertain lamp is not") {
    CHECK_FALSE(check_plan(lamps(), "light", {"toggle(l2)"}, Semantics::G91).conformant());
    CHECK_FALSE(check_plan(lamps(), "light", {}, Semantics::C19).conformant());
}

TEST_CASE("all plans are checked smallest first") {
    const auto v = check_plans(lamps(), "light", {"toggle(l1)", "toggle(l2)"}, Semantics::G91);
    REQUIRE(v.size() == 4);
    CHECK(v[0].actions.empty());
    CHECK(v[3].actions.size() == 2);
    std::size_t ok = 0;
    for (const auto& x : v) {
        ok += x.conformant() ? 1 : 0;
    }
    CHECK(ok == 1);
}

TEST_CASE("generate-define-test leaves exactly one view") {
    const auto p = generate_define_test(lamps(), "light", {"toggle(l1)", "toggle(l2)"});
    const auto& t = p.table();
    const WorldView w0{t.parse_set("toggle(l1),plugged(l1),plugged(l2),light"),
                       t.parse_set("toggle(l1),plugged(l1),-plugged(l2),light")};
    CHECK(world_views(p, Semantics::G91) == WorldViewSet{w0});
    CHECK(world_views(p, Semantics::C19) == WorldViewSet{w0});
    // the domain rules only see actions through K
    CHECK(p.to_string().find("light :- K toggle(l1), plugged(l1).") != std::string::npos);
    CHECK(splitting_safe(Semantics::G91));
    CHECK_FALSE(splitting_safe(Semantics::K15));
}
