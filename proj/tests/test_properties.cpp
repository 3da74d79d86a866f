#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elp/properties.hpp"

using namespace elp;

namespace {
const Corpus& corpus() {
    static const Corpus c = load_corpus(ELP_FIXTURE_DIR);
    return c;
}
} // namespace

TEST_CASE("corpus loads with expectations") {
    const auto& c = corpus();
    CHECK(c.fixtures.size() >= 10);
    for (const auto& f : c.fixtures) {
        if (!f.expected.empty()) {
            CHECK_FALSE(f.provenance.empty());
        }
    }
    CHECK_FALSE(c.monotonicity.empty());
    CHECK_FALSE(c.splitting.empty());
    CHECK_THROWS_AS(c.fixture("missing.elp"), std::out_of_range);
}

TEST_CASE("every fixture expectation holds") {
    const auto bad = verify_corpus(corpus(), {kAllSemantics.begin(), kAllSemantics.end()});
    for (const auto& b : bad) {
        INFO(b.what, ": expected ", b.expected, ", got ", b.actual);
        CHECK(false);
    }
}

TEST_CASE("small matrix reproduces the published pattern") {
    MatrixOptions o;
    o.count = 40;
    o.f15_count = 10;
    const auto m = run_property_matrix(corpus(), o);
    REQUIRE(m.fixture_failures.empty());
    CHECK(m.matches_expected());
    for (auto r : {Row::SupraS5, Row::SupraAsp, Row::Monotonicity, Row::Splitting}) {
        for (auto s : kAllSemantics) {
            const auto& cell = m.at(r, s);
            CHECK(cell.checks > 0);
            if (!expected_cell(r, s)) {
                CHECK_FALSE(cell.witnesses.empty());
            }
        }
    }
    const auto text = render_text(m);
    CHECK(text.find("published pattern: reproduced") != std::string::npos);
    const auto j = to_json(m);
    CHECK(j["matches_published"] == true);
    CHECK(j["rows"]["Epistemic splitting"]["G11"]["state"] == "violated");
}

TEST_CASE("matrix output is deterministic for a seed") {
    MatrixOptions o;
    o.count = 15;
    o.f15_count = 5;
    o.seed = 77;
    CHECK(to_json(run_property_matrix(corpus(), o)).dump() == to_json(run_property_matrix(corpus(), o)).dump());
}

TEST_CASE("instance seeds depend on row and index only") {
    CHECK(instance_seed(1, Row::Splitting, 3) == instance_seed(1, Row::Splitting, 3));
    CHECK(instance_seed(1, Row::Splitting, 3) != instance_seed(1, Row::Splitting, 4));
    CHECK(instance_seed(1, Row::Splitting, 3) != instance_seed(1, Row::SupraS5, 3));
    CHECK(instance_seed(1, Row::Splitting, 3) != instance_seed(2, Row::Splitting, 3));
}
