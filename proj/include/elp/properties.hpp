#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "elp/program.hpp"
#include "elp/semantics.hpp"
#include "elp/splitting.hpp"

namespace elp {

struct Fixture {
    std::string name; // file name, e.g. "ce1a.elp"
    Program program;
    std::string provenance;
    std::map<Semantics, WorldViewSet> expected;
};

/// A fixture plus a subjective constraint with expected verdicts per semantics.
struct MonotonicityCase {
    std::string fixture;
    std::string constraint; // source text of the constraint
    std::string provenance;
    std::map<Semantics, Verdict> expected;
};

struct SplittingCase {
    std::string fixture;
    std::vector<std::string> u;
    std::string provenance;
    std::map<Semantics, Verdict> expected;
};

struct Corpus {
    std::vector<Fixture> fixtures;
    std::vector<MonotonicityCase> monotonicity;
    std::vector<SplittingCase> splitting;

    const Fixture& fixture(const std::string& name) const; // throws std::out_of_range
};

/// Reads every *.elp file of `dir` and the expectations in `dir`/expectations.json.
Corpus load_corpus(const std::filesystem::path& dir);

/// Program of `fixture` with the constraint parsed over an extended table, and that constraint.
std::pair<Program, Rule> monotonicity_instance(const Corpus& corpus, const MonotonicityCase& c);

struct FixtureMismatch {
    std::string what; // fixture, case and semantics
    std::string expected;
    std::string actual;
};

/// Checks every fixture expectation and every listed monotonicity and splitting verdict.
std::vector<FixtureMismatch> verify_corpus(const Corpus& corpus, const std::vector<Semantics>& semantics,
                                           const SolveOptions& opts = {});

enum class Row { SupraS5, SupraAsp, Monotonicity, Splitting, Foundedness };
inline constexpr std::array<Row, 5> kAllRows{Row::SupraS5, Row::SupraAsp, Row::Monotonicity, Row::Splitting,
                                             Row::Foundedness};
std::string_view label(Row r);

enum class CellState { Holds, Violated, Untested };

struct MatrixCell {
    CellState state = CellState::Untested;
    std::size_t checks = 0;
    std::size_t skipped = 0; // capacity or unsupported-literal skips
    std::vector<PropertyReport> witnesses; // first few violations
};

/// Published pattern: true where the property is known to hold.
bool expected_cell(Row r, Semantics s);

struct MatrixOptions {
    std::vector<Semantics> semantics{kAllSemantics.begin(), kAllSemantics.end()};
    std::uint64_t seed = 1;
    std::size_t count = 100;     // random instances per row
    std::size_t f15_count = 30;  // F15 runs on fewer, smaller programs
    std::size_t max_witnesses = 3;
    SolveOptions solve;
};

struct PropertyMatrix {
    std::vector<Semantics> columns;
    std::map<Row, std::map<Semantics, MatrixCell>> cells;
    std::vector<FixtureMismatch> fixture_failures;
    std::uint64_t seed = 0;

    const MatrixCell& at(Row r, Semantics s) const { return cells.at(r).at(s); }
    /// The four published rows match: checkmarks hold, blanks are violated with a witness.
    bool matches_expected() const;
};

/// Verifies the corpus first; if any expectation fails the matrix is returned with
/// fixture_failures set and no cells evaluated.
PropertyMatrix run_property_matrix(const Corpus& corpus, const MatrixOptions& opts);

std::string render_text(const PropertyMatrix& m);
nlohmann::json to_json(const PropertyMatrix& m);

/// Seed of the i-th random instance of a row; identical across semantics.
std::uint64_t instance_seed(std::uint64_t base, Row r, std::size_t i);

} // namespace elp
