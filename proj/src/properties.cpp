#include "elp/properties.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "elp/errors.hpp"
#include "elp/generator.hpp"

namespace elp {

const Fixture& Corpus::fixture(const std::string& name) const {
    for (const auto& f : fixtures) {
        if (f.name == name) {
            return f;
        }
    }
    throw std::out_of_range("no fixture named " + name);
}

namespace {

Semantics semantics_key(const std::string& key) {
    auto s = parse_semantics(key);
    if (!s) {
        throw std::runtime_error("expectations: unknown semantics " + key);
    }
    return *s;
}

Verdict verdict_of(const std::string& text) {
    if (text == "holds") {
        return Verdict::Holds;
    }
    if (text == "violated") {
        return Verdict::Violated;
    }
    throw std::runtime_error("expectations: unknown verdict " + text);
}

std::map<Semantics, Verdict> verdicts(const nlohmann::json& j) {
    std::map<Semantics, Verdict> out;
    for (const auto& [k, v] : j.items()) {
        out.emplace(semantics_key(k), verdict_of(v.get<std::string>()));
    }
    return out;
}

} // namespace

Corpus load_corpus(const std::filesystem::path& dir) {
    Corpus c;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".elp") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        c.fixtures.push_back(Fixture{f.filename().string(), load_program_file(f), {}, {}});
    }

    const auto exp_path = dir / "expectations.json";
    if (!std::filesystem::exists(exp_path)) {
        return c;
    }
    std::ifstream in(exp_path);
    const auto j = nlohmann::json::parse(in);
    const auto fixtures = j.value("fixtures", nlohmann::json::object());
    for (const auto& [name, body] : fixtures.items()) {
        auto it = std::find_if(c.fixtures.begin(), c.fixtures.end(), [&](const Fixture& f) { return f.name == name; });
        if (it == c.fixtures.end()) {
            throw std::runtime_error("expectations: missing fixture file " + name);
        }
        it->provenance = body.value("provenance", "");
        for (const auto& [sem, views] : body.at("world_views").items()) {
            it->expected[semantics_key(sem)] = world_views_from_json(views, it->program.table());
        }
    }
    const auto mono = j.value("monotonicity", nlohmann::json::array());
    for (const auto& m : mono) {
        c.monotonicity.push_back(MonotonicityCase{m.at("fixture"), m.at("constraint"), m.value("provenance", ""),
                                                  verdicts(m.at("expected"))});
    }
    const auto splits = j.value("splitting", nlohmann::json::array());
    for (const auto& s : splits) {
        c.splitting.push_back(SplittingCase{s.at("fixture"), s.at("U").get<std::vector<std::string>>(),
                                            s.value("provenance", ""), verdicts(s.at("expected"))});
    }
    return c;
}

std::pair<Program, Rule> monotonicity_instance(const Corpus& corpus, const MonotonicityCase& c) {
    const Program& base = corpus.fixture(c.fixture).program;
    const Program extended = extend(base, c.constraint);
    const Rule r = extended[base.size()];
    if (!r.is_subjective_constraint()) {
        throw std::runtime_error("expectations: `" + c.constraint + "` is not a subjective constraint");
    }
    return {rebase(base, extended.table_ptr()), r};
}

std::vector<FixtureMismatch> verify_corpus(const Corpus& corpus, const std::vector<Semantics>& semantics,
                                           const SolveOptions& opts) {
    std::vector<FixtureMismatch> out;
    const auto wanted = [&](Semantics s) { return std::find(semantics.begin(), semantics.end(), s) != semantics.end(); };
    for (const auto& f : corpus.fixtures) {
        for (const auto& [s, expected] : f.expected) {
            if (!wanted(s)) {
                continue;
            }
            const auto actual = world_views(f.program, s, opts);
            if (actual != expected) {
                out.push_back({f.name + " under " + std::string(name(s)), format(expected, f.program.table()),
                               format(actual, f.program.table())});
            }
        }
    }
    for (const auto& c : corpus.monotonicity) {
        const auto [p, r] = monotonicity_instance(corpus, c);
        for (const auto& [s, expected] : c.expected) {
            if (!wanted(s)) {
                continue;
            }
            const auto rep = check_constraint_monotonicity(p, r, s, opts);
            if (rep.verdict != expected) {
                out.push_back({c.fixture + " + `" + c.constraint + "` monotonicity under " + std::string(name(s)),
                               std::string(name(expected)),
                               std::string(name(rep.verdict)) + " (with: " + format(rep.lhs, p.table()) +
                                   ", filtered: " + format(rep.rhs, p.table()) + ")"});
            }
        }
    }
    for (const auto& c : corpus.splitting) {
        const Program& p = corpus.fixture(c.fixture).program;
        AtomSet u;
        for (const auto& a : c.u) {
            u.insert(p.table().id(a));
        }
        for (const auto& [s, expected] : c.expected) {
            if (!wanted(s)) {
                continue;
            }
            const auto rep = check_epistemic_splitting(p, u, s, opts);
            if (rep.verdict != expected) {
                out.push_back({c.fixture + " split at " + p.table().format(u) + " under " + std::string(name(s)),
                               std::string(name(expected)),
                               std::string(name(rep.verdict)) + " (direct: " + format(rep.lhs, p.table()) +
                                   ", composed: " + format(rep.rhs, p.table()) + ")"});
            }
        }
    }
    return out;
}

std::string_view label(Row r) {
    switch (r) {
    case Row::SupraS5: return "Supra-S5";
    case Row::SupraAsp: return "Supra-ASP";
    case Row::Monotonicity: return "Subjective constraint monotonicity";
    case Row::Splitting: return "Epistemic splitting";
    case Row::Foundedness: return "Foundedness";
    }
    return "?";
}

bool expected_cell(Row r, Semantics s) {
    switch (r) {
    case Row::SupraS5:
    case Row::SupraAsp: return true;
    case Row::Monotonicity: return s == Semantics::G91 || s == Semantics::G11 || s == Semantics::C19;
    case Row::Splitting: return s == Semantics::G91 || s == Semantics::C19;
    case Row::Foundedness: return s == Semantics::C19;
    }
    return false;
}

bool PropertyMatrix::matches_expected() const {
    for (auto r : {Row::SupraS5, Row::SupraAsp, Row::Monotonicity, Row::Splitting}) {
        for (auto s : columns) {
            const auto& c = at(r, s);
            if (expected_cell(r, s) ? c.state != CellState::Holds
                                    : (c.state != CellState::Violated || c.witnesses.empty())) {
                return false;
            }
        }
    }
    return true;
}

std::uint64_t instance_seed(std::uint64_t base, Row r, std::size_t i) {
    // splitmix64 over (base, row, index)
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(r) * 1000003ULL + i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

GeneratorParams params_for(Semantics s) {
    GeneratorParams p;
    if (k_only(s)) {
        p.p_m = 0.0;
    } else {
        p.p_m = 0.15;
    }
    if (s == Semantics::F15) {
        p.atoms = 3;
        p.max_rules = 4;
    }
    return p;
}

class CellRecorder {
public:
    CellRecorder(MatrixCell& cell, std::size_t max_witnesses) : cell_(cell), max_(max_witnesses) {}

    template <class F>
    void run(F&& check, std::optional<std::uint64_t> seed = std::nullopt) {
        try {
            PropertyReport rep = check();
            rep.seed = seed;
            ++cell_.checks;
            if (!rep.holds()) {
                cell_.state = CellState::Violated;
                if (cell_.witnesses.size() < max_) {
                    cell_.witnesses.push_back(std::move(rep));
                }
            } else if (cell_.state == CellState::Untested) {
                cell_.state = CellState::Holds;
            }
        } catch (const CapacityError&) {
            ++cell_.skipped;
        } catch (const UnsupportedLiteral&) {
            ++cell_.skipped;
        }
    }

private:
    MatrixCell& cell_;
    std::size_t max_;
};

std::vector<AtomSet> splitting_sets_with_full(const Program& p) {
    auto sets = enumerate_epistemic_splitting_sets(p);
    if (!p.atoms().empty()) {
        sets.push_back(p.atoms());
    }
    return sets;
}

void splitting_checks(CellRecorder& rec, const Program& p, Semantics s, const SolveOptions& opts,
                      std::optional<std::uint64_t> seed) {
    if (p.atoms().size() > 8) {
        // too many candidate sets; the listed splitting cases cover large fixtures
        return;
    }
    for (auto u : splitting_sets_with_full(p)) {
        rec.run([&] { return check_epistemic_splitting(p, u, s, opts); }, seed);
    }
}

} // namespace

PropertyMatrix run_property_matrix(const Corpus& corpus, const MatrixOptions& opts) {
    PropertyMatrix m;
    m.columns = opts.semantics;
    m.seed = opts.seed;
    m.fixture_failures = verify_corpus(corpus, opts.semantics, opts.solve);
    if (!m.fixture_failures.empty()) {
        return m;
    }
    SolveOptions solve = opts.solve;

    for (auto s : opts.semantics) {
        solve.eliminate_m = k_only(s) || opts.solve.eliminate_m;
        const auto params = params_for(s);
        const std::size_t count = s == Semantics::F15 ? std::min(opts.count, opts.f15_count) : opts.count;
        auto cell = [&](Row r) { return CellRecorder(m.cells[r][s], opts.max_witnesses); };

        auto s5 = cell(Row::SupraS5);
        auto asp = cell(Row::SupraAsp);
        auto mono = cell(Row::Monotonicity);
        auto split = cell(Row::Splitting);
        auto founded = cell(Row::Foundedness);

        for (const auto& f : corpus.fixtures) {
            s5.run([&] { return check_supra_s5(f.program, s, solve); });
            if (f.program.objective()) {
                asp.run([&] { return check_supra_asp(f.program, s, solve); });
            }
            splitting_checks(split, f.program, s, solve, std::nullopt);
            founded.run([&] { return check_foundedness(f.program, s, solve); });
        }
        for (const auto& c : corpus.monotonicity) {
            mono.run([&] {
                const auto [p, r] = monotonicity_instance(corpus, c);
                return check_constraint_monotonicity(p, r, s, solve);
            });
        }
        for (const auto& c : corpus.splitting) {
            split.run([&] {
                const Program& p = corpus.fixture(c.fixture).program;
                AtomSet u;
                for (const auto& a : c.u) {
                    u.insert(p.table().id(a));
                }
                return check_epistemic_splitting(p, u, s, solve);
            });
        }

        for (std::size_t i = 0; i < count; ++i) {
            {
                const auto seed = instance_seed(opts.seed, Row::SupraS5, i);
                ProgramGenerator gen(seed);
                const Program p = gen.random_program(params);
                s5.run([&] { return check_supra_s5(p, s, solve); }, seed);
                founded.run([&] { return check_foundedness(p, s, solve); }, seed);
            }
            {
                const auto seed = instance_seed(opts.seed, Row::SupraAsp, i);
                ProgramGenerator gen(seed);
                const Program p = gen.objective_program(params);
                asp.run([&] { return check_supra_asp(p, s, solve); }, seed);
            }
            {
                const auto seed = instance_seed(opts.seed, Row::Monotonicity, i);
                ProgramGenerator gen(seed);
                const Program p = gen.random_program(params);
                const Rule r = gen.subjective_constraint(p, params);
                mono.run([&] { return check_constraint_monotonicity(p, r, s, solve); }, seed);
            }
            {
                const auto seed = instance_seed(opts.seed, Row::Splitting, i);
                ProgramGenerator gen(seed);
                splitting_checks(split, gen.random_program(params), s, solve, seed);
            }
        }
    }
    return m;
}

namespace {

std::string symbol(CellState c) {
    switch (c) {
    case CellState::Holds: return "✓";
    case CellState::Violated: return "✗";
    case CellState::Untested: return "?";
    }
    return "?";
}

} // namespace

std::string render_text(const PropertyMatrix& m) {
    std::ostringstream out;
    if (!m.fixture_failures.empty()) {
        out << "fixture expectations failed; matrix not computed\n";
        for (const auto& f : m.fixture_failures) {
            out << "  " << f.what << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << "\n";
        }
        return out.str();
    }
    constexpr int kLabel = 36;
    out << std::string(kLabel, ' ');
    for (auto s : m.columns) {
        out << "  " << name(s) << " ";
    }
    out << "\n";
    for (auto r : kAllRows) {
        std::string l(label(r));
        if (r == Row::Foundedness) {
            l += " (info)";
        }
        out << l << std::string(static_cast<std::size_t>(std::max(0, kLabel - static_cast<int>(l.size()))), ' ');
        for (auto s : m.columns) {
            out << "   " << symbol(m.at(r, s).state) << "  ";
        }
        out << "\n";
    }
    out << "\n✓ no violation found, ✗ violated (witness below), ? no instance within capacity\n";
    out << "published pattern: " << (m.matches_expected() ? "reproduced" : "NOT reproduced") << "\n";

    for (auto r : kAllRows) {
        for (auto s : m.columns) {
            const auto& c = m.at(r, s);
            out << "\n[" << label(r) << " / " << name(s) << "] " << c.checks << " checks, " << c.skipped
                << " skipped";
            if (c.witnesses.empty()) {
                out << "\n";
                continue;
            }
            const auto& w = c.witnesses.front();
            const auto& t = *w.table;
            out << ", witness:\n";
            std::istringstream lines(w.program);
            for (std::string line; std::getline(lines, line);) {
                out << "    " << line << "\n";
            }
            if (w.u) {
                out << "  U = " << t.format(*w.u) << "\n";
            }
            if (!w.detail.empty()) {
                out << "  " << w.detail << "\n";
            }
            if (w.seed) {
                out << "  seed " << *w.seed << "\n";
            }
            out << "  lhs " << format(w.lhs, t) << "\n  rhs " << format(w.rhs, t) << "\n";
        }
    }
    return out.str();
}

nlohmann::json to_json(const PropertyMatrix& m) {
    nlohmann::json j;
    j["seed"] = m.seed;
    j["columns"] = nlohmann::json::array();
    for (auto s : m.columns) {
        j["columns"].push_back(name(s));
    }
    if (!m.fixture_failures.empty()) {
        for (const auto& f : m.fixture_failures) {
            j["fixture_failures"].push_back({{"case", f.what}, {"expected", f.expected}, {"actual", f.actual}});
        }
        return j;
    }
    j["matches_published"] = m.matches_expected();
    for (auto r : kAllRows) {
        nlohmann::json row;
        for (auto s : m.columns) {
            const auto& c = m.at(r, s);
            nlohmann::json cell;
            cell["state"] = c.state == CellState::Holds ? "holds" : c.state == CellState::Violated ? "violated" : "untested";
            cell["checks"] = c.checks;
            cell["skipped"] = c.skipped;
            cell["witnesses"] = nlohmann::json::array();
            for (const auto& w : c.witnesses) {
                cell["witnesses"].push_back(to_json(w));
            }
            row[std::string(name(s))] = cell;
        }
        j["rows"][std::string(label(r))] = row;
    }
    return j;
}

} // namespace elp
