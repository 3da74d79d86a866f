#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "elp/atom.hpp"
#include "elp/syntax.hpp"

namespace elp {

enum class Base : std::uint8_t { Atom, Top, Bottom };
enum class Modality : std::uint8_t { K, M };

/// Atom or truth constant under 0, 1 or 2 default negations.
struct ObjectiveLiteral {
    Base base = Base::Atom;
    AtomId atom = 0;
    std::uint8_t negations = 0;

    static ObjectiveLiteral of(AtomId a, int negs = 0) { return {Base::Atom, a, static_cast<std::uint8_t>(negs)}; }
    static ObjectiveLiteral top(int negs = 0) { return {Base::Top, 0, static_cast<std::uint8_t>(negs)}; }
    static ObjectiveLiteral bottom(int negs = 0) { return {Base::Bottom, 0, static_cast<std::uint8_t>(negs)}; }

    bool is_constant() const { return base != Base::Atom; }
    /// One more default negation; `not not not a` collapses to `not a`.
    ObjectiveLiteral negated() const;
    /// Truth value under an interpretation (classical reading of `not`).
    bool eval(AtomSet i) const;

    friend auto operator<=>(const ObjectiveLiteral&, const ObjectiveLiteral&) = default;
};

/// The K/M part of a subjective literal, without its outer negation.
struct SubjectiveCore {
    Modality modality = Modality::K;
    ObjectiveLiteral inner;
    friend auto operator<=>(const SubjectiveCore&, const SubjectiveCore&) = default;
};

struct SubjectiveLiteral {
    bool negated = false;
    SubjectiveCore core;
    friend auto operator<=>(const SubjectiveLiteral&, const SubjectiveLiteral&) = default;
};

using Literal = std::variant<ObjectiveLiteral, SubjectiveLiteral>;

struct Rule {
    std::vector<AtomId> head; // sorted, no duplicates; empty means a constraint
    std::vector<Literal> body;

    AtomSet head_set() const;
    AtomSet atoms() const;
    AtomSet body_obj_atoms() const;
    AtomSet body_sub_atoms() const;
    bool is_constraint() const { return head.empty(); }
    bool has_subjective() const;
    /// Constraint whose body has only subjective literals.
    bool is_subjective_constraint() const;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// A ground program over a shared atom table.
class Program {
public:
    Program() : table_(std::make_shared<AtomTable>()) {}
    Program(AtomTablePtr table, std::vector<Rule> rules) : table_(std::move(table)), rules_(std::move(rules)) {}

    const AtomTable& table() const { return *table_; }
    const AtomTablePtr& table_ptr() const { return table_; }
    const std::vector<Rule>& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }
    const Rule& operator[](std::size_t i) const { return rules_.at(i); }

    /// Atoms(Π): atoms occurring in some rule.
    AtomSet atoms() const;
    AtomSet head_atoms() const;
    bool objective() const;
    bool has_m() const;
    /// Distinct subjective cores in order of first occurrence.
    std::vector<SubjectiveCore> cores() const;

    Program with_rules(std::vector<Rule> rules) const { return Program(table_, std::move(rules)); }
    Program with_rule(Rule r) const;
    Program without_rule(std::size_t index) const;

    std::string to_string() const;
    std::string to_string(const Rule& r) const;
    std::string to_string(const Literal& l) const;

private:
    AtomTablePtr table_;
    std::vector<Rule> rules_;
};

/// Converts a ground AST to a program whose table holds exactly the atoms of the AST
/// (plus the complements of strongly negated atoms when `normalize` is set).
/// Throws GroundingError if the AST still has variables.
Program compile(const ast::Program& ground_ast, bool normalize = true);
ast::Program to_ast(const Program& p);

/// Adds `:- p, -p.` for every strongly negated atom -p with p in the table (p is added if absent).
Program normalize(const Program& p);

/// Rewrites `M l` to `not K not l` and `not M l` to `K not l`.
Program eliminate_m(const Program& p);

/// parse + ground + compile + normalize.
Program load_program(std::string_view text);
Program load_program_file(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

/// Re-expresses `p` over `table`, which must contain every atom of `p`.
Program rebase(const Program& p, const AtomTablePtr& table);
AtomSet rebase(AtomSet s, const AtomTable& from, const AtomTable& to);

/// Adds the rules in `text` to `p`. The result's table is the union of both; `p`'s rules come first.
/// Variables in `text` range over the constants of both.
Program extend(const Program& p, std::string_view text);

/// Simplifies truth constants: drops true body conjuncts and rules with a false body conjunct.
/// Used to compare reducts syntactically.
Program canonicalize(const Program& p);

} // namespace elp
