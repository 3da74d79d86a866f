#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace elp::ast {

struct Pos {
    std::size_t line = 0;
    std::size_t column = 0;
};

struct Term {
    std::string text;
    bool variable = false;
    friend bool operator==(const Term&, const Term&) = default;
};

struct Atom {
    std::string name;
    std::vector<Term> args;
    bool strong_neg = false;
    Pos pos;

    bool ground() const;
    friend bool operator==(const Atom& a, const Atom& b) {
        return a.name == b.name && a.args == b.args && a.strong_neg == b.strong_neg;
    }
};

enum class Constant { Top, Bottom };

/// Atom or truth constant under 0, 1 or 2 default negations.
struct ObjectiveLiteral {
    std::variant<Atom, Constant> base;
    int negations = 0;
    friend bool operator==(const ObjectiveLiteral&, const ObjectiveLiteral&) = default;
};

enum class Modality { K, M };

struct SubjectiveLiteral {
    bool negated = false;
    Modality modality = Modality::K;
    ObjectiveLiteral inner;
    friend bool operator==(const SubjectiveLiteral&, const SubjectiveLiteral&) = default;
};

using Literal = std::variant<ObjectiveLiteral, SubjectiveLiteral>;

struct Rule {
    std::vector<Atom> head;
    std::vector<Literal> body;
    Pos pos;
    friend bool operator==(const Rule& a, const Rule& b) { return a.head == b.head && a.body == b.body; }
};

struct Program {
    std::vector<Rule> rules;
    friend bool operator==(const Program&, const Program&) = default;
};

/// Parses the `.elp` surface syntax. Throws ParseError with line and column.
Program parse_program(std::string_view text);

/// Full Herbrand instantiation: every variable ranges over every constant of the program.
/// Duplicate ground rules are dropped, keeping first occurrences.
Program ground(const Program& program);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const ObjectiveLiteral& l);
std::string to_string(const SubjectiveLiteral& l);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);
std::string to_string(const Program& p);

} // namespace elp::ast
