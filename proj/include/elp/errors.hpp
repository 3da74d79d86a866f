#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Search space exceeds a configured exhaustive-search cap.
struct CapacityError : Error {
    using Error::Error;
};

/// The construct uses a literal the selected semantics does not define (M under G11/K15/S17).
struct UnsupportedLiteral : Error {
    using Error::Error;
};

struct GroundingError : Error {
    using Error::Error;
};

struct NotASplittingSet : Error {
    NotASplittingSet(std::size_t rule, const std::string& text)
        : Error("not a splitting set: rule " + std::to_string(rule) + " `" + text + "` violates both conditions"),
          rule_index(rule) {}
    std::size_t rule_index;
};

struct NotAnEpistemicSplittingSet : Error {
    NotAnEpistemicSplittingSet(std::size_t rule, const std::string& text)
        : Error("not an epistemic splitting set: rule " + std::to_string(rule) + " `" + text +
                "` violates both conditions"),
          rule_index(rule) {}
    std::size_t rule_index;
};

struct NotStratified : Error {
    using Error::Error;
};

} // namespace elp
