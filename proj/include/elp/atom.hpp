#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elp/atom_set.hpp"

namespace elp {

/// A ground atom. `-p(c)` is represented by strong_neg = true and is a distinct atom from `p(c)`.
struct Atom {
    std::string name;
    std::vector<std::string> args;
    bool strong_neg = false;

    std::string text() const;
    /// The atom with the strong-negation flag flipped.
    Atom complement() const;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Atom ids of one program. Ids follow the lexicographic order of the rendered atoms,
/// so id order, sorted output and AtomSet ordering all agree.
class AtomTable {
public:
    AtomTable() = default;
    /// Builds a table from any collection of atoms; duplicates are merged.
    explicit AtomTable(std::vector<Atom> atoms);

    std::size_t size() const { return atoms_.size(); }
    const Atom& operator[](AtomId id) const { return atoms_.at(id); }
    const std::vector<Atom>& atoms() const { return atoms_; }
    std::optional<AtomId> find(std::string_view text) const;
    AtomId id(std::string_view text) const; // throws std::out_of_range
    const std::string& text(AtomId id) const { return texts_.at(id); }
    AtomSet all() const { return AtomSet::first(atoms_.size()); }

    /// Renders a set as `{a,b}`.
    std::string format(AtomSet s) const;
    std::vector<std::string> names(AtomSet s) const;
    /// Parses a comma separated list of atom texts (commas inside parentheses are kept).
    AtomSet parse_set(std::string_view list) const;

    friend bool operator==(const AtomTable& a, const AtomTable& b) { return a.texts_ == b.texts_; }

private:
    std::vector<Atom> atoms_;
    std::vector<std::string> texts_;
    std::map<std::string, AtomId, std::less<>> index_;
};

using AtomTablePtr = std::shared_ptr<const AtomTable>;

/// Splits on commas that are not nested inside parentheses; trims blanks.
std::vector<std::string> split_top_level(std::string_view list);

} // namespace elp
