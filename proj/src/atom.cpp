#include "elp/atom.hpp"

#include <algorithm>
#include <stdexcept>

#include "elp/errors.hpp"

namespace elp {

std::string Atom::text() const {
    std::string out;
    if (strong_neg) {
        out += '-';
    }
    out += name;
    if (!args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += args[i];
        }
        out += ')';
    }
    return out;
}

Atom Atom::complement() const {
    Atom c = *this;
    c.strong_neg = !strong_neg;
    return c;
}

AtomTable::AtomTable(std::vector<Atom> atoms) {
    std::vector<std::pair<std::string, Atom>> keyed;
    keyed.reserve(atoms.size());
    for (auto& a : atoms) {
        keyed.emplace_back(a.text(), std::move(a));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
                keyed.end());
    if (keyed.size() > kMaxAtoms) {
        throw CapacityError("program has " + std::to_string(keyed.size()) + " atoms; at most " +
                            std::to_string(kMaxAtoms) + " are supported");
    }
    for (auto& [text, atom] : keyed) {
        index_.emplace(text, static_cast<AtomId>(atoms_.size()));
        texts_.push_back(text);
        atoms_.push_back(std::move(atom));
    }
}

std::optional<AtomId> AtomTable::find(std::string_view text) const {
    auto it = index_.find(text);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

AtomId AtomTable::id(std::string_view text) const {
    if (auto id = find(text)) {
        return *id;
    }
    throw std::out_of_range("unknown atom '" + std::string(text) + "'");
}

std::string AtomTable::format(AtomSet s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](AtomId a) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += texts_.at(a);
    });
    out += '}';
    return out;
}

std::vector<std::string> AtomTable::names(AtomSet s) const {
    std::vector<std::string> out;
    s.for_each([&](AtomId a) { out.push_back(texts_.at(a)); });
    return out;
}

AtomSet AtomTable::parse_set(std::string_view list) const {
    AtomSet out;
    for (const auto& item : split_top_level(list)) {
        out.insert(id(item));
    }
    return out;
}

std::vector<std::string> split_top_level(std::string_view list) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        auto b = cur.find_first_not_of(" \t");
        auto e = cur.find_last_not_of(" \t");
        if (b != std::string::npos) {
            out.push_back(cur.substr(b, e - b + 1));
        }
        cur.clear();
    };
    for (char c : list) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        }
        if (c == ',' && depth == 0) {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

} // namespace elp
