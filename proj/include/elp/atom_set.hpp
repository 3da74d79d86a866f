#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace elp {

using AtomId = std::uint32_t;

/// Upper bound on the atom table of a single program; interpretations are machine words.
inline constexpr std::size_t kMaxAtoms = 64;

/// A set of atom ids packed into one 64-bit word.
///
/// Ordering is the canonical one used for every set-valued output: two sets are
/// compared as their ascending id lists, lexicographically. Because ids are
/// assigned in lexicographic atom order, this is also the order of the rendered
/// atom lists.
class AtomSet {
public:
    constexpr AtomSet() = default;
    constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr AtomSet single(AtomId a) { return AtomSet{std::uint64_t{1} << a}; }
    /// Atoms {0, ..., n-1}.
    static constexpr AtomSet first(std::size_t n) {
        return AtomSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(AtomId a) const { return (bits_ >> a) & 1U; }
    constexpr bool subset_of(AtomSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(AtomSet o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(AtomSet o) const { return (bits_ & o.bits_) != 0; }

    /// Smallest member; the set must be non-empty.
    constexpr AtomId first_id() const { return static_cast<AtomId>(std::countr_zero(bits_)); }

    constexpr void insert(AtomId a) { bits_ |= std::uint64_t{1} << a; }
    constexpr void erase(AtomId a) { bits_ &= ~(std::uint64_t{1} << a); }

    constexpr AtomSet& operator|=(AtomSet o) { bits_ |= o.bits_; return *this; }
    constexpr AtomSet& operator&=(AtomSet o) { bits_ &= o.bits_; return *this; }
    constexpr AtomSet& operator-=(AtomSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet{a.bits_ | b.bits_}; }
    friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return AtomSet{a.bits_ & b.bits_}; }
    friend constexpr AtomSet operator-(AtomSet a, AtomSet b) { return AtomSet{a.bits_ & ~b.bits_}; }
    friend constexpr bool operator==(AtomSet a, AtomSet b) = default;

    friend constexpr std::strong_ordering operator<=>(AtomSet a, AtomSet b) {
        if (a.bits_ == b.bits_) {
            return std::strong_ordering::equal;
        }
        // The first position where the id lists differ is the lowest differing bit d.
        // The list holding d is smaller unless the other list has already ended.
        const auto d = static_cast<unsigned>(std::countr_zero(a.bits_ ^ b.bits_));
        if ((a.bits_ >> d) & 1U) {
            return (b.bits_ >> d) == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return (a.bits_ >> d) == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    /// Calls f(id) for every member in ascending order.
    template <class F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
            f(static_cast<AtomId>(std::countr_zero(rest)));
        }
    }

    /// Calls f(subset) for every subset of *this, including the empty set and *this.
    template <class F>
    constexpr void for_each_subset(F&& f) const {
        std::uint64_t s = bits_;
        while (true) {
            f(AtomSet{s});
            if (s == 0) {
                break;
            }
            s = (s - 1) & bits_;
        }
    }

private:
    std::uint64_t bits_ = 0;
};

/// A propositional interpretation: the atoms taken to be true.
using Interpretation = AtomSet;

} // namespace elp
