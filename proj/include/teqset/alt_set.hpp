#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace teqset {

/// Largest supported tournament order. One AltSet is one machine word.
inline constexpr int kMaxOrder = 64;

/// A set of alternatives of a single tournament, stored as a 64-bit mask.
/// Bit i is set iff alternative i (0-based) is a member.
class AltSet {
public:
    constexpr AltSet() = default;
    constexpr explicit AltSet(std::uint64_t bits) : bits_(bits) {}
    constexpr AltSet(std::initializer_list<int> members) {
        for (int m : members) bits_ |= std::uint64_t{1} << m;
    }

    /// {0, ..., n-1}.
    static constexpr AltSet universe(int n) {
        return AltSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr AltSet singleton(int i) { return AltSet(std::uint64_t{1} << i); }
    /// {first, ..., last-1}.
    static constexpr AltSet range(int first, int last) {
        return AltSet(universe(last).bits_ & ~universe(first).bits_);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
    /// Smallest member; undefined for the empty set.
    constexpr int front() const { return std::countr_zero(bits_); }

    constexpr bool subset_of(AltSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(AltSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr AltSet with(int i) const { return AltSet(bits_ | (std::uint64_t{1} << i)); }
    constexpr AltSet without(int i) const { return AltSet(bits_ & ~(std::uint64_t{1} << i)); }
    /// Complement relative to {0, ..., n-1}.
    constexpr AltSet complement(int n) const { return AltSet(~bits_ & universe(n).bits_); }

    constexpr AltSet operator|(AltSet o) const { return AltSet(bits_ | o.bits_); }
    constexpr AltSet operator&(AltSet o) const { return AltSet(bits_ & o.bits_); }
    constexpr AltSet operator-(AltSet o) const { return AltSet(bits_ & ~o.bits_); }
    constexpr AltSet& operator|=(AltSet o) { bits_ |= o.bits_; return *this; }
    constexpr AltSet& operator&=(AltSet o) { bits_ &= o.bits_; return *this; }
    constexpr AltSet& operator-=(AltSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const AltSet&) const = default;

    /// Iterates members in increasing order.
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
        constexpr bool operator==(const iterator&) const = default;
    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> members() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Orders sets by smallest member, ties broken by the raw mask.
struct BySmallestMember {
    bool operator()(AltSet a, AltSet b) const {
        if (a.empty() || b.empty()) return a.empty() && !b.empty();
        if (a.front() != b.front()) return a.front() < b.front();
        return a.bits() < b.bits();
    }
};

/// Space-separated 1-based member list, e.g. "1 2 3".
std::string format_one_based(AltSet s);

/// Parses a comma-separated list of 1-based indices ("1,4,7"). Every index
/// must lie in [1, order]. Throws std::invalid_argument otherwise.
AltSet parse_one_based_list(const std::string& text, int order);

}  // namespace teqset
