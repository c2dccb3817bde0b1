#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "teqset/alt_set.hpp"

namespace teqset {

/// Raised when a dominance table does not describe a legal tournament.
class TournamentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A complete asymmetric dominance relation over alternatives 0..order-1.
///
/// Each alternative keeps two masks: the alternatives it dominates and the
/// alternatives dominating it. Instances are immutable once constructed, so
/// every query is a constant-time mask operation.
class Tournament {
public:
    /// Builds from out-neighbourhoods: `dominates[i]` holds every j with i > j.
    /// Throws TournamentError on an invalid order, a reflexive entry, or a pair
    /// with zero or two orientations (the message names the pair).
    static Tournament from_out_sets(int order, std::span<const AltSet> dominates);

    /// Builds from a square boolean matrix, `m[i][j]` meaning i dominates j.
    static Tournament from_matrix(const std::vector<std::vector<bool>>& m);

    int order() const { return static_cast<int>(out_.size()); }
    AltSet universe() const { return AltSet::universe(order()); }

    bool dominates(int i, int j) const { return out_[i].contains(j); }
    /// Everything `i` dominates.
    AltSet out_set(int i) const { return out_[i]; }
    /// Everything dominating `i`.
    AltSet in_set(int i) const { return in_[i]; }
    int score(int i) const { return out_[i].size(); }
    std::vector<int> score_sequence() const;

    /// Returns a copy with the orientation of the pair (i, j) reversed.
    Tournament with_flipped(int i, int j) const;

    bool operator==(const Tournament&) const = default;

private:
    Tournament() = default;
    std::vector<AltSet> out_;
    std::vector<AltSet> in_;
};

/// dom_within(x) = { y in within | y dominates x }.
/// Throws std::out_of_range when `x` is not an index of `t`.
AltSet dominators(const Tournament& t, AltSet within, int x);

/// An induced subtournament together with the original index of each of its
/// alternatives.
struct Restriction {
    Tournament tournament;
    std::vector<int> to_original;

    /// Maps a set of restricted indices back to the base tournament.
    AltSet lift(AltSet local) const;
};

/// T|subset. Alternatives keep their relative order. Throws std::invalid_argument
/// on an empty subset or a subset reaching beyond the tournament.
Restriction restrict(const Tournament& t, AltSet subset);

/// Position of pair (i, j), i < j, in lexicographic order of all such pairs.
std::uint64_t pair_index(int i, int j, int order);

void check_order(int order);

}  // namespace teqset
