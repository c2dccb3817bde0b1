#pragma once

#include <optional>
#include <span>
#include <vector>

#include "teqset/tournament.hpp"

namespace teqset {

/// A bijection from the alternatives of one tournament onto another's.
struct IsoMapping {
    std::vector<int> map;

    AltSet apply(AltSet s) const;
};

/// True iff `map` is a bijection onto b's alternatives and i > j in `a`
/// exactly when map[i] > map[j] in `b`.
bool is_isomorphism(const Tournament& a, const Tournament& b, std::span<const int> map);

/// Searches for an isomorphism from `a` to `b`.
///
/// Tournaments whose sorted score sequences differ are rejected immediately.
/// Otherwise vertices of `a` are assigned in score-class order (smallest class
/// first) to same-score vertices of `b`, backtracking whenever a new pair
/// contradicts an already assigned one. Returns std::nullopt when no mapping
/// exists, including when the orders differ.
std::optional<IsoMapping> find_isomorphism(const Tournament& a, const Tournament& b);

}  // namespace teqset
