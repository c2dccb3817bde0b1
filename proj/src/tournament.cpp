#include "teqset/tournament.hpp"

#include <algorithm>

namespace teqset {

namespace {

std::string pair_text(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

void check_order(int order) {
    if (order < 1 || order > kMaxOrder) {
        throw TournamentError("tournament order must be in 1.." + std::to_string(kMaxOrder) +
                              ", got " + std::to_string(order));
    }
}

Tournament Tournament::from_out_sets(int order, std::span<const AltSet> dominates) {
    check_order(order);
    if (dominates.size() != static_cast<std::size_t>(order)) {
        throw TournamentError("expected " + std::to_string(order) + " rows, got " +
                              std::to_string(dominates.size()));
    }
    const AltSet all = AltSet::universe(order);
    Tournament t;
    t.out_.assign(dominates.begin(), dominates.end());
    t.in_.assign(order, AltSet{});
    for (int i = 0; i < order; ++i) {
        if (!t.out_[i].subset_of(all)) {
            throw TournamentError("row " + std::to_string(i) + " names an alternative outside 0.." +
                                  std::to_string(order - 1));
        }
        if (t.out_[i].contains(i)) throw TournamentError("reflexive entry at " + pair_text(i, i));
    }
    for (int i = 0; i < order; ++i) {
        for (int j = i + 1; j < order; ++j) {
            const bool ij = t.out_[i].contains(j);
            const bool ji = t.out_[j].contains(i);
            if (ij && ji) throw TournamentError("asymmetry violated at " + pair_text(i, j));
            if (!ij && !ji) throw TournamentError("completeness violated at " + pair_text(i, j));
        }
    }
    for (int i = 0; i < order; ++i) {
        for (int j : t.out_[i]) t.in_[j] = t.in_[j].with(i);
    }
    return t;
}

Tournament Tournament::from_matrix(const std::vector<std::vector<bool>>& m) {
    const int order = static_cast<int>(m.size());
    check_order(order);
    std::vector<AltSet> rows(order);
    for (int i = 0; i < order; ++i) {
        if (m[i].size() != m.size()) {
            throw TournamentError("row " + std::to_string(i) + " has " + std::to_string(m[i].size()) +
                                  " entries, expected " + std::to_string(order));
        }
        for (int j = 0; j < order; ++j) {
            if (m[i][j]) rows[i] = rows[i].with(j);
        }
    }
    return from_out_sets(order, rows);
}

std::vector<int> Tournament::score_sequence() const {
    std::vector<int> scores;
    scores.reserve(out_.size());
    for (AltSet s : out_) scores.push_back(s.size());
    std::sort(scores.begin(), scores.end());
    return scores;
}

Tournament Tournament::with_flipped(int i, int j) const {
    if (i < 0 || j < 0 || i >= order() || j >= order() || i == j) {
        throw std::out_of_range("cannot flip pair " + pair_text(i, j));
    }
    std::vector<AltSet> rows = out_;
    if (rows[i].contains(j)) {
        rows[i] = rows[i].without(j);
        rows[j] = rows[j].with(i);
    } else {
        rows[j] = rows[j].without(i);
        rows[i] = rows[i].with(j);
    }
    return from_out_sets(order(), rows);
}

AltSet dominators(const Tournament& t, AltSet within, int x) {
    if (x < 0 || x >= t.order()) {
        throw std::out_of_range("alternative " + std::to_string(x) + " outside 0.." +
                                std::to_string(t.order() - 1));
    }
    return t.in_set(x) & within;
}

AltSet Restriction::lift(AltSet local) const {
    AltSet out;
    for (int i : local) out = out.with(to_original[i]);
    return out;
}

Restriction restrict(const Tournament& t, AltSet subset) {
    if (subset.empty()) throw std::invalid_argument("cannot restrict to an empty set");
    if (!subset.subset_of(t.universe())) {
        throw std::invalid_argument("restriction set reaches beyond the tournament");
    }
    std::vector<int> original = subset.members();
    std::vector<int> local(t.order(), -1);
    for (std::size_t k = 0; k < original.size(); ++k) local[original[k]] = static_cast<int>(k);

    std::vector<AltSet> rows(original.size());
    for (std::size_t k = 0; k < original.size(); ++k) {
        for (int j : t.out_set(original[k]) & subset) rows[k] = rows[k].with(local[j]);
    }
    return {Tournament::from_out_sets(static_cast<int>(original.size()), rows), std::move(original)};
}

std::uint64_t pair_index(int i, int j, int order) {
    // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    const auto a = static_cast<std::uint64_t>(i);
    const auto n = static_cast<std::uint64_t>(order);
    return a * n - a * (a + 1) / 2 + static_cast<std::uint64_t>(j - i - 1);
}

}  // namespace teqset
