#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "teqset/tournament.hpp"

namespace teqset::testing {

inline Tournament three_cycle() {
    return Tournament::from_out_sets(3, std::vector<AltSet>{{1}, {2}, {0}});
}

/// i dominates j iff i < j.
inline Tournament transitive(int n) {
    std::vector<AltSet> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = AltSet::range(i + 1, n);
    return Tournament::from_out_sets(n, rows);
}

/// The labeled tournament of order n whose pair k (lexicographic i<j) is
/// oriented i > j iff bit k of `code` is set.
inline Tournament from_pair_code(int n, std::uint64_t code) {
    std::vector<AltSet> rows(n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if ((code >> k) & 1U) {
                rows[i] = rows[i].with(j);
            } else {
                rows[j] = rows[j].with(i);
            }
        }
    }
    return Tournament::from_out_sets(n, rows);
}

/// Relabels: alternative i of `t` becomes perm[i].
inline Tournament permuted(const Tournament& t, const std::vector<int>& perm) {
    std::vector<AltSet> rows(t.order());
    for (int i = 0; i < t.order(); ++i) {
        for (int j : t.out_set(i)) rows[perm[i]] = rows[perm[i]].with(perm[j]);
    }
    return Tournament::from_out_sets(t.order(), rows);
}

/// Exhaustive permutation scan, independent of the backtracking matcher.
inline bool isomorphic_by_scan(const Tournament& a, const Tournament& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.order() && ok; ++i) {
            for (int j = 0; j < a.order() && ok; ++j) {
                if (i != j && a.dominates(i, j) != b.dominates(perm[i], perm[j])) ok = false;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace teqset::testing
