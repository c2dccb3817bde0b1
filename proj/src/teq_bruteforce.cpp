#include <algorithm>
#include <array>
#include <unordered_map>

#include "teqset/teq.hpp"

namespace teqset {

namespace {

// Literal reading of the definition, memoized per subset of the base.
class DefinitionalTeq {
public:
    explicit DefinitionalTeq(const Tournament& t) : t_(t) {
        if (t.order() > kBruteForceMaxOrder) {
            throw std::invalid_argument("brute-force TEQ is limited to order " +
                                        std::to_string(kBruteForceMaxOrder) + ", got " +
                                        std::to_string(t.order()));
        }
    }

    const std::vector<AltSet>& minimal_sets(AltSet universe) {
        if (auto it = memo_.find(universe.bits()); it != memo_.end()) return it->second;

        // TEQ(dom_universe(x)); stays empty for undominated x.
        std::array<AltSet, kBruteForceMaxOrder> inner{};
        for (int x : universe) {
            const AltSet dom = t_.in_set(x) & universe;
            if (!dom.empty()) inner[x] = teq(dom);
        }

        std::vector<AltSet> retentive;
        const std::uint64_t full = universe.bits();
        for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
            const AltSet candidate(sub);
            bool closed = true;
            for (int x : candidate) {
                const AltSet dom = t_.in_set(x) & universe;
                if (!dom.empty() && !inner[x].subset_of(candidate)) {
                    closed = false;
                    break;
                }
            }
            if (closed) retentive.push_back(candidate);
        }

        // Any non-minimal retentive set contains a smaller minimal one.
        std::sort(retentive.begin(), retentive.end(),
                  [](AltSet a, AltSet b) { return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits(); });
        std::vector<AltSet> minimal;
        for (AltSet r : retentive) {
            const bool has_smaller = std::any_of(minimal.begin(), minimal.end(),
                                                 [&](AltSet m) { return m.subset_of(r); });
            if (!has_smaller) minimal.push_back(r);
        }
        std::sort(minimal.begin(), minimal.end(), BySmallestMember{});
        return memo_.emplace(universe.bits(), std::move(minimal)).first->second;
    }

    AltSet teq(AltSet universe) {
        AltSet result;
        for (AltSet m : minimal_sets(universe)) result |= m;
        return result;
    }

private:
    const Tournament& t_;
    std::unordered_map<std::uint64_t, std::vector<AltSet>> memo_;
};

}  // namespace

AltSet teq_bruteforce(const Tournament& t) {
    DefinitionalTeq oracle(t);
    return oracle.teq(t.universe());
}

std::vector<AltSet> minimal_retentive_sets_bruteforce(const Tournament& t) {
    DefinitionalTeq oracle(t);
    return oracle.minimal_sets(t.universe());
}

}  // namespace teqset
