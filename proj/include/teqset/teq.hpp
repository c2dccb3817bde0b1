#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "teqset/alt_set.hpp"
#include "teqset/tournament.hpp"

namespace teqset {

/// Thrown when a TeqCache deadline passes mid-computation.
class TeqTimeout : public std::runtime_error {
public:
    TeqTimeout() : std::runtime_error("TEQ computation exceeded its time budget") {}
};

/// Memo table of TEQ values for subsets of one fixed base tournament.
///
/// A subset of the base fully determines its induced subtournament, so the
/// subset mask alone is a sound key. Stored values are always nonempty subsets
/// of their key. Not safe for concurrent mutation; use one cache per thread.
class TeqCache {
public:
    explicit TeqCache(Tournament base);

    const Tournament& base() const { return base_; }

    std::optional<AltSet> lookup(AltSet subset) const;
    void store(AltSet subset, AltSet value);

    std::size_t size() const { return table_.size(); }
    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }

    /// Computations through this cache throw TeqTimeout once `deadline` passes.
    void set_deadline(std::chrono::steady_clock::time_point deadline) { deadline_ = deadline; }
    void check_deadline() const;

private:
    Tournament base_;
    std::unordered_map<std::uint64_t, AltSet> table_;
    mutable std::uint64_t hits_ = 0;
    mutable std::uint64_t misses_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// Edge x -> y iff y is in TEQ(dom_universe(x)). Indices are base indices;
/// `successors[x]` is empty for alternatives outside the universe and for
/// undominated ones.
struct RelationGraph {
    AltSet universe;
    std::vector<AltSet> successors;
};

RelationGraph build_relation_graph(TeqCache& cache, AltSet universe);

/// Strongly connected components with no edge leaving them, ordered by
/// smallest member. Runs Tarjan's algorithm over the mask adjacency.
std::vector<AltSet> terminal_sccs(const RelationGraph& g);

/// TEQ of the subtournament induced by `subset`, in base indices. Memoized.
/// Throws std::invalid_argument for an empty subset or one outside the base.
AltSet teq_of_subset(TeqCache& cache, AltSet subset);

/// Tournament equilibrium set: the union of all inclusion-minimal
/// TEQ-retentive sets. Always nonempty.
AltSet teq(const Tournament& t);

/// True iff TEQ(dom_A(x)) is contained (non-strictly) in `set` for every
/// x in `set` that has at least one dominator in the base tournament A.
bool is_retentive(TeqCache& cache, AltSet set);

/// All inclusion-minimal TEQ-retentive sets of the base tournament, pairwise
/// disjoint and ordered by smallest member.
std::vector<AltSet> minimal_retentive_sets(TeqCache& cache);
std::vector<AltSet> minimal_retentive_sets(const Tournament& t);

/// Largest order accepted by the brute-force routines.
inline constexpr int kBruteForceMaxOrder = 12;

/// TEQ straight from the definition: enumerate all nonempty subsets, keep
/// the retentive ones (inner TEQ values computed the same way), reduce to the
/// inclusion-minimal ones and take their union. No graph shortcut.
/// Throws std::invalid_argument above kBruteForceMaxOrder.
AltSet teq_bruteforce(const Tournament& t);

/// The inclusion-minimal retentive sets found by the same enumeration.
std::vector<AltSet> minimal_retentive_sets_bruteforce(const Tournament& t);

}  // namespace teqset
