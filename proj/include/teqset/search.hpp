#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "teqset/tournament.hpp"

namespace teqset {

/// Builds the order-4k tournament made of two copies X and Y of `half`
/// (order 2k), with X1 > Y2, X2 > Y1, Y1 > X1 and Y2 > X2, where X1 is the
/// first `split` alternatives of the X copy and X2 the rest. Alternatives
/// 0..2k-1 form the X copy. Throws std::invalid_argument unless
/// half.order() == 2 * split.
Tournament compose_structured(const Tournament& half, int split);

enum class SearchMode { uniform, structured };

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& name);

struct SearchConfig {
    int order = 0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    SearchMode mode = SearchMode::uniform;
    /// Per-trial budget; unset means unlimited.
    std::optional<std::chrono::milliseconds> time_budget;
    std::size_t witness_cap = 10;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Throws std::invalid_argument for an order outside [1, 64], zero trials, or
/// a structured order not divisible by 4.
void validate(const SearchConfig& config);

struct Witness {
    std::uint64_t trial = 0;
    std::uint64_t trial_seed = 0;
    int minimal_set_count = 0;
    std::string tournament;  ///< canonical text format
};

struct SearchReport {
    SearchConfig config;
    std::uint64_t trials_run = 0;
    std::uint64_t found = 0;      ///< trials with at least two minimal retentive sets
    std::uint64_t timed_out = 0;
    /// Number of minimal retentive sets -> trial count.
    std::map<int, std::uint64_t> multiplicity;
    /// Lowest-indexed findings, at most config.witness_cap of them.
    std::vector<Witness> witnesses;

    double total_seconds = 0.0;
    double max_trial_seconds = 0.0;
    double mean_trial_seconds = 0.0;

    /// Equality of everything except timing.
    bool same_outcome(const SearchReport& other) const;
};

/// Draws the tournament a trial works on from its derived seed: the whole
/// tournament in uniform mode, the half in structured mode.
using TrialSource = std::function<Tournament(std::uint64_t trial_seed)>;

/// Runs config.trials independent trials. Trial t uses
/// derive_seed(config.seed, t), so the report does not depend on scheduling.
SearchReport search_random(const SearchConfig& config);

/// As search_random with the per-trial draw replaced.
SearchReport search_with_source(const SearchConfig& config, const TrialSource& source);

std::string format_search_report(const SearchReport& report);

/// Writes each witness as witness-<trial>.txt under `directory` (created if
/// missing). Returns the paths written.
std::vector<std::string> write_witnesses(const SearchReport& report, const std::string& directory);

}  // namespace teqset
