#pragma once

#include <array>
#include <string>
#include <vector>

#include "teqset/alt_set.hpp"
#include "teqset/tournament.hpp"

namespace teqset {

/// The 24-alternative tournament with two disjoint retentive halves.
/// Indices 0-11 are x1..x12, indices 12-23 are y1..y12.
struct CounterexampleInstance {
    Tournament tournament;
    AltSet x_set;
    AltSet y_set;
    AltSet x1;  ///< x1..x6
    AltSet x2;  ///< x7..x12
    AltSet y1;  ///< y1..y6
    AltSet y2;  ///< y7..y12
};

inline constexpr int kHalfOrder = 12;

/// dom_X(x_i) for i = 1..12, as 0-based indices into X.
const std::array<AltSet, kHalfOrder>& x_dominator_table();

/// Published TEQ(dom_A(x_i)) for i = 1..12, as 0-based indices into X.
const std::array<AltSet, kHalfOrder>& expected_teq_table();

/// T|X as an order-12 tournament.
Tournament counterexample_half();

/// Builds the instance: X and Y both carry the dominator table, and across the
/// halves X1 > Y2, X2 > Y1, Y1 > X1, Y2 > X2.
CounterexampleInstance build_counterexample();

/// Same instance with the pair (i, j) reversed. Test hook for checking that
/// the verifier can fail.
CounterexampleInstance with_flipped_edge(const CounterexampleInstance& inst, int i, int j);

/// "x1".."x12" for 0..11, "y1".."y12" for 12..23.
std::string counterexample_label(int index);
std::string format_labels(AltSet s);

struct ClaimResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string expected;
    std::string computed;
};

struct VerificationReport {
    std::vector<ClaimResult> claims;
    /// The minimal retentive sets actually found, for information only.
    std::vector<AltSet> minimal_sets;
    /// How the checks read the definitions.
    std::vector<std::string> notes;
    /// Statements that were deliberately not checked.
    std::vector<std::string> unverified;

    bool passed() const;
    std::size_t failed_count() const;
};

/// Recomputes every published claim about the instance from its tournament.
/// Failures are reported as entries, never thrown.
VerificationReport verify_counterexample_claims(const CounterexampleInstance& inst);

std::string format_report(const VerificationReport& report);

}  // namespace teqset
