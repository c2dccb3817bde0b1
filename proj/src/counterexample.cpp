#include "teqset/counterexample.hpp"

#include <algorithm>
#include <sstream>

#include "teqset/isomorphism.hpp"
#include "teqset/teq.hpp"

namespace teqset {

namespace {

constexpr AltSet one_based(std::initializer_list<int> labels) {
    AltSet s;
    for (int l : labels) s = s.with(l - 1);
    return s;
}

constexpr std::array<AltSet, kHalfOrder> kDominators = {
    one_based({4, 5, 6, 8, 9, 12}),   // x1
    one_based({1, 6, 7, 10, 12}),     // x2
    one_based({1, 2, 6, 7, 9, 10}),   // x3
    one_based({2, 3, 7, 8, 11}),      // x4
    one_based({2, 3, 4, 8, 10, 11}),  // x5
    one_based({4, 5, 9, 11, 12}),     // x6
    one_based({1, 5, 6, 11, 12}),     // x7
    one_based({2, 3, 6, 7, 12}),      // x8
    one_based({2, 4, 5, 7, 8}),       // x9
    one_based({1, 4, 6, 7, 8, 9}),    // x10
    one_based({1, 2, 3, 8, 9, 10}),   // x11
    one_based({3, 4, 5, 9, 10, 11}),  // x12
};

constexpr std::array<AltSet, kHalfOrder> kExpectedTeq = {
    one_based({4, 8, 12}),  one_based({6, 10, 12}), one_based({6, 7, 9}),
    one_based({2, 7, 11}),  one_based({2, 8, 10}),  one_based({4, 9, 11}),
    one_based({1, 5, 11}),  one_based({3, 6, 12}),  one_based({2, 5, 7}),
    one_based({4, 6, 7}),   one_based({1, 2, 8}),   one_based({3, 4, 9}),
};

ClaimResult make_claim(std::string id, std::string description, bool passed, std::string expected,
                       std::string computed) {
    return {std::move(id), std::move(description), passed, std::move(expected), std::move(computed)};
}

}  // namespace

const std::array<AltSet, kHalfOrder>& x_dominator_table() { return kDominators; }

const std::array<AltSet, kHalfOrder>& expected_teq_table() { return kExpectedTeq; }

Tournament counterexample_half() {
    std::vector<AltSet> rows(kHalfOrder);
    for (int i = 0; i < kHalfOrder; ++i) {
        for (int j : kDominators[i]) rows[j] = rows[j].with(i);
    }
    return Tournament::from_out_sets(kHalfOrder, rows);
}

CounterexampleInstance build_counterexample() {
    constexpr int n = 2 * kHalfOrder;
    const AltSet x1 = AltSet::range(0, 6);
    const AltSet x2 = AltSet::range(6, 12);
    const AltSet y1 = AltSet::range(12, 18);
    const AltSet y2 = AltSet::range(18, 24);

    std::vector<AltSet> rows(n);
    for (int i = 0; i < kHalfOrder; ++i) {
        for (int j : kDominators[i]) {
            rows[j] = rows[j].with(i);
            rows[j + kHalfOrder] = rows[j + kHalfOrder].with(i + kHalfOrder);
        }
    }
    for (int i : x1) rows[i] |= y2;
    for (int i : x2) rows[i] |= y1;
    for (int i : y1) rows[i] |= x1;
    for (int i : y2) rows[i] |= x2;

    // Throws if the embedded table is not a tournament.
    Tournament t = Tournament::from_out_sets(n, rows);
    return {std::move(t), x1 | x2, y1 | y2, x1, x2, y1, y2};
}

CounterexampleInstance with_flipped_edge(const CounterexampleInstance& inst, int i, int j) {
    CounterexampleInstance out = inst;
    out.tournament = inst.tournament.with_flipped(i, j);
    return out;
}

std::string counterexample_label(int index) {
    if (index < kHalfOrder) return "x" + std::to_string(index + 1);
    return "y" + std::to_string(index - kHalfOrder + 1);
}

std::string format_labels(AltSet s) {
    std::string out = "{";
    for (int m : s) {
        if (out.size() > 1) out += ", ";
        out += counterexample_label(m);
    }
    return out + "}";
}

bool VerificationReport::passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
}

std::size_t VerificationReport::failed_count() const {
    return static_cast<std::size_t>(
        std::count_if(claims.begin(), claims.end(), [](const ClaimResult& c) { return !c.passed; }));
}

VerificationReport verify_counterexample_claims(const CounterexampleInstance& inst) {
    const Tournament& t = inst.tournament;
    const AltSet all = t.universe();
    const AltSet x_set = inst.x_set;
    const AltSet y_set = inst.y_set;
    TeqCache cache(t);
    VerificationReport report;

    std::array<AltSet, kHalfOrder> teq_x{};
    std::array<AltSet, kHalfOrder> teq_y{};
    for (int i = 0; i < kHalfOrder; ++i) {
        teq_x[i] = teq_of_subset(cache, dominators(t, all, i));
        teq_y[i] = teq_of_subset(cache, dominators(t, all, i + kHalfOrder));
    }

    for (int i = 0; i < kHalfOrder; ++i) {
        const std::string label = counterexample_label(i);
        const AltSet expected = kExpectedTeq[i];
        report.claims.push_back(make_claim(
            "teq-table/" + label, "TEQ(dom_A(" + label + ")) matches the published table and lies in X",
            teq_x[i] == expected && teq_x[i].subset_of(x_set), format_labels(expected),
            format_labels(teq_x[i])));
    }

    const bool x_retentive = is_retentive(cache, x_set);
    report.claims.push_back(make_claim("retentive-X", "X is TEQ-retentive", x_retentive, "retentive",
                                       x_retentive ? "retentive" : "not retentive"));

    for (int i = 0; i < kHalfOrder; ++i) {
        const std::string label = counterexample_label(i + kHalfOrder);
        report.claims.push_back(make_claim("teq-in-Y/" + label, "TEQ(dom_A(" + label + ")) lies in Y",
                                           teq_y[i].subset_of(y_set), "subset of Y",
                                           format_labels(teq_y[i])));
    }
    const bool y_retentive = is_retentive(cache, y_set);
    report.claims.push_back(make_claim("retentive-Y", "Y is TEQ-retentive", y_retentive, "retentive",
                                       y_retentive ? "retentive" : "not retentive"));

    const bool disjoint = !x_set.empty() && !y_set.empty() && !x_set.intersects(y_set);
    report.claims.push_back(make_claim(
        "disjoint-retentive", "X and Y are disjoint retentive sets, so there are two minimal ones",
        disjoint && x_retentive && y_retentive, "disjoint, both retentive",
        std::string(disjoint ? "disjoint" : "overlapping") + ", X " +
            (x_retentive ? "retentive" : "not retentive") + ", Y " +
            (y_retentive ? "retentive" : "not retentive")));

    const Restriction tx = restrict(t, x_set);
    const Restriction ty = restrict(t, y_set);
    const auto iso = find_isomorphism(tx.tournament, ty.tournament);
    const bool iso_ok = iso && is_isomorphism(tx.tournament, ty.tournament, iso->map);
    std::string iso_text = "none";
    if (iso) {
        iso_text.clear();
        for (std::size_t k = 0; k < iso->map.size(); ++k) {
            if (!iso_text.empty()) iso_text += ' ';
            iso_text += counterexample_label(tx.to_original[k]) + "->" +
                        counterexample_label(ty.to_original[iso->map[k]]);
        }
    }
    report.claims.push_back(
        make_claim("isomorphic", "T|X and T|Y are isomorphic", iso_ok, "validated bijection", iso_text));

    int mismatches = 0;
    std::string first_mismatch;
    for (int i = 0; i < kHalfOrder; ++i) {
        for (int j = 0; j < kHalfOrder; ++j) {
            if (teq_y[i].contains(j + kHalfOrder) != teq_x[i].contains(j)) {
                if (mismatches++ == 0) {
                    first_mismatch = " (first at i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1) + ")";
                }
            }
        }
    }
    report.claims.push_back(make_claim(
        "symmetry", "y_j in TEQ(dom_A(y_i)) iff x_j in TEQ(dom_A(x_i)) for all 144 pairs", mismatches == 0,
        "0 mismatching pairs", std::to_string(mismatches) + " mismatching pairs" + first_mismatch));

    report.minimal_sets = minimal_retentive_sets(cache);
    const auto& ms = report.minimal_sets;
    const bool one_in_x = std::any_of(ms.begin(), ms.end(), [&](AltSet m) { return m.subset_of(x_set); });
    const bool one_in_y = std::any_of(ms.begin(), ms.end(), [&](AltSet m) { return m.subset_of(y_set); });
    std::string ms_text = std::to_string(ms.size()) + " sets:";
    for (AltSet m : ms) ms_text += " " + format_labels(m);
    report.claims.push_back(make_claim("minimal-sets",
                                       "at least two minimal retentive sets, one inside X and one inside Y",
                                       ms.size() >= 2 && one_in_x && one_in_y, ">= 2, one in X, one in Y",
                                       ms_text));

    report.notes.push_back("set containment in the retentiveness condition is read as non-strict (subset or equal)");
    report.unverified.push_back(
        "the instance is not a counterexample to a weakening of Schwartz's conjecture: the weakening is not "
        "defined alongside the instance, so nothing is checked");
    return report;
}

std::string format_report(const VerificationReport& report) {
    std::ostringstream out;
    for (const ClaimResult& c : report.claims) {
        out << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.description << "\n";
        out << "     expected " << c.expected << "\n";
        out << "     computed " << c.computed << "\n";
    }
    out << "minimal retentive sets:";
    for (AltSet m : report.minimal_sets) out << " " << format_labels(m);
    out << "\n";
    for (const auto& n : report.notes) out << "note: " << n << "\n";
    for (const auto& u : report.unverified) out << "unverified: " << u << "\n";
    out << (report.passed() ? "all " + std::to_string(report.claims.size()) + " claims passed"
                            : std::to_string(report.failed_count()) + " of " +
                                  std::to_string(report.claims.size()) + " claims failed")
        << "\n";
    return out.str();
}

}  // namespace teqset
