#include <doctest.h>

#include "teqset/counterexample.hpp"
#include "teqset/isomorphism.hpp"
#include "teqset/search.hpp"
#include "teqset/teq.hpp"
#include "teqset/text_format.hpp"

using namespace teqset;

TEST_CASE("dominator table is a tournament") {
    int total = 0;
    const auto& table = x_dominator_table();
    for (int i = 0; i < kHalfOrder; ++i) {
        total += table[i].size();
        CHECK_FALSE(table[i].contains(i));
        for (int j = 0; j < kHalfOrder; ++j) {
            if (i != j) CHECK(table[i].contains(j) != table[j].contains(i));
        }
    }
    CHECK(total == 66);
}

TEST_CASE("instance structure") {
    const auto inst = build_counterexample();
    const Tournament& t = inst.tournament;
    CHECK(t.order() == 24);
    CHECK((inst.x_set | inst.y_set) == t.universe());
    CHECK_FALSE(inst.x_set.intersects(inst.y_set));
    CHECK((inst.x1 | inst.x2) == inst.x_set);
    CHECK((inst.y1 | inst.y2) == inst.y_set);
    for (AltSet part : {inst.x1, inst.x2, inst.y1, inst.y2}) CHECK(part.size() == 6);

    auto dominates_all = [&](AltSet a, AltSet b) {
        for (int i : a) {
            if (!b.subset_of(t.out_set(i))) return false;
        }
        return true;
    };
    CHECK(dominates_all(inst.x1, inst.y2));
    CHECK(dominates_all(inst.x2, inst.y1));
    CHECK(dominates_all(inst.y1, inst.x1));
    CHECK(dominates_all(inst.y2, inst.x2));

    for (int i = 0; i < kHalfOrder; ++i) {
        for (int j = 0; j < kHalfOrder; ++j) {
            if (i != j) CHECK(t.dominates(i, j) == t.dominates(i + kHalfOrder, j + kHalfOrder));
        }
    }

    CHECK(dominators(t, inst.x_set, 4) == AltSet{1, 2, 3, 7, 9, 10});
    CHECK(dominators(t, t.universe(), 6) == (AltSet{0, 4, 5, 10, 11} | inst.y2));
    CHECK(build_counterexample().tournament == t);
}

TEST_CASE("composition reproduces the instance") {
    CHECK(compose_structured(counterexample_half(), 6) == build_counterexample().tournament);
}

TEST_CASE("labels") {
    CHECK(counterexample_label(0) == "x1");
    CHECK(counterexample_label(11) == "x12");
    CHECK(counterexample_label(12) == "y1");
    CHECK(counterexample_label(23) == "y12");
    CHECK(format_labels(AltSet{3, 7, 11}) == "{x4, x8, x12}");
}

TEST_CASE("verification of the embedded instance") {
    const auto report = verify_counterexample_claims(build_counterexample());
    CHECK(report.passed());
    CHECK(report.failed_count() == 0);
    // 12 table rows, X, 12 Y rows, Y, disjointness, isomorphism, symmetry, minimal sets
    CHECK(report.claims.size() == 30);
    for (const auto& c : report.claims) {
        INFO(c.id << ": expected " << c.expected << ", computed " << c.computed);
        CHECK(c.passed);
    }
    const auto& row12 = report.claims[11];
    CHECK(row12.id == "teq-table/x12");
    CHECK(row12.expected == "{x3, x4, x9}");
    CHECK(row12.computed == "{x3, x4, x9}");
    CHECK(report.minimal_sets.size() >= 2);
    CHECK_FALSE(report.unverified.empty());
}

TEST_CASE("verifier detects a flipped cross edge") {
    const auto inst = build_counterexample();
    // x1 (index 0) against y7 (index 18): X1 > Y2 becomes y7 > x1.
    const auto mutated = with_flipped_edge(inst, 0, 18);
    CHECK_FALSE(mutated.tournament == inst.tournament);
    const auto report = verify_counterexample_claims(mutated);
    CHECK_FALSE(report.passed());
    CHECK(report.failed_count() >= 1);
}

TEST_CASE("report text") {
    const auto text = format_report(verify_counterexample_claims(build_counterexample()));
    CHECK(text.find("PASS teq-table/x1:") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.find("all 30 claims passed") != std::string::npos);
}
