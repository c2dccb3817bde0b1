// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "support.hpp"
#include "teqset/counterexample.hpp"
#include "teqset/isomorphism.hpp"
#include "teqset/random.hpp"
#include "teqset/search.hpp"
#include "teqset/teq.hpp"
#include "teqset/text_format.hpp"

using namespace teqset;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    std::function<Outcome()> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome table_reproduction() {
    const auto start = std::chrono::steady_clock::now();
    const auto inst = build_counterexample();
    TeqCache cache(inst.tournament);
    int matches = 0;
    std::string mismatch;
    for (int i = 0; i < kHalfOrder; ++i) {
        const AltSet got = teq_of_subset(cache, dominators(inst.tournament, inst.tournament.universe(), i));
        if (got == expected_teq_table()[i]) {
            ++matches;
        } else if (mismatch.empty()) {
            mismatch = "; first mismatch " + counterexample_label(i) + ": " + format_labels(got);
        }
    }
    const double elapsed = seconds_since(start);
    return {matches == kHalfOrder && elapsed < 10.0,
            std::to_string(matches) + "/12 rows equal, " + std::to_string(elapsed) + " s (limit 10 s)" + mismatch};
}

Outcome retentiveness() {
    const auto inst = build_counterexample();
    TeqCache cache(inst.tournament);
    const bool x = is_retentive(cache, inst.x_set);
    const bool y = is_retentive(cache, inst.y_set);
    const bool disjoint = !inst.x_set.intersects(inst.y_set);
    const auto sets = minimal_retentive_sets(cache);
    bool in_x = false;
    bool in_y = false;
    for (AltSet m : sets) {
        in_x |= m.subset_of(inst.x_set);
        in_y |= m.subset_of(inst.y_set);
    }
    std::string listing;
    for (AltSet m : sets) listing += " " + format_labels(m);
    return {x && y && disjoint && sets.size() >= 2 && in_x && in_y,
            std::string("X ") + (x ? "retentive" : "not retentive") + ", Y " + (y ? "retentive" : "not retentive") +
                ", disjoint=" + (disjoint ? "yes" : "no") + ", minimal sets:" + listing};
}

Outcome symmetry() {
    const auto inst = build_counterexample();
    const Tournament& t = inst.tournament;
    TeqCache cache(t);
    int agreeing = 0;
    for (int i = 0; i < kHalfOrder; ++i) {
        const AltSet tx = teq_of_subset(cache, dominators(t, t.universe(), i));
        const AltSet ty = teq_of_subset(cache, dominators(t, t.universe(), i + kHalfOrder));
        for (int j = 0; j < kHalfOrder; ++j) agreeing += ty.contains(j + kHalfOrder) == tx.contains(j);
    }
    return {agreeing == 144, std::to_string(agreeing) + "/144 pairs agree"};
}

Outcome isomorphism() {
    const auto inst = build_counterexample();
    const auto tx = restrict(inst.tournament, inst.x_set);
    const auto ty = restrict(inst.tournament, inst.y_set);
    const auto iso = find_isomorphism(tx.tournament, ty.tournament);
    const bool valid = iso && is_isomorphism(tx.tournament, ty.tournament, iso->map);
    return {valid, valid ? "witness validated" : "no valid witness"};
}

Outcome oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    for (std::uint64_t code = 0; code < (1U << 15); ++code) {
        const Tournament t = teqset::testing::from_pair_code(6, code);
        failures += teq(t) != teq_bruteforce(t);
        ++checked;
    }
    for (int n = 7; n <= 10; ++n) {
        for (std::uint64_t k = 0; k < 1000; ++k) {
            const Tournament t = random_tournament(n, derive_seed(0x0AC1E + n, k));
            failures += teq(t) != teq_bruteforce(t);
            ++checked;
        }
    }
    return {failures == 0 && checked == 32768 + 4000,
            std::to_string(checked) + " tournaments (all 32768 of order 6, 1000 each of orders 7-10), " +
                std::to_string(failures) + " disagreements, " + std::to_string(seconds_since(start)) + " s"};
}

Outcome uniqueness_sampling() {
    std::string detail;
    bool ok = true;
    for (int n = 8; n <= 12; ++n) {
        SearchConfig c;
        c.order = n;
        c.trials = 10000;
        c.seed = 0x5A3B1E00 + n;
        const SearchReport r = search_random(c);
        const auto unique = r.multiplicity.count(1) ? r.multiplicity.at(1) : 0;
        ok &= r.trials_run == 10000 && unique == 10000 && r.timed_out == 0;
        detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
                  std::to_string(unique) + "/10000 unique";
    }
    return {ok, detail};
}

Outcome property_suites() {
    std::vector<std::string> failed;
    auto expect = [&](bool cond, const std::string& name) {
        if (!cond) failed.push_back(name);
    };

    bool nonempty = true;
    bool condorcet = true;
    bool invariant = true;
    bool warm_cold = true;
    bool round_trip = true;
    for (std::uint64_t s = 0; s < 300; ++s) {
        const int n = 1 + static_cast<int>(s % 20);
        const Tournament t = random_tournament(n, derive_seed(77, s));
        const AltSet result = teq(t);
        nonempty &= !result.empty();

        const int w = static_cast<int>(s % static_cast<std::uint64_t>(n));
        std::vector<AltSet> rows(n);
        for (int i = 0; i < n; ++i) rows[i] = t.out_set(i).without(w);
        rows[w] = t.universe().without(w);
        condorcet &= teq(Tournament::from_out_sets(n, rows)) == AltSet::singleton(w);

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            std::swap(perm[i], perm[counter_draw(s, i) % static_cast<std::uint64_t>(i + 1)]);
        }
        invariant &= IsoMapping{perm}.apply(result) == teq(teqset::testing::permuted(t, perm));

        TeqCache warm(t);
        (void)teq_of_subset(warm, t.universe());
        for (int x = 0; x < n; ++x) {
            if (t.in_set(x).empty()) continue;
            TeqCache cold(t);
            warm_cold &= teq_of_subset(cold, t.in_set(x)) == teq_of_subset(warm, t.in_set(x));
        }
        round_trip &= parse_tournament(serialize_tournament(t)) == t;
    }
    const Tournament ce = build_counterexample().tournament;
    round_trip &= parse_tournament(serialize_tournament(ce)) == ce;

    bool gen_determinism = true;
    for (int n = 1; n <= 64; n += 7) {
        gen_determinism &= serialize_tournament(random_tournament(n, 4242)) ==
                           serialize_tournament(random_tournament(n, 4242));
    }
    SearchConfig c;
    c.order = 20;
    c.trials = 100;
    c.seed = 2024;
    c.mode = SearchMode::structured;
    const bool search_determinism = search_random(c).same_outcome(search_random(c));

    expect(nonempty, "nonemptiness");
    expect(condorcet, "condorcet");
    expect(invariant, "isomorphism-invariance");
    expect(warm_cold, "cache-warm-cold");
    expect(round_trip, "round-trip");
    expect(gen_determinism, "gen-determinism");
    expect(search_determinism, "search-determinism");
    std::string detail = failed.empty() ? "7/7 properties hold" : "failed:";
    for (const auto& f : failed) detail += " " + f;
    return {failed.empty(), detail};
}

Outcome mutation_sensitivity() {
    const auto inst = build_counterexample();
    int detected = 0;
    int total = 0;
    for (int i : inst.x_set) {
        for (int j : inst.y_set) {
            ++total;
            detected += !verify_counterexample_claims(with_flipped_edge(inst, i, j)).passed();
        }
    }
    const double rate = static_cast<double>(detected) / total;
    return {rate >= 0.95, std::to_string(detected) + "/" + std::to_string(total) + " cross flips detected (" +
                              std::to_string(100.0 * rate) + "%, need >= 95%)"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "TEQ(dom_A(x_i)) table", table_reproduction},
        {2, "retentiveness of X and Y", retentiveness},
        {3, "symmetry of TEQ values", symmetry},
        {4, "isomorphism of T|X and T|Y", isomorphism},
        {5, "oracle equivalence", oracle_equivalence},
        {6, "uniqueness sampling at orders 8-12", uniqueness_sampling},
        {7, "property suites", property_suites},
        {8, "mutation sensitivity", mutation_sensitivity},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << ": " << o.detail << std::endl;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
