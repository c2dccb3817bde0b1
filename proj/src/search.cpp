#include "teqset/search.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <thread>
#include <tuple>

#include "teqset/random.hpp"
#include "teqset/teq.hpp"
#include "teqset/text_format.hpp"

namespace teqset {

Tournament compose_structured(const Tournament& half, int split) {
    if (half.order() % 2 != 0) {
        throw std::invalid_argument("structured composition needs an even half, got order " +
                                    std::to_string(half.order()));
    }
    if (split < 1 || half.order() != 2 * split) {
        throw std::invalid_argument("split must be half the order of the half tournament");
    }
    const int m = half.order();
    const int n = 2 * m;
    check_order(n);
    const AltSet x1 = AltSet::range(0, split);
    const AltSet x2 = AltSet::range(split, m);
    const AltSet y1 = AltSet::range(m, m + split);
    const AltSet y2 = AltSet::range(m + split, n);

    std::vector<AltSet> rows(n);
    for (int i = 0; i < m; ++i) {
        rows[i] = half.out_set(i);
        rows[i + m] = AltSet(half.out_set(i).bits() << m);
    }
    for (int i : x1) rows[i] |= y2;
    for (int i : x2) rows[i] |= y1;
    for (int i : y1) rows[i] |= x1;
    for (int i : y2) rows[i] |= x2;
    return Tournament::from_out_sets(n, rows);
}

std::string to_string(SearchMode mode) {
    return mode == SearchMode::uniform ? "uniform" : "structured";
}

SearchMode parse_search_mode(const std::string& name) {
    if (name == "uniform") return SearchMode::uniform;
    if (name == "structured") return SearchMode::structured;
    throw std::invalid_argument("unknown search mode '" + name + "' (expected uniform or structured)");
}

void validate(const SearchConfig& config) {
    if (config.order < 1 || config.order > kMaxOrder) {
        throw std::invalid_argument("search order must be in 1.." + std::to_string(kMaxOrder));
    }
    if (config.trials < 1) throw std::invalid_argument("search needs at least one trial");
    if (config.mode == SearchMode::structured && config.order % 4 != 0) {
        throw std::invalid_argument("structured mode needs an order divisible by 4, got " +
                                    std::to_string(config.order));
    }
}

bool SearchReport::same_outcome(const SearchReport& other) const {
    auto key = [](const Witness& w) { return std::tie(w.trial, w.trial_seed, w.minimal_set_count, w.tournament); };
    return trials_run == other.trials_run && found == other.found && timed_out == other.timed_out &&
           multiplicity == other.multiplicity &&
           std::equal(witnesses.begin(), witnesses.end(), other.witnesses.begin(), other.witnesses.end(),
                      [&](const Witness& a, const Witness& b) { return key(a) == key(b); });
}

namespace {

struct Partial {
    std::uint64_t trials_run = 0;
    std::uint64_t found = 0;
    std::uint64_t timed_out = 0;
    std::map<int, std::uint64_t> multiplicity;
    std::vector<Witness> witnesses;
    double total_trial_seconds = 0.0;
    double max_trial_seconds = 0.0;
};

void run_worker(const SearchConfig& config, const TrialSource& source, unsigned worker, unsigned workers,
                Partial& out) {
    using clock = std::chrono::steady_clock;
    for (std::uint64_t trial = worker; trial < config.trials; trial += workers) {
        const std::uint64_t trial_seed = derive_seed(config.seed, trial);
        const auto start = clock::now();
        Tournament drawn = source(trial_seed);
        Tournament t = config.mode == SearchMode::structured ? compose_structured(drawn, drawn.order() / 2)
                                                             : std::move(drawn);
        if (t.order() != config.order) {
            throw std::logic_error("trial source produced order " + std::to_string(t.order()) +
                                   ", expected " + std::to_string(config.order));
        }
        TeqCache cache(t);
        if (config.time_budget) cache.set_deadline(start + *config.time_budget);
        try {
            const auto sets = minimal_retentive_sets(cache);
            const int count = static_cast<int>(sets.size());
            ++out.multiplicity[count];
            if (count >= 2) {
                ++out.found;
                // Each worker only ever needs its own lowest `cap` findings.
                if (out.witnesses.size() < config.witness_cap) {
                    out.witnesses.push_back({trial, trial_seed, count, serialize_tournament(t)});
                }
            }
        } catch (const TeqTimeout&) {
            ++out.timed_out;
        }
        const double seconds = std::chrono::duration<double>(clock::now() - start).count();
        out.total_trial_seconds += seconds;
        out.max_trial_seconds = std::max(out.max_trial_seconds, seconds);
        ++out.trials_run;
    }
}

}  // namespace

SearchReport search_with_source(const SearchConfig& config, const TrialSource& source) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();

    unsigned workers = config.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : config.threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));
    std::vector<Partial> partials(workers);
    if (workers == 1) {
        run_worker(config, source, 0, 1, partials[0]);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        run_worker(config, source, w, workers, partials[w]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    SearchReport report;
    report.config = config;
    double trial_seconds = 0.0;
    for (Partial& p : partials) {
        report.trials_run += p.trials_run;
        report.found += p.found;
        report.timed_out += p.timed_out;
        for (auto [count, n] : p.multiplicity) report.multiplicity[count] += n;
        report.witnesses.insert(report.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
        trial_seconds += p.total_trial_seconds;
        report.max_trial_seconds = std::max(report.max_trial_seconds, p.max_trial_seconds);
    }
    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const Witness& a, const Witness& b) { return a.trial < b.trial; });
    if (report.witnesses.size() > config.witness_cap) report.witnesses.resize(config.witness_cap);
    report.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.mean_trial_seconds = report.trials_run ? trial_seconds / static_cast<double>(report.trials_run) : 0.0;
    return report;
}

SearchReport search_random(const SearchConfig& config) {
    validate(config);
    const int drawn_order = config.mode == SearchMode::structured ? config.order / 2 : config.order;
    return search_with_source(config, [drawn_order](std::uint64_t trial_seed) {
        return random_tournament(drawn_order, trial_seed);
    });
}

std::string format_search_report(const SearchReport& report) {
    std::ostringstream out;
    const SearchConfig& c = report.config;
    out << "order " << c.order << ", mode " << to_string(c.mode) << ", seed " << c.seed << "\n";
    out << "trials run: " << report.trials_run << "\n";
    out << "with >= 2 minimal retentive sets: " << report.found << "\n";
    out << "timed out: " << report.timed_out << "\n";
    out << "minimal set counts:";
    for (auto [count, n] : report.multiplicity) out << " " << count << "x" << n;
    out << "\n";
    out << "time: total " << report.total_seconds << " s, mean trial " << report.mean_trial_seconds
        << " s, max trial " << report.max_trial_seconds << " s\n";
    for (const Witness& w : report.witnesses) {
        out << "witness trial " << w.trial << " (seed " << w.trial_seed << ", " << w.minimal_set_count
            << " minimal sets)\n";
    }
    return out.str();
}

std::vector<std::string> write_witnesses(const SearchReport& report, const std::string& directory) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);
    std::vector<std::string> paths;
    for (const Witness& w : report.witnesses) {
        const fs::path path = fs::path(directory) / ("witness-" + std::to_string(w.trial) + ".txt");
        save_tournament(parse_tournament(w.tournament), path.string());
        paths.push_back(path.string());
    }
    return paths;
}

}  // namespace teqset
