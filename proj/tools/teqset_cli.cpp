// Command-line front end. All alternative indices on the command line and in
// output are 1-based.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "teqset/counterexample.hpp"
#include "teqset/isomorphism.hpp"
#include "teqset/random.hpp"
#include "teqset/report_json.hpp"
#include "teqset/search.hpp"
#include "teqset/teq.hpp"
#include "teqset/text_format.hpp"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

// Input file problems map to exit code 3, argument problems to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    bool json = false;
    bool quiet = false;

    void text(const std::string& s) const {
        if (!quiet && !json) std::cout << s;
    }
    void emit(const nlohmann::json& j) const {
        if (!quiet && json) std::cout << j.dump(2) << "\n";
    }
};

teqset::Tournament load(const std::string& path) {
    try {
        return teqset::load_tournament(path);
    } catch (const teqset::FormatError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace teqset;

    CLI::App app{"Tournament equilibrium set and retentive-set toolkit (1-based indices)"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.json, "Emit machine-readable JSON");
    app.add_flag("-q,--quiet", out.quiet, "Print nothing; rely on the exit code");

    auto* verify = app.add_subcommand("verify-counterexample",
                                      "Check every claim about the embedded 24-alternative tournament");

    std::string file;
    auto* teq_cmd = app.add_subcommand("teq", "Print the tournament equilibrium set");
    teq_cmd->add_option("FILE", file, "Tournament file")->required();

    auto* minimal_cmd = app.add_subcommand("minimal-retentive", "Print each minimal TEQ-retentive set");
    minimal_cmd->add_option("FILE", file, "Tournament file")->required();

    std::string set_text;
    auto* retentive_cmd = app.add_subcommand("retentive", "Test whether a set is TEQ-retentive (exit 0/1)");
    retentive_cmd->add_option("FILE", file, "Tournament file")->required();
    retentive_cmd->add_option("--set", set_text, "Comma-separated alternatives, e.g. 1,4,7")->required();

    int alt = 0;
    std::string within_text;
    auto* dominators_cmd = app.add_subcommand("dominators", "Print the dominators of one alternative");
    dominators_cmd->add_option("FILE", file, "Tournament file")->required();
    dominators_cmd->add_option("--alt", alt, "Alternative")->required();
    dominators_cmd->add_option("--within", within_text, "Restrict to these alternatives (default: all)");

    std::string file_b;
    auto* iso_cmd = app.add_subcommand("isomorphic", "Search for an isomorphism (exit 0 found, 1 none)");
    iso_cmd->add_option("FILE_A", file, "First tournament file")->required();
    iso_cmd->add_option("FILE_B", file_b, "Second tournament file")->required();

    int order = 0;
    std::uint64_t seed = 0;
    auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random tournament to standard output");
    gen_cmd->add_option("--order", order, "Number of alternatives")->required();
    gen_cmd->add_option("--seed", seed, "64-bit seed")->required();

    SearchConfig config;
    std::string mode = "uniform";
    std::string out_dir;
    std::optional<long> budget_ms;
    auto* search_cmd = app.add_subcommand("search", "Sample tournaments with several minimal retentive sets");
    search_cmd->add_option("--order", config.order, "Number of alternatives")->required();
    search_cmd->add_option("--trials", config.trials, "Number of trials")->required();
    search_cmd->add_option("--seed", config.seed, "64-bit seed")->required();
    search_cmd->add_option("--mode", mode, "uniform or structured")
        ->check(CLI::IsMember({"uniform", "structured"}));
    search_cmd->add_option("--witness-cap", config.witness_cap, "Maximum witnesses kept");
    search_cmd->add_option("--time-budget-ms", budget_ms, "Per-trial time budget in milliseconds");
    search_cmd->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
    search_cmd->add_option("--out-dir", out_dir, "Write witness tournaments into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            const auto report = verify_counterexample_claims(build_counterexample());
            out.text(format_report(report));
            out.emit(report_to_json(report));
            return report.passed() ? 0 : kExitNegative;
        }
        if (teq_cmd->parsed()) {
            const AltSet result = teq(load(file));
            out.text(format_one_based(result) + "\n");
            out.emit({{"teq", set_to_json(result)}});
            return 0;
        }
        if (minimal_cmd->parsed()) {
            const auto sets = minimal_retentive_sets(load(file));
            for (AltSet s : sets) out.text(format_one_based(s) + "\n");
            out.emit({{"minimal_retentive_sets", sets_to_json(sets)}});
            return 0;
        }
        if (retentive_cmd->parsed()) {
            const Tournament t = load(file);
            const AltSet set = parse_one_based_list(set_text, t.order());
            TeqCache cache(t);
            const bool result = is_retentive(cache, set);
            out.text(result ? "retentive\n" : "not retentive\n");
            out.emit({{"set", set_to_json(set)}, {"retentive", result}});
            return result ? 0 : kExitNegative;
        }
        if (dominators_cmd->parsed()) {
            const Tournament t = load(file);
            if (alt < 1 || alt > t.order()) {
                throw std::invalid_argument("--alt " + std::to_string(alt) + " outside 1.." +
                                            std::to_string(t.order()));
            }
            const AltSet within = within_text.empty() ? t.universe() : parse_one_based_list(within_text, t.order());
            const AltSet result = dominators(t, within, alt - 1);
            out.text(format_one_based(result) + "\n");
            out.emit({{"alternative", alt}, {"within", set_to_json(within)}, {"dominators", set_to_json(result)}});
            return 0;
        }
        if (iso_cmd->parsed()) {
            const Tournament a = load(file);
            const Tournament b = load(file_b);
            const auto iso = find_isomorphism(a, b);
            if (!iso) {
                out.text("not isomorphic\n");
                out.emit({{"isomorphic", false}, {"mapping", nullptr}});
                return kExitNegative;
            }
            std::string mapping;
            nlohmann::json pairs = nlohmann::json::array();
            for (std::size_t i = 0; i < iso->map.size(); ++i) {
                if (!mapping.empty()) mapping += ' ';
                mapping += std::to_string(i + 1) + "->" + std::to_string(iso->map[i] + 1);
                pairs.push_back({i + 1, iso->map[i] + 1});
            }
            out.text("isomorphic\n" + mapping + "\n");
            out.emit({{"isomorphic", true}, {"mapping", pairs}});
            return 0;
        }
        if (gen_cmd->parsed()) {
            const std::string text = serialize_tournament(random_tournament(order, seed));
            out.text(text);
            out.emit({{"order", order}, {"seed", seed}, {"tournament", text}});
            return 0;
        }
        if (search_cmd->parsed()) {
            config.mode = parse_search_mode(mode);
            if (budget_ms) {
                if (*budget_ms <= 0) throw std::invalid_argument("--time-budget-ms must be positive");
                config.time_budget = std::chrono::milliseconds(*budget_ms);
            }
            const SearchReport report = search_random(config);
            if (!out_dir.empty()) write_witnesses(report, out_dir);
            out.text(format_search_report(report));
            out.emit(report_to_json(report));
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
