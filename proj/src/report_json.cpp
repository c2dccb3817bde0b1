#include "teqset/report_json.hpp"

namespace teqset {

nlohmann::json set_to_json(AltSet s) {
    nlohmann::json out = nlohmann::json::array();
    for (int m : s) out.push_back(m + 1);
    return out;
}

nlohmann::json sets_to_json(const std::vector<AltSet>& sets) {
    nlohmann::json out = nlohmann::json::array();
    for (AltSet s : sets) out.push_back(set_to_json(s));
    return out;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json claims = nlohmann::json::array();
    for (const ClaimResult& c : report.claims) {
        claims.push_back({{"id", c.id},
                          {"description", c.description},
                          {"passed", c.passed},
                          {"expected", c.expected},
                          {"computed", c.computed}});
    }
    return {{"passed", report.passed()},
            {"claims", claims},
            {"minimal_sets", sets_to_json(report.minimal_sets)},
            {"notes", report.notes},
            {"unverified", report.unverified}};
}

nlohmann::json report_to_json(const SearchReport& report) {
    nlohmann::json multiplicity = nlohmann::json::object();
    for (auto [count, n] : report.multiplicity) multiplicity[std::to_string(count)] = n;
    nlohmann::json witnesses = nlohmann::json::array();
    for (const Witness& w : report.witnesses) {
        witnesses.push_back({{"trial", w.trial},
                             {"trial_seed", w.trial_seed},
                             {"minimal_set_count", w.minimal_set_count},
                             {"tournament", w.tournament}});
    }
    const SearchConfig& c = report.config;
    nlohmann::json config = {{"order", c.order},
                             {"trials", c.trials},
                             {"seed", c.seed},
                             {"mode", to_string(c.mode)},
                             {"witness_cap", c.witness_cap},
                             {"time_budget_ms", c.time_budget ? nlohmann::json(c.time_budget->count())
                                                              : nlohmann::json(nullptr)}};
    return {{"config", config},
            {"trials_run", report.trials_run},
            {"found", report.found},
            {"timed_out", report.timed_out},
            {"multiplicity", multiplicity},
            {"witnesses", witnesses},
            {"timing",
             {{"total_seconds", report.total_seconds},
              {"mean_trial_seconds", report.mean_trial_seconds},
              {"max_trial_seconds", report.max_trial_seconds}}}};
}

}  // namespace teqset
