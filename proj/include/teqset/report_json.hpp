#pragma once

#include <json.hpp>

#include "teqset/alt_set.hpp"
#include "teqset/counterexample.hpp"
#include "teqset/search.hpp"

namespace teqset {

/// Sorted 1-based member list.
nlohmann::json set_to_json(AltSet s);
nlohmann::json sets_to_json(const std::vector<AltSet>& sets);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json report_to_json(const SearchReport& report);

}  // namespace teqset
