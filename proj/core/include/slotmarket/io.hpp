#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "slotmarket/horizon.hpp"
#include "slotmarket/model.hpp"

namespace slotmarket {
namespace io {

// Scenario schema, single market:
//   { "slots":   [ { "id", "capacity", "time_index" }, ... ],
//     "flights": [ { "id", "airline", "window": [slot ids],
//                    "costs": { slot id: integer } }, ... ] }
// Windowed scenario:
//   { "airports": [ { "id", "rounds": [ { "timestamp", "slots", "flights" } ] } ] }
//
// Parse errors throw ParseError naming the path of the offending field.

Instance instance_from_json(const nlohmann::json& j, const std::string& path = "$");
nlohmann::json instance_to_json(const Instance& inst);

WindowedScenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const WindowedScenario& scn);

bool is_windowed_scenario(const nlohmann::json& j);

Instance load_instance(const std::string& file);
WindowedScenario load_scenario(const std::string& file);
nlohmann::json load_json(const std::string& file);

nlohmann::json outcome_to_json(const Instance& inst, const EquilibriumOutcome& outcome,
                               const PaymentVector* payments = nullptr);
nlohmann::json round_to_json(const RoundOutcome& round);

// One row per round: timestamp, airport, objective, revenue, max price.
std::string log_summary_csv(const ClearingLog& log);

}  // namespace io
}  // namespace slotmarket
