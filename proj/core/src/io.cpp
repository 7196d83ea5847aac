#include "slotmarket/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace slotmarket {
namespace io {

namespace {

using nlohmann::json;

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) {
    throw ParseError(path + ": expected an object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(path + ": missing field '" + key + "'");
  }
  return *it;
}

std::string require_string(const json& j, const std::string& key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_string()) {
    throw ParseError(path + "." + key + ": expected a string");
  }
  return v.get<std::string>();
}

std::int64_t require_int(const json& j, const std::string& key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_number_integer()) {
    throw ParseError(path + "." + key + ": expected an integer");
  }
  return v.get<std::int64_t>();
}

const json& require_array(const json& j, const std::string& key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_array()) {
    throw ParseError(path + "." + key + ": expected an array");
  }
  return v;
}

}  // namespace

Instance instance_from_json(const json& j, const std::string& path) {
  Instance inst;
  const json& slots = require_array(j, "slots", path);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const std::string sp = path + ".slots[" + std::to_string(k) + "]";
    Slot slot;
    slot.id = require_string(slots[k], "id", sp);
    slot.capacity = static_cast<int>(require_int(slots[k], "capacity", sp));
    slot.time_index = static_cast<int>(require_int(slots[k], "time_index", sp));
    inst.slots.push_back(std::move(slot));
  }
  const json& flights = require_array(j, "flights", path);
  for (std::size_t k = 0; k < flights.size(); ++k) {
    const std::string fp = path + ".flights[" + std::to_string(k) + "]";
    Flight flight;
    flight.id = require_string(flights[k], "id", fp);
    flight.airline = require_string(flights[k], "airline", fp);
    const json& window = require_array(flights[k], "window", fp);
    for (std::size_t w = 0; w < window.size(); ++w) {
      if (!window[w].is_string()) {
        throw ParseError(fp + ".window[" + std::to_string(w) + "]: expected a slot id");
      }
      flight.window.push_back(window[w].get<std::string>());
    }
    const json& costs = require(flights[k], "costs", fp);
    if (!costs.is_object()) {
      throw ParseError(fp + ".costs: expected an object");
    }
    for (auto it = costs.begin(); it != costs.end(); ++it) {
      if (!it.value().is_number_integer()) {
        throw ParseError(fp + ".costs." + it.key() + ": expected an integer");
      }
      flight.delay_cost[it.key()] = it.value().get<Cost>();
    }
    inst.flights.push_back(std::move(flight));
  }
  return inst;
}

json instance_to_json(const Instance& inst) {
  json slots = json::array();
  for (const auto& s : inst.slots) {
    slots.push_back({{"id", s.id}, {"capacity", s.capacity}, {"time_index", s.time_index}});
  }
  json flights = json::array();
  for (const auto& f : inst.flights) {
    json costs = json::object();
    for (const auto& [s, c] : f.delay_cost) costs[s] = c;
    flights.push_back({{"id", f.id},
                       {"airline", f.airline},
                       {"window", f.window},
                       {"costs", std::move(costs)}});
  }
  return {{"slots", std::move(slots)}, {"flights", std::move(flights)}};
}

bool is_windowed_scenario(const json& j) {
  return j.is_object() && j.contains("airports");
}

WindowedScenario scenario_from_json(const json& j) {
  WindowedScenario scn;
  const json& airports = require_array(j, "airports", "$");
  for (std::size_t a = 0; a < airports.size(); ++a) {
    const std::string ap = "$.airports[" + std::to_string(a) + "]";
    const AirportId id = require_string(airports[a], "id", ap);
    if (scn.airports.count(id) != 0) {
      throw ParseError(ap + ".id: duplicate airport " + id);
    }
    const json& rounds = require_array(airports[a], "rounds", ap);
    for (std::size_t r = 0; r < rounds.size(); ++r) {
      const std::string rp = ap + ".rounds[" + std::to_string(r) + "]";
      Round round;
      round.timestamp = require_int(rounds[r], "timestamp", rp);
      round.instance = instance_from_json(rounds[r], rp);
      scn.airports[id].push_back(std::move(round));
    }
  }
  return scn;
}

json scenario_to_json(const WindowedScenario& scn) {
  json airports = json::array();
  for (const auto& [id, rounds] : scn.airports) {
    json rs = json::array();
    for (const auto& r : rounds) {
      json round = instance_to_json(r.instance);
      round["timestamp"] = r.timestamp;
      rs.push_back(std::move(round));
    }
    airports.push_back({{"id", id}, {"rounds", std::move(rs)}});
  }
  return {{"airports", std::move(airports)}};
}

json load_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) {
    throw ParseError("cannot open " + file);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(file + ": " + e.what());
  }
  return j;
}

Instance load_instance(const std::string& file) {
  return instance_from_json(load_json(file));
}

WindowedScenario load_scenario(const std::string& file) {
  return scenario_from_json(load_json(file));
}

json outcome_to_json(const Instance& inst, const EquilibriumOutcome& outcome,
                     const PaymentVector* payments) {
  json schedule = json::object();
  for (const auto& [f, s] : outcome.schedule.assignment) schedule[f] = s;
  json prices = json::object();
  for (const auto& [s, p] : outcome.prices.price) prices[s] = p;
  json flight_cost = json::object();
  for (const auto& [f, t] : outcome.flight_cost) flight_cost[f] = t;

  Cost revenue = 0;
  for (const auto& [f, s] : outcome.schedule.assignment) {
    (void)f;
    revenue += outcome.prices.at(s);
  }

  json j = {{"schedule", std::move(schedule)},
            {"prices", std::move(prices)},
            {"flight_cost", std::move(flight_cost)},
            {"objective", outcome.objective},
            {"revenue", revenue},
            {"minimal_prices", outcome.minimal_prices}};
  (void)inst;
  if (payments != nullptr) {
    json pay = json::object();
    for (const auto& [f, p] : payments->pay) pay[f] = p;
    j["payments"] = std::move(pay);
  }
  return j;
}

json round_to_json(const RoundOutcome& round) {
  json j = {{"airport", round.airport},
            {"timestamp", round.timestamp},
            {"infeasible", round.infeasible}};
  if (round.infeasible) {
    j["reason"] = round.infeasible_reason;
    j["unserved_flights"] = round.unserved_flights;
    j["unserved_capacity"] = round.unserved_capacity;
    return j;
  }
  json schedule = json::object();
  for (const auto& [f, s] : round.outcome.schedule.assignment) schedule[f] = s;
  json prices = json::object();
  for (const auto& [s, p] : round.outcome.prices.price) prices[s] = p;
  json pay = json::object();
  for (const auto& [f, p] : round.payments.pay) pay[f] = p;
  j["schedule"] = std::move(schedule);
  j["prices"] = std::move(prices);
  j["payments"] = std::move(pay);
  j["objective"] = round.outcome.objective;
  j["revenue"] = round.revenue;
  j["unserved_capacity"] = round.unserved_capacity;
  return j;
}

std::string log_summary_csv(const ClearingLog& log) {
  std::ostringstream os;
  os << "round,airport,objective,revenue,max_price\n";
  for (const auto& r : log.rounds) {
    Cost max_price = 0;
    Cost objective = 0;
    if (!r.infeasible) {
      objective = r.outcome.objective;
      for (const auto& [s, p] : r.outcome.prices.price) {
        (void)s;
        max_price = std::max(max_price, p);
      }
    }
    os << r.timestamp << ',' << r.airport << ',';
    if (r.infeasible) {
      os << "infeasible,,";
    } else {
      os << objective << ',' << r.revenue << ',' << max_price;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace io
}  // namespace slotmarket
