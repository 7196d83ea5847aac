#include "slotmarket/horizon.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "slotmarket/equilibrium.hpp"

namespace slotmarket {

ValidationReport validate_scenario(const WindowedScenario& scn) {
  ValidationReport report;
  std::set<FlightId> seen;
  for (const auto& [airport, rounds] : scn.airports) {
    std::int64_t last_ts = std::numeric_limits<std::int64_t>::min();
    for (std::size_t r = 0; r < rounds.size(); ++r) {
      const std::string where = "airport " + airport + " round " + std::to_string(r);
      if (rounds[r].timestamp < last_ts) {
        report.violations.push_back(where + ": timestamps out of order");
      }
      last_ts = rounds[r].timestamp;
      auto inst_report = validate_instance(rounds[r].instance);
      for (const auto& v : inst_report.violations) {
        report.violations.push_back(where + ": " + v);
      }
      report.capacity_deficits += inst_report.capacity_deficits;
      for (const auto& f : rounds[r].instance.flights) {
        if (!seen.insert(f.id).second) {
          report.violations.push_back(where + ": flight " + f.id +
                                      " appears in more than one round");
        }
      }
    }
  }
  return report;
}

ClearingLog run_horizon(const WindowedScenario& scn, const CostUpdateHook& hook,
                        InfeasiblePolicy policy) {
  {
    // Capacity deficits are left to per-round clearing so the infeasible
    // policy decides their fate; only structural breaches abort up front.
    auto report = validate_scenario(scn);
    if (!report.structurally_ok()) {
      for (const auto& v : report.violations) {
        if (v.find("total capacity") == std::string::npos) {
          throw Error("invalid scenario: " + v);
        }
      }
    }
  }

  // Flatten to (timestamp, airport) order; airports map is already id-sorted.
  struct Pending {
    std::int64_t timestamp;
    AirportId airport;
    const Round* round;
  };
  std::vector<Pending> pending;
  for (const auto& [airport, rounds] : scn.airports) {
    for (const auto& r : rounds) pending.push_back({r.timestamp, airport, &r});
  }
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return std::tie(a.timestamp, a.airport) < std::tie(b.timestamp, b.airport);
  });

  ClearingLog log;
  std::size_t earlier_count = 0;  // outcomes with strictly earlier timestamps

  for (const auto& item : pending) {
    while (earlier_count < log.rounds.size() &&
           log.rounds[earlier_count].timestamp < item.timestamp) {
      ++earlier_count;
    }
    std::vector<RoundOutcome> earlier(log.rounds.begin(),
                                      log.rounds.begin() + earlier_count);

    Instance instance = item.round->instance;
    if (hook) hook(earlier, item.airport, instance);
    {
      auto report = validate_instance(instance);
      if (!report.structurally_ok()) {
        throw Error("hook produced an invalid instance: " + report.violations.front());
      }
    }

    RoundOutcome entry;
    entry.airport = item.airport;
    entry.timestamp = item.timestamp;
    try {
      entry.outcome = clear_market(instance, PriceSelection::Minimum);
      for (const auto& f : instance.flights) entry.airline[f.id] = f.airline;
      for (const auto& f : instance.flights) {
        const SlotId& assigned = entry.outcome.schedule.assignment.at(f.id);
        const Cost price = entry.outcome.prices.at(assigned);
        entry.payments.pay[f.id] = price;
        entry.revenue += price;
      }
      entry.unserved_capacity =
          instance.total_capacity() - static_cast<long long>(instance.flights.size());
    } catch (const InfeasibleError& e) {
      entry.infeasible = true;
      entry.infeasible_reason = e.what();
      if (policy == InfeasiblePolicy::Abort) {
        ClearingLog partial = log;
        partial.rounds.push_back(entry);
        throw RoundInfeasibleError(item.airport, item.timestamp, e.what(),
                                   std::move(partial));
      }
      for (const auto& f : instance.flights) entry.unserved_flights.push_back(f.id);
      entry.unserved_capacity = instance.total_capacity();
    }
    log.rounds.push_back(std::move(entry));
  }
  return log;
}

CostUpdateHook late_cost_multiplier_hook(Cost factor) {
  return [factor](const std::vector<RoundOutcome>& earlier, const AirportId&,
                  Instance& upcoming) {
    // An airline is "delayed" once one of its flights landed at a slot with
    // positive delay cost: flight_cost - price > 0.
    std::set<std::string> delayed_airlines;
    for (const auto& round : earlier) {
      if (round.infeasible) continue;
      for (const auto& [flight, total] : round.outcome.flight_cost) {
        const SlotId& slot = round.outcome.schedule.assignment.at(flight);
        if (total - round.outcome.prices.at(slot) > 0) {
          delayed_airlines.insert(round.airline.at(flight));
        }
      }
    }
    for (auto& f : upcoming.flights) {
      if (delayed_airlines.count(f.airline) != 0) {
        for (auto& [s, c] : f.delay_cost) {
          if (c > 0) c *= factor;
        }
      }
    }
  };
}

}  // namespace slotmarket
