#pragma once

#include <cstdint>
#include <functional>

#include "slotmarket/model.hpp"
#include "slotmarket/vcg.hpp"

namespace slotmarket {

struct Round {
  std::int64_t timestamp = 0;  // rounds clear in timestamp order
  Instance instance;           // flights already in the air for this window
};

struct WindowedScenario {
  std::map<AirportId, std::vector<Round>> airports;
};

// Checks per-round instance validity and that no flight appears twice
// anywhere in the scenario.
ValidationReport validate_scenario(const WindowedScenario& scn);

struct RoundOutcome {
  AirportId airport;
  std::int64_t timestamp = 0;
  bool infeasible = false;
  std::string infeasible_reason;
  EquilibriumOutcome outcome;          // empty when infeasible
  PaymentVector payments;              // minimum price of the assigned slot
  std::map<FlightId, std::string> airline;  // airline tag per cleared flight
  Cost revenue = 0;                    // Σ assigned-slot minimum prices
  long long unserved_capacity = 0;     // Σ cap − flights landed this round
  std::vector<FlightId> unserved_flights;  // skip mode only
};

struct ClearingLog {
  std::vector<RoundOutcome> rounds;
};

/// Cost revision callback applied to each round's instance before clearing.
/// Sees only outcomes of strictly earlier timestamps, so airports clearing
/// at the same timestamp stay order-independent.
using CostUpdateHook =
    std::function<void(const std::vector<RoundOutcome>& earlier, const AirportId& airport,
                       Instance& upcoming)>;

enum class InfeasiblePolicy { Abort, Skip };

struct RoundInfeasibleError : InfeasibleError {
  AirportId airport;
  std::int64_t timestamp;
  ClearingLog partial;  // rounds cleared before the failure, plus the marker

  RoundInfeasibleError(AirportId a, std::int64_t t, const std::string& what,
                       ClearingLog log)
      : InfeasibleError("round infeasible at airport " + a + ", timestamp " +
                        std::to_string(t) + ": " + what),
        airport(std::move(a)),
        timestamp(t),
        partial(std::move(log)) {}
};

/// Clears every round in timestamp order (airports in id order within a
/// timestamp). Each clearing runs the full pipeline: solve, extract prices,
/// minimize prices, per-flight payments. Deterministic for a deterministic
/// hook. Throws RoundInfeasibleError in Abort mode; in Skip mode the round is
/// logged with its flights marked unserved.
ClearingLog run_horizon(const WindowedScenario& scn, const CostUpdateHook& hook = {},
                        InfeasiblePolicy policy = InfeasiblePolicy::Abort);

/// Built-in hook family: once an airline has had a flight land at a
/// positive-delay-cost slot, the positive cost entries of its later flights
/// are multiplied by `factor`.
CostUpdateHook late_cost_multiplier_hook(Cost factor);

}  // namespace slotmarket
