#pragma once

#include "slotmarket/model.hpp"

namespace slotmarket {

struct PaymentVector {
  std::map<FlightId, Cost> pay;  // one entry per flight, all nonnegative
};

/// Clarke-pivot payments for the cost-minimization market:
///   pay_i = (C(A) - c_{i,σ(i)}) - C(A \ {i})
/// i.e. the delay cost flight i's presence imposes on the other flights.
/// Every C(.) is an independent optimal solve over the stated flight set.
std::pair<Schedule, PaymentVector> vcg_payments(const Instance& inst);

/// True iff for every flight the minimum equilibrium price of its assigned
/// slot equals its VCG payment, both sides computed independently.
bool check_leonard(const Instance& inst);

struct ProbeReport {
  struct Deviation {
    FlightId flight;
    std::map<SlotId, Cost> misreport;
    Cost truthful_cost = 0;  // true total cost under truthful reporting
    Cost deviant_cost = 0;   // true total cost under the misreport
  };
  std::vector<Deviation> profitable;

  bool empty() const { return profitable.empty(); }
};

/// Reruns the full mechanism (solve + minimum prices) for each misreported
/// cost map and flags any that strictly lowers the flight's true total cost.
ProbeReport truthfulness_probe(const Instance& inst, const FlightId& flight,
                               const std::vector<std::map<SlotId, Cost>>& misreports);

/// Integer box [0, 2*maxcost] per window slot, enumerated exhaustively when
/// it fits and otherwise sampled deterministically, capped at 10^4 reruns.
std::vector<std::map<SlotId, Cost>> default_misreport_grid(const Instance& inst,
                                                           const FlightId& flight);

}  // namespace slotmarket
