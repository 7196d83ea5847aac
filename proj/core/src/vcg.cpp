#include "slotmarket/vcg.hpp"

#include <algorithm>
#include <random>

#include "slotmarket/bmatch.hpp"
#include "slotmarket/equilibrium.hpp"

namespace slotmarket {

namespace {

Instance without_flight(const Instance& inst, const FlightId& id) {
  Instance rest;
  rest.slots = inst.slots;
  for (const auto& f : inst.flights) {
    if (f.id != id) rest.flights.push_back(f);
  }
  return rest;
}

Instance with_costs(const Instance& inst, const FlightId& id,
                    const std::map<SlotId, Cost>& costs) {
  Instance copy = inst;
  for (auto& f : copy.flights) {
    if (f.id == id) f.delay_cost = costs;
  }
  return copy;
}

}  // namespace

std::pair<Schedule, PaymentVector> vcg_payments(const Instance& inst) {
  BMatchResult full = solve_min_bmatching(inst);
  PaymentVector payments;
  for (const auto& f : inst.flights) {
    const Cost own_cost = f.cost_at(full.schedule.assignment.at(f.id));
    const Cost others_with_i = full.objective - own_cost;
    // Removing a flight only relaxes the problem, so this solve cannot fail.
    const Cost others_without_i =
        inst.flights.size() == 1 ? 0 : solve_min_bmatching(without_flight(inst, f.id)).objective;
    payments.pay[f.id] = others_with_i - others_without_i;
  }
  return {full.schedule, payments};
}

bool check_leonard(const Instance& inst) {
  auto [schedule, payments] = vcg_payments(inst);
  EquilibriumOutcome outcome = clear_market(inst, PriceSelection::Minimum);
  for (const auto& f : inst.flights) {
    const SlotId& assigned = outcome.schedule.assignment.at(f.id);
    if (outcome.prices.at(assigned) != payments.pay.at(f.id)) return false;
  }
  return true;
}

ProbeReport truthfulness_probe(const Instance& inst, const FlightId& flight,
                               const std::vector<std::map<SlotId, Cost>>& misreports) {
  const Flight* truthful = inst.find_flight(flight);
  if (truthful == nullptr) {
    throw Error("unknown flight: " + flight);
  }
  EquilibriumOutcome honest = clear_market(inst, PriceSelection::Minimum);
  const SlotId& honest_slot = honest.schedule.assignment.at(flight);
  const Cost honest_total = honest.prices.at(honest_slot) + truthful->cost_at(honest_slot);

  ProbeReport report;
  for (const auto& misreport : misreports) {
    EquilibriumOutcome outcome =
        clear_market(with_costs(inst, flight, misreport), PriceSelection::Minimum);
    const SlotId& slot = outcome.schedule.assignment.at(flight);
    // True delay cost, mechanism prices.
    const Cost total = outcome.prices.at(slot) + truthful->cost_at(slot);
    if (total < honest_total) {
      report.profitable.push_back({flight, misreport, honest_total, total});
    }
  }
  return report;
}

std::vector<std::map<SlotId, Cost>> default_misreport_grid(const Instance& inst,
                                                           const FlightId& flight) {
  constexpr long long kMaxReruns = 10'000;
  const Flight* f = inst.find_flight(flight);
  if (f == nullptr) {
    throw Error("unknown flight: " + flight);
  }
  const Cost hi = 2 * inst.max_cost();
  const std::size_t dims = f->window.size();

  std::vector<SlotId> window = f->window;
  std::sort(window.begin(), window.end());

  long long box = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < dims; ++i) {
    box *= hi + 1;
    if (box > kMaxReruns) {
      exhaustive = false;
      break;
    }
  }

  std::vector<std::map<SlotId, Cost>> grid;
  if (exhaustive) {
    std::vector<Cost> values(dims, 0);
    while (true) {
      std::map<SlotId, Cost> report;
      for (std::size_t i = 0; i < dims; ++i) report[window[i]] = values[i];
      grid.push_back(std::move(report));
      std::size_t carry = 0;
      while (carry < dims && ++values[carry] > hi) {
        values[carry] = 0;
        ++carry;
      }
      if (carry == dims) break;
    }
  } else {
    // Deterministic sample of the box, seeded from the flight id.
    std::seed_seq seed(flight.begin(), flight.end());
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Cost> pick(0, hi);
    for (long long k = 0; k < kMaxReruns; ++k) {
      std::map<SlotId, Cost> report;
      for (const auto& s : window) report[s] = pick(rng);
      grid.push_back(std::move(report));
    }
  }
  return grid;
}

}  // namespace slotmarket
