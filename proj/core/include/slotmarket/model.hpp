#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slotmarket/errors.hpp"

namespace slotmarket {

// All monetary quantities are nonnegative integers in minor currency units.
using Cost = std::int64_t;

using SlotId = std::string;
using FlightId = std::string;
using AirportId = std::string;

struct Slot {
  SlotId id;
  int capacity = 0;    // landings admitted; 0 means the slot is closed
  int time_index = 0;  // ordinal position of the slot in the period
};

struct Flight {
  FlightId id;
  std::string airline;
  std::vector<SlotId> window;          // admissible landing slots W(i)
  std::map<SlotId, Cost> delay_cost;   // c_is; domain must equal window

  Cost cost_at(const SlotId& s) const;
};

struct Instance {
  std::vector<Slot> slots;
  std::vector<Flight> flights;

  const Slot* find_slot(const SlotId& id) const;
  const Flight* find_flight(const FlightId& id) const;
  long long total_capacity() const;
  Cost max_cost() const;
};

struct Schedule {
  std::map<FlightId, SlotId> assignment;  // every flight to exactly one slot
};

struct PriceVector {
  std::map<SlotId, Cost> price;

  Cost at(const SlotId& s) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  int capacity_deficits = 0;  // violations that are Σcap < |A|, a feasibility
                              // failure rather than a malformed instance

  bool ok() const { return violations.empty(); }
  bool structurally_ok() const {
    return static_cast<int>(violations.size()) == capacity_deficits;
  }
};

// Report-style: returns the full list of invariant breaches, never throws.
ValidationReport validate_instance(const Instance& inst);

// Sum of c_{i,assignment(i)}. Throws InvalidScheduleError on a window or
// capacity violation, or if a flight is unassigned.
Cost total_delay_cost(const Instance& inst, const Schedule& sched);

struct EquilibriumOutcome {
  Schedule schedule;
  PriceVector prices;
  std::map<FlightId, Cost> flight_cost;  // t_i = p_s + c_is at the assigned slot
  Cost objective = 0;                    // Σ c_is over the assignment
  bool minimal_prices = false;
};

}  // namespace slotmarket
