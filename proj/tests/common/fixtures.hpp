#pragma once

#include "slotmarket/model.hpp"

namespace slotmarket::testing {

// Two flights contending for the early slot; the running example across the
// test suites. Optimum: f1 -> s1, f2 -> s2, objective 4, minimum prices
// {s1: 4, s2: 0}.
inline Instance two_flight_contention() {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s2", 1, 1}};
  inst.flights = {{"f1", "AA", {"s1", "s2"}, {{"s1", 0}, {"s2", 10}}},
                  {"f2", "BB", {"s1", "s2"}, {{"s1", 0}, {"s2", 4}}}};
  return inst;
}

inline Instance single_flight() {
  Instance inst;
  inst.slots = {{"s1", 1, 0}};
  inst.flights = {{"f1", "AA", {"s1"}, {{"s1", 0}}}};
  return inst;
}

// Four unit slots, four flights whose windows overlap pairwise; the extra
// flight f4 contests s1 so prices cascade down the indifference chain.
// Minimum prices: {s1: 3, s2: 2, s3: 1, s4: 0}.
inline Instance chain_instance() {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s2", 1, 1}, {"s3", 1, 2}, {"s4", 1, 3}};
  inst.flights = {{"f1", "AA", {"s1", "s2"}, {{"s1", 0}, {"s2", 1}}},
                  {"f2", "AA", {"s2", "s3"}, {{"s2", 0}, {"s3", 1}}},
                  {"f3", "BB", {"s3", "s4"}, {{"s3", 0}, {"s4", 1}}},
                  {"f4", "CC", {"s1"}, {{"s1", 0}}}};
  return inst;
}

// Two flights whose single-slot windows both point at a unit slot.
inline Instance hall_violation() {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s2", 1, 1}};
  inst.flights = {{"f1", "AA", {"s1"}, {{"s1", 0}}},
                  {"f2", "BB", {"s1"}, {{"s1", 0}}}};
  return inst;
}

inline Instance disjoint_windows() {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s2", 1, 1}};
  inst.flights = {{"f1", "AA", {"s1"}, {{"s1", 0}}},
                  {"f2", "BB", {"s2"}, {{"s2", 0}}}};
  return inst;
}

}  // namespace slotmarket::testing
