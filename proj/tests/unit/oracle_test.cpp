#include "doctest.h"

#include "fixtures.hpp"
#include "slotmarket/oracle.hpp"

using namespace slotmarket;
namespace tt = slotmarket::testing;

TEST_CASE("enumeration finds the unique contention optimum") {
  auto result = oracle::enumerate_optimal_schedules(tt::two_flight_contention());
  CHECK(result.objective == 4);
  REQUIRE(result.optima.size() == 1);
  CHECK(result.optima.front().assignment.at("f1") == "s1");
  CHECK(result.optima.front().assignment.at("f2") == "s2");
}

TEST_CASE("enumeration of the trivial instance") {
  auto result = oracle::enumerate_optimal_schedules(tt::single_flight());
  CHECK(result.objective == 0);
  CHECK(result.optima.size() == 1);
}

TEST_CASE("enumeration lists all permutation-equivalent optima") {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s2", 1, 1}};
  inst.flights = {{"f1", "AA", {"s1", "s2"}, {{"s1", 1}, {"s2", 1}}},
                  {"f2", "AA", {"s1", "s2"}, {{"s1", 1}, {"s2", 1}}}};
  auto result = oracle::enumerate_optimal_schedules(inst);
  CHECK(result.objective == 2);
  CHECK(result.optima.size() == 2);
}

TEST_CASE("enumeration guards and infeasibility") {
  Instance big;
  for (int s = 0; s < 4; ++s) big.slots.push_back({"s" + std::to_string(s), 9, s});
  for (int f = 0; f < 9; ++f) {
    Flight flight{"f" + std::to_string(f), "AA", {"s0"}, {{"s0", 0}}};
    big.flights.push_back(flight);
  }
  CHECK_THROWS_AS(oracle::enumerate_optimal_schedules(big), TooLargeError);

  CHECK_THROWS_AS(oracle::enumerate_optimal_schedules(tt::hall_violation()),
                  InfeasibleError);
}

TEST_CASE("price lattice scan on the running example") {
  Schedule sched;
  sched.assignment = {{"f1", "s1"}, {"f2", "s2"}};
  PriceVector p = oracle::min_equilibrium_prices(tt::two_flight_contention(), sched);
  CHECK(p.at("s1") == 4);
  CHECK(p.at("s2") == 0);
}

TEST_CASE("price lattice scan: underfilled instance is all-zero") {
  Instance inst;
  inst.slots = {{"s1", 2, 0}, {"s2", 2, 1}};
  inst.flights = {{"f1", "AA", {"s1", "s2"}, {{"s1", 0}, {"s2", 3}}}};
  Schedule sched;
  sched.assignment = {{"f1", "s1"}};
  PriceVector p = oracle::min_equilibrium_prices(inst, sched);
  CHECK(p.at("s1") == 0);
  CHECK(p.at("s2") == 0);
}

TEST_CASE("price lattice scan: symmetric competition stays free") {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s2", 1, 1}};
  inst.flights = {{"f1", "AA", {"s1", "s2"}, {{"s1", 0}, {"s2", 0}}},
                  {"f2", "BB", {"s1", "s2"}, {{"s1", 0}, {"s2", 0}}}};
  Schedule sched;
  sched.assignment = {{"f1", "s1"}, {"f2", "s2"}};
  PriceVector p = oracle::min_equilibrium_prices(inst, sched);
  CHECK(p.at("s1") == 0);
  CHECK(p.at("s2") == 0);
}

TEST_CASE("price lattice scan guard") {
  Instance inst;
  for (int s = 0; s < 5; ++s) inst.slots.push_back({"s" + std::to_string(s), 1, s});
  Schedule sched;
  CHECK_THROWS_AS(oracle::min_equilibrium_prices(inst, sched), TooLargeError);
}
