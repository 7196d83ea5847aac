#include "doctest.h"

#include "fixtures.hpp"
#include "generators.hpp"
#include "slotmarket/model.hpp"
#include "slotmarket/oracle.hpp"

using namespace slotmarket;
namespace tt = slotmarket::testing;

TEST_CASE("validate_instance accepts the minimal well-formed instance") {
  CHECK(validate_instance(tt::single_flight()).ok());
  CHECK(validate_instance(tt::two_flight_contention()).ok());
  CHECK(validate_instance(tt::chain_instance()).ok());
}

TEST_CASE("validate_instance flags capacity deficit") {
  Instance inst;
  inst.slots = {{"s1", 1, 0}};
  inst.flights = {{"f1", "AA", {"s1"}, {{"s1", 0}}},
                  {"f2", "BB", {"s1"}, {{"s1", 0}}}};
  auto report = validate_instance(inst);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().find("total capacity 1 < 2 flights") != std::string::npos);
}

TEST_CASE("validate_instance flags cost domain mismatch") {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s2", 1, 1}};
  inst.flights = {{"f1", "AA", {"s1"}, {{"s2", 3}}}};
  auto report = validate_instance(inst);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.find("cost domain != window") != std::string::npos) found = true;
  }
  CHECK(found);
}

TEST_CASE("validate_instance flags duplicates, empty windows, negatives") {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s1", -1, 1}};
  inst.flights = {{"f1", "AA", {}, {}},
                  {"f1", "AA", {"s1"}, {{"s1", -2}}}};
  auto report = validate_instance(inst);
  const std::string all = [&] {
    std::string joined;
    for (const auto& v : report.violations) joined += v + "\n";
    return joined;
  }();
  CHECK(all.find("duplicate slot id") != std::string::npos);
  CHECK(all.find("empty window") != std::string::npos);
  CHECK(all.find("duplicate flight id") != std::string::npos);
  CHECK(all.find("negative cost") != std::string::npos);
  CHECK(all.find("negative capacity") != std::string::npos);
}

TEST_CASE("total_delay_cost sums assigned costs") {
  Instance inst = tt::single_flight();
  Schedule sched;
  sched.assignment["f1"] = "s1";
  CHECK(total_delay_cost(inst, sched) == 0);

  Instance contention = tt::two_flight_contention();
  Schedule opt;
  opt.assignment["f1"] = "s1";
  opt.assignment["f2"] = "s2";
  // Cross-checked against exhaustive enumeration (4 beats 10).
  CHECK(total_delay_cost(contention, opt) == 4);
  CHECK(oracle::enumerate_optimal_schedules(contention).objective == 4);
}

TEST_CASE("total_delay_cost rejects invalid schedules") {
  Instance inst = tt::two_flight_contention();
  Schedule outside;
  outside.assignment["f1"] = "s1";
  outside.assignment["f2"] = "nope";
  CHECK_THROWS_AS(total_delay_cost(inst, outside), InvalidScheduleError);

  Schedule over;
  over.assignment["f1"] = "s1";
  over.assignment["f2"] = "s1";
  CHECK_THROWS_AS(total_delay_cost(inst, over), InvalidScheduleError);

  Schedule missing;
  missing.assignment["f1"] = "s1";
  CHECK_THROWS_AS(total_delay_cost(inst, missing), InvalidScheduleError);
}

TEST_CASE("total cost is invariant under equal-cost permutations") {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s2", 1, 1}};
  inst.flights = {{"f1", "AA", {"s1", "s2"}, {{"s1", 2}, {"s2", 2}}},
                  {"f2", "BB", {"s1", "s2"}, {{"s1", 2}, {"s2", 2}}}};
  Schedule a, b;
  a.assignment = {{"f1", "s1"}, {"f2", "s2"}};
  b.assignment = {{"f1", "s2"}, {"f2", "s1"}};
  CHECK(total_delay_cost(inst, a) == total_delay_cost(inst, b));
}

TEST_CASE("validate_instance is empty exactly when generated instances are clean") {
  std::mt19937_64 rng(tt::test_seed());
  for (int k = 0; k < 50; ++k) {
    Instance inst = tt::random_instance(rng);
    CHECK(validate_instance(inst).ok());
    // Breaking one invariant must surface.
    Instance broken = inst;
    broken.flights.front().delay_cost.clear();
    CHECK_FALSE(validate_instance(broken).ok());
  }
}
