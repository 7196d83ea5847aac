#include "doctest.h"

#include "fixtures.hpp"
#include "generators.hpp"
#include "slotmarket/bmatch.hpp"
#include "slotmarket/oracle.hpp"

using namespace slotmarket;
namespace tt = slotmarket::testing;

namespace {

// Exact complementary slackness and duality checks for a solve result.
void check_optimality_certificate(const Instance& inst, const BMatchResult& result) {
  // Schedule invariants: every flight assigned inside its window, caps kept.
  CHECK(total_delay_cost(inst, result.schedule) == result.objective);

  std::map<SlotId, int> occupancy;
  for (const auto& s : inst.slots) occupancy[s.id] = 0;
  for (const auto& [f, s] : result.schedule.assignment) {
    (void)f;
    ++occupancy[s];
  }

  CHECK(result.duals.dummy == 1);
  for (const auto& f : inst.flights) {
    const Cost qi = result.duals.flight.at(f.id);
    const SlotId& assigned = result.schedule.assignment.at(f.id);
    for (const auto& [s, c] : f.delay_cost) {
      const Cost qs = result.duals.slot.at(s);
      // Dual feasibility on every flight edge, tight on the matched one.
      CHECK(qi + qs <= c);
      if (s == assigned) CHECK(qi + qs == c);
    }
  }
  Cost dual_objective = 0;
  for (const auto& f : inst.flights) dual_objective += result.duals.flight.at(f.id);
  for (const auto& s : inst.slots) {
    const Cost qs = result.duals.slot.at(s.id);
    const Cost price = -qs;
    CHECK(price >= 0);
    // Dummy edge feasibility q_v + q_s <= 1, tight where slack is absorbed.
    CHECK(1 + qs <= 1);
    if (occupancy[s.id] < s.capacity) CHECK(price == 0);
    dual_objective += static_cast<Cost>(s.capacity) * qs;
  }
  // Strong duality of the underlying LP, exact in integers.
  CHECK(dual_objective == result.objective);
}

}  // namespace

TEST_CASE("build_match_graph computes b-values and dummy edges") {
  Instance inst;
  inst.slots = {{"s1", 1, 0}, {"s2", 2, 1}};
  inst.flights = {{"f1", "AA", {"s1", "s2"}, {{"s1", 0}, {"s2", 1}}}};
  MatchGraph g = build_match_graph(inst);
  CHECK(g.dummy_b == 2);  // Σcap − |A| = 3 − 1
  CHECK(g.dummy_edge_classes() == 2);
  CHECK(g.slot_capacity[g.slot_index("s1")] == 1);
  CHECK(g.slot_capacity[g.slot_index("s2")] == 2);
}

TEST_CASE("build_match_graph: |A| = Σcap isolates the dummy node") {
  MatchGraph g = build_match_graph(tt::two_flight_contention());
  CHECK(g.dummy_b == 0);
  CHECK(g.dummy_edge_classes() == 2);
  int flight_edges = 0;
  for (const auto& edges : g.flight_edges) flight_edges += static_cast<int>(edges.size());
  CHECK(flight_edges == 4);
}

TEST_CASE("build_match_graph rejects capacity deficit") {
  Instance inst;
  inst.slots = {{"s1", 1, 0}};
  inst.flights = {{"f1", "AA", {"s1"}, {{"s1", 0}}},
                  {"f2", "BB", {"s1"}, {{"s1", 0}}}};
  CHECK_THROWS_AS(build_match_graph(inst), InfeasibleError);
}

TEST_CASE("solve_min_bmatching resolves the two-flight contention") {
  BMatchResult result = solve_min_bmatching(tt::two_flight_contention());
  CHECK(result.objective == 4);
  CHECK(result.schedule.assignment.at("f1") == "s1");
  CHECK(result.schedule.assignment.at("f2") == "s2");
  check_optimality_certificate(tt::two_flight_contention(), result);
}

TEST_CASE("solve_min_bmatching on the trivial instance") {
  BMatchResult result = solve_min_bmatching(tt::single_flight());
  CHECK(result.objective == 0);
  CHECK(result.schedule.assignment.at("f1") == "s1");
}

TEST_CASE("solve_min_bmatching detects a Hall violation inside windows") {
  CHECK_THROWS_AS(solve_min_bmatching(tt::hall_violation()), InfeasibleError);
}

TEST_CASE("solver matches exhaustive enumeration on random small instances") {
  std::mt19937_64 rng(tt::test_seed());
  int solved = 0;
  while (solved < 200) {
    Instance inst = tt::random_instance(rng);
    bool oracle_feasible = true;
    Cost oracle_objective = 0;
    try {
      oracle_objective = oracle::enumerate_optimal_schedules(inst).objective;
    } catch (const InfeasibleError&) {
      oracle_feasible = false;
    }
    if (!oracle_feasible) {
      CHECK_THROWS_AS(solve_min_bmatching(inst), InfeasibleError);
      continue;
    }
    BMatchResult result = solve_min_bmatching(inst);
    CHECK(result.objective == oracle_objective);
    check_optimality_certificate(inst, result);
    ++solved;
  }
}

TEST_CASE("repeated solves are reproducible") {
  std::mt19937_64 rng(tt::test_seed() + 1);
  for (int k = 0; k < 20; ++k) {
    Instance inst = tt::random_instance(rng);
    try {
      BMatchResult a = solve_min_bmatching(inst);
      BMatchResult b = solve_min_bmatching(inst);
      CHECK(a.schedule.assignment == b.schedule.assignment);
      CHECK(a.duals.slot == b.duals.slot);
    } catch (const InfeasibleError&) {
    }
  }
}
