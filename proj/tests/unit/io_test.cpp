#include "doctest.h"

#include "fixtures.hpp"
#include "generators.hpp"
#include "slotmarket/io.hpp"

using namespace slotmarket;
namespace tt = slotmarket::testing;
using nlohmann::json;

TEST_CASE("instance JSON round-trips for generated instances") {
  std::mt19937_64 rng(tt::test_seed() + 5);
  for (int k = 0; k < 50; ++k) {
    Instance inst = tt::random_instance(rng);
    json j = io::instance_to_json(inst);
    Instance back = io::instance_from_json(j);
    CHECK(io::instance_to_json(back) == j);
    CHECK(validate_instance(back).ok());
  }
}

TEST_CASE("scenario JSON round-trips") {
  WindowedScenario scn;
  scn.airports["JFK"] = {{0, tt::two_flight_contention()}};
  Instance other = tt::single_flight();
  other.flights[0].id = "z1";
  scn.airports["LAX"] = {{50, other}};
  json j = io::scenario_to_json(scn);
  CHECK(io::is_windowed_scenario(j));
  WindowedScenario back = io::scenario_from_json(j);
  CHECK(io::scenario_to_json(back) == j);
}

TEST_CASE("parse errors name the offending path") {
  json missing_cap = json::parse(R"({"slots":[{"id":"s1","time_index":0}],"flights":[]})");
  try {
    io::instance_from_json(missing_cap);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("$.slots[0]") != std::string::npos);
    CHECK(std::string(e.what()).find("capacity") != std::string::npos);
  }

  json bad_cost = json::parse(
      R"({"slots":[{"id":"s1","capacity":1,"time_index":0}],
          "flights":[{"id":"f1","airline":"AA","window":["s1"],"costs":{"s1":"x"}}]})");
  try {
    io::instance_from_json(bad_cost);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("$.flights[0].costs.s1") != std::string::npos);
  }
}
