// Command-line front end: scenario ingestion, market clearing, verification
// suites, and the rolling-horizon simulator.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "slotmarket/equilibrium.hpp"
#include "slotmarket/io.hpp"
#include "slotmarket/oracle.hpp"
#include "slotmarket/vcg.hpp"

namespace sm = slotmarket;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTooLarge = 4;

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file);
  if (!out) {
    throw sm::Error("cannot write " + out_file);
  }
  out << text;
}

sm::Instance load_validated_instance(const std::string& path) {
  json j = sm::io::load_json(path);
  if (sm::io::is_windowed_scenario(j)) {
    throw sm::ParseError(path + ": windowed scenario given; use the simulate command");
  }
  sm::Instance inst = sm::io::instance_from_json(j);
  auto report = sm::validate_instance(inst);
  if (!report.structurally_ok()) {
    std::ostringstream os;
    os << path << ": invalid instance";
    for (const auto& v : report.violations) os << "\n  " << v;
    throw sm::ParseError(os.str());
  }
  if (!report.ok()) {
    // Well-formed but under-capacitated: an infeasibility, not a parse error.
    throw sm::InfeasibleError(path + ": " + report.violations.front());
  }
  return inst;
}

std::string outcome_csv(const sm::Instance& inst, const sm::EquilibriumOutcome& outcome) {
  std::ostringstream os;
  os << "flight,slot,delay_cost,price,total_cost\n";
  for (const auto& [flight, slot] : outcome.schedule.assignment) {
    const sm::Flight* f = inst.find_flight(flight);
    os << flight << ',' << slot << ',' << f->cost_at(slot) << ','
       << outcome.prices.at(slot) << ',' << outcome.flight_cost.at(flight) << '\n';
  }
  return os.str();
}

int cmd_solve(const std::string& path, const std::string& prices_mode,
              const std::string& format, const std::string& out_file) {
  sm::Instance inst = load_validated_instance(path);
  const auto selection = prices_mode == "raw" ? sm::PriceSelection::RawDuals
                                              : sm::PriceSelection::Minimum;
  sm::EquilibriumOutcome outcome = sm::clear_market(inst, selection);
  if (format == "csv") {
    write_output(outcome_csv(inst, outcome), out_file);
  } else {
    write_output(sm::io::outcome_to_json(inst, outcome).dump(2) + "\n", out_file);
  }
  return kExitOk;
}

// Oracle-backed verification: solver optimality, equilibrium conditions for
// raw and minimum prices, price minimality, VCG correspondence, truthfulness.
int cmd_verify(const std::string& path, bool tamper) {
  sm::Instance inst = load_validated_instance(path);
  if (inst.slots.size() > 4) {
    throw sm::TooLargeError("verify guard: " + std::to_string(inst.slots.size()) +
                            " slots > 4");
  }

  int failures = 0;
  auto check = [&failures](bool ok, const std::string& what) {
    std::cout << (ok ? "[pass] " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  };

  auto enumeration = sm::oracle::enumerate_optimal_schedules(inst);
  sm::BMatchResult solved = sm::solve_min_bmatching(inst);
  check(solved.objective == enumeration.objective,
        "solver objective matches exhaustive enumeration");

  sm::PriceVector raw = sm::extract_prices(solved.duals);
  check(sm::verify_equilibrium(inst, solved.schedule, raw).ok(),
        "raw dual prices form an equilibrium");

  sm::PriceVector minimal = sm::minimum_prices(inst, solved.schedule, raw);
  if (tamper) {
    for (auto& [s, p] : minimal.price) p += 1;
  }
  check(sm::verify_equilibrium(inst, solved.schedule, minimal).ok(),
        "minimum prices form an equilibrium");
  sm::PriceVector oracle_min = sm::oracle::min_equilibrium_prices(inst, solved.schedule);
  check(minimal.price == oracle_min.price,
        "minimum prices match the lattice-scan oracle");

  check(sm::check_leonard(inst), "minimum prices equal VCG payments");

  bool truthful = true;
  for (const auto& f : inst.flights) {
    auto grid = sm::default_misreport_grid(inst, f.id);
    if (!sm::truthfulness_probe(inst, f.id, grid).empty()) truthful = false;
  }
  check(truthful, "no profitable misreport on the default grid");

  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_oracle(const std::string& path, const std::string& out_file) {
  sm::Instance inst = load_validated_instance(path);
  auto enumeration = sm::oracle::enumerate_optimal_schedules(inst);
  const sm::Schedule& schedule = enumeration.optima.front();

  json j;
  j["objective"] = enumeration.objective;
  j["optima_count"] = enumeration.optima.size();
  json sched = json::object();
  for (const auto& [f, s] : schedule.assignment) sched[f] = s;
  j["schedule"] = std::move(sched);
  if (inst.slots.size() <= 4) {
    sm::PriceVector prices = sm::oracle::min_equilibrium_prices(inst, schedule);
    json p = json::object();
    for (const auto& [s, v] : prices.price) p[s] = v;
    j["min_prices"] = std::move(p);
  }
  write_output(j.dump(2) + "\n", out_file);
  return kExitOk;
}

int cmd_simulate(const std::string& path, const std::string& hook_name, sm::Cost factor,
                 const std::string& on_infeasible, const std::string& out_dir) {
  json j = sm::io::load_json(path);
  sm::WindowedScenario scn;
  if (sm::io::is_windowed_scenario(j)) {
    scn = sm::io::scenario_from_json(j);
  } else {
    // Degenerate horizon: one airport, one round.
    sm::Round round;
    round.instance = sm::io::instance_from_json(j);
    scn.airports["default"].push_back(std::move(round));
  }
  {
    // Under-capacitated rounds are left in: run_horizon applies the
    // --on-infeasible policy to them.
    auto report = sm::validate_scenario(scn);
    if (!report.structurally_ok()) {
      std::ostringstream os;
      os << path << ": invalid scenario";
      for (const auto& v : report.violations) os << "\n  " << v;
      throw sm::ParseError(os.str());
    }
  }

  sm::CostUpdateHook hook;
  if (hook_name == "late-mult") {
    hook = sm::late_cost_multiplier_hook(factor);
  } else if (hook_name != "none") {
    throw sm::ParseError("unknown hook: " + hook_name);
  }
  const auto policy = on_infeasible == "skip" ? sm::InfeasiblePolicy::Skip
                                              : sm::InfeasiblePolicy::Abort;

  auto flush = [&out_dir](const sm::ClearingLog& log) {
    if (out_dir.empty()) {
      std::cout << sm::io::log_summary_csv(log);
      return;
    }
    std::filesystem::create_directories(out_dir);
    for (const auto& round : log.rounds) {
      const std::string name = "round_" + std::to_string(round.timestamp) + "_" +
                               round.airport + ".json";
      std::ofstream out(std::filesystem::path(out_dir) / name);
      out << sm::io::round_to_json(round).dump(2) << "\n";
    }
    std::ofstream summary(std::filesystem::path(out_dir) / "summary.csv");
    summary << sm::io::log_summary_csv(log);
  };

  try {
    sm::ClearingLog log = sm::run_horizon(scn, hook, policy);
    flush(log);
  } catch (const sm::RoundInfeasibleError& e) {
    flush(e.partial);
    throw;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Market-clearing engine for airport landing-slot allocation"};
  app.require_subcommand(1);

  std::string path, out_file, out_dir;
  std::string prices_mode = "min";
  std::string format = "json";
  std::string hook_name = "none";
  std::string on_infeasible = "abort";
  sm::Cost hook_factor = 2;
  bool tamper = false;

  auto* solve = app.add_subcommand("solve", "Clear a single-airport market");
  solve->add_option("scenario", path, "Scenario file (JSON)")->required();
  solve->add_option("--prices", prices_mode, "raw|min (default min)")
      ->check(CLI::IsMember({"raw", "min"}));
  solve->add_option("--format", format, "json|csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("-o,--output", out_file, "Write the report to a file");

  auto* verify = app.add_subcommand("verify", "Run oracle-backed verification checks");
  verify->add_option("scenario", path, "Scenario file (JSON)")->required();
  verify->add_flag("--tamper", tamper, "Corrupt prices to exercise failure detection");

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracle report");
  oracle->add_option("scenario", path, "Scenario file (JSON)")->required();
  oracle->add_option("-o,--output", out_file, "Write the report to a file");

  auto* simulate = app.add_subcommand("simulate", "Rolling-horizon multi-airport run");
  simulate->add_option("scenario", path, "Scenario file (JSON)")->required();
  simulate->add_option("--hook", hook_name, "none|late-mult (default none)")
      ->check(CLI::IsMember({"none", "late-mult"}));
  simulate->add_option("--hook-factor", hook_factor, "Multiplier for late-mult")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--on-infeasible", on_infeasible, "abort|skip (default abort)")
      ->check(CLI::IsMember({"abort", "skip"}));
  simulate->add_option("--out-dir", out_dir, "Directory for per-round JSON and summary.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(path, prices_mode, format, out_file);
    if (verify->parsed()) return cmd_verify(path, tamper);
    if (oracle->parsed()) return cmd_oracle(path, out_file);
    if (simulate->parsed()) {
      return cmd_simulate(path, hook_name, hook_factor, on_infeasible, out_dir);
    }
  } catch (const sm::TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const sm::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const sm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const sm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
