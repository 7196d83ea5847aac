#include "slotmarket/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace slotmarket {
namespace oracle {

EnumerationResult enumerate_optimal_schedules(const Instance& inst) {
  if (inst.flights.size() > 8) {
    throw TooLargeError("enumeration guard: " + std::to_string(inst.flights.size()) +
                        " flights > 8");
  }
  long long combinations = 1;
  for (const auto& f : inst.flights) {
    combinations *= static_cast<long long>(f.window.size());
    if (combinations > 1'000'000) {
      throw TooLargeError("enumeration guard: assignment space exceeds 10^6");
    }
  }

  std::map<SlotId, int> remaining;
  for (const auto& s : inst.slots) remaining[s.id] = s.capacity;

  EnumerationResult result;
  result.objective = std::numeric_limits<Cost>::max();
  Schedule current;

  auto dfs = [&](auto&& self, std::size_t flight_idx, Cost cost_so_far) -> void {
    if (cost_so_far > result.objective) return;
    if (flight_idx == inst.flights.size()) {
      if (cost_so_far < result.objective) {
        result.objective = cost_so_far;
        result.optima.clear();
      }
      result.optima.push_back(current);
      return;
    }
    const Flight& f = inst.flights[flight_idx];
    for (const auto& [s, c] : f.delay_cost) {
      auto it = remaining.find(s);
      if (it == remaining.end() || it->second == 0) continue;
      --it->second;
      current.assignment[f.id] = s;
      self(self, flight_idx + 1, cost_so_far + c);
      current.assignment.erase(f.id);
      ++it->second;
    }
  };
  dfs(dfs, 0, 0);

  if (result.optima.empty()) {
    throw InfeasibleError("no capacity-feasible assignment exists");
  }
  return result;
}

PriceVector min_equilibrium_prices(const Instance& inst, const Schedule& sched) {
  const int num_slots = static_cast<int>(inst.slots.size());
  if (num_slots > 4) {
    throw TooLargeError("price-lattice guard: " + std::to_string(num_slots) +
                        " slots > 4");
  }

  std::map<SlotId, int> idx;
  std::vector<int> occupancy(num_slots, 0);
  for (int s = 0; s < num_slots; ++s) idx[inst.slots[s].id] = s;
  for (const auto& [f, s] : sched.assignment) {
    (void)f;
    ++occupancy[idx.at(s)];
  }

  // Zero-forced coordinates (condition 2) and pairwise difference constraints
  // p_a - p_b <= c_ib - c_ia from condition 1.
  std::vector<char> forced_zero(num_slots, 0);
  for (int s = 0; s < num_slots; ++s) {
    if (occupancy[s] < inst.slots[s].capacity) forced_zero[s] = 1;
  }
  struct Diff {
    int a, b;
    Cost k;  // p_a <= p_b + k
  };
  std::vector<Diff> diffs;
  for (const auto& f : inst.flights) {
    const int a = idx.at(sched.assignment.at(f.id));
    const Cost ca = f.cost_at(sched.assignment.at(f.id));
    for (const auto& [s, c] : f.delay_cost) {
      const int b = idx.at(s);
      if (b != a) diffs.push_back({a, b, c - ca});
    }
  }

  const Cost bound = inst.max_cost() * num_slots;

  // Per-level constraint split so partial assignments are always consistent.
  std::vector<std::vector<Diff>> upper(num_slots), lower(num_slots);
  for (const auto& d : diffs) {
    if (d.a > d.b) {
      upper[d.a].push_back(d);  // p_a <= p_b + k with p_b already set
    } else {
      lower[d.b].push_back(d);  // p_a <= p_b + k bounds p_b from below
    }
  }

  std::vector<Cost> value(num_slots, 0);
  std::vector<Cost> component_min(num_slots, std::numeric_limits<Cost>::max());
  std::vector<Cost> best;
  Cost best_sum = std::numeric_limits<Cost>::max();
  bool any = false;

  auto dfs = [&](auto&& self, int level) -> void {
    if (level == num_slots) {
      any = true;
      Cost sum = 0;
      for (int s = 0; s < num_slots; ++s) {
        component_min[s] = std::min(component_min[s], value[s]);
        sum += value[s];
      }
      if (sum < best_sum || (sum == best_sum && value < best)) {
        best_sum = sum;
        best = value;
      }
      return;
    }
    Cost lo = 0, hi = forced_zero[level] ? 0 : bound;
    for (const auto& d : upper[level]) hi = std::min(hi, value[d.b] + d.k);
    for (const auto& d : lower[level]) lo = std::max(lo, value[d.a] - d.k);
    for (Cost v = lo; v <= hi; ++v) {
      value[level] = v;
      self(self, level + 1);
    }
  };
  dfs(dfs, 0);

  if (!any) {
    throw NoEquilibriumPricesError("no equilibrium price vector on the lattice");
  }
  if (best != component_min) {
    throw NotLatticeMinError("min-sum vector differs from the component-wise minimum");
  }
  if (bound > 0) {
    for (int s = 0; s < num_slots; ++s) {
      if (component_min[s] >= bound) {
        throw NotLatticeMinError("lattice minimum touches the search bound");
      }
    }
  }

  PriceVector result;
  for (int s = 0; s < num_slots; ++s) result.price[inst.slots[s].id] = component_min[s];
  return result;
}

}  // namespace oracle
}  // namespace slotmarket
