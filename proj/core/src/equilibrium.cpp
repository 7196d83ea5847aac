#include "slotmarket/equilibrium.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace slotmarket {

PriceVector extract_prices(const DualPotentials& duals) {
  if (duals.dummy != 1) {
    throw NotNormalizedError("dummy-node potential is " + std::to_string(duals.dummy) +
                             ", expected 1");
  }
  PriceVector prices;
  for (const auto& [s, q] : duals.slot) {
    Cost p = -q;
    if (p < 0) {
      throw NotNormalizedError("slot " + s + " would get negative price " +
                               std::to_string(p));
    }
    prices.price[s] = p;
  }
  return prices;
}

VerificationReport verify_equilibrium(const Instance& inst, const Schedule& sched,
                                      const PriceVector& prices) {
  VerificationReport report;
  auto add = [&report](const std::string& msg) { report.violations.push_back(msg); };

  std::map<SlotId, int> occupancy;
  for (const auto& s : inst.slots) occupancy[s.id] = 0;

  for (const auto& f : inst.flights) {
    auto it = sched.assignment.find(f.id);
    if (it == sched.assignment.end()) {
      add("flight " + f.id + " is unassigned");
      continue;
    }
    const SlotId& assigned = it->second;
    auto cost_it = f.delay_cost.find(assigned);
    if (cost_it == f.delay_cost.end()) {
      add("flight " + f.id + " assigned outside its window: " + assigned);
      continue;
    }
    ++occupancy[assigned];
    const Cost total = prices.at(assigned) + cost_it->second;
    for (const auto& [s, c] : f.delay_cost) {
      const Cost alternative = prices.at(s) + c;
      if (alternative < total) {
        std::ostringstream os;
        os << "condition 1: flight " << f.id << " pays " << total << " at "
           << assigned << " but only " << alternative << " at " << s;
        add(os.str());
      }
    }
  }

  for (const auto& slot : inst.slots) {
    if (occupancy[slot.id] > slot.capacity) {
      add("slot " + slot.id + " over capacity");
    }
    if (occupancy[slot.id] < slot.capacity && prices.at(slot.id) != 0) {
      std::ostringstream os;
      os << "condition 2: slot " << slot.id << " filled " << occupancy[slot.id]
         << "/" << slot.capacity << " but priced " << prices.at(slot.id);
      add(os.str());
    }
  }
  return report;
}

IndifferenceGraph indifference_graph(const Instance& inst, const Schedule& sched,
                                     const PriceVector& prices) {
  auto report = verify_equilibrium(inst, sched, prices);
  if (!report.ok()) {
    throw NotEquilibriumError("not an equilibrium: " + report.violations.front());
  }
  IndifferenceGraph g;
  for (const auto& s : inst.slots) g.nodes.push_back(s.id);
  for (const auto& f : inst.flights) {
    const SlotId& assigned = sched.assignment.at(f.id);
    const Cost total = prices.at(assigned) + f.cost_at(assigned);
    for (const auto& [s, c] : f.delay_cost) {
      if (s != assigned && prices.at(s) + c == total) {
        g.edges.push_back({assigned, s, f.id});
      }
    }
  }
  return g;
}

namespace {

// Index-based view of the market used by the price-reduction loop.
struct IndexedMarket {
  std::vector<SlotId> slots;              // sorted by (time_index, id)
  std::vector<int> capacity;
  std::vector<int> occupancy;
  // per flight: assigned slot index and (slot index, cost) window entries
  struct FlightView {
    int assigned;
    Cost assigned_cost;
    std::vector<std::pair<int, Cost>> window;
  };
  std::vector<FlightView> flights;
};

IndexedMarket index_market(const Instance& inst, const Schedule& sched) {
  IndexedMarket m;
  std::vector<const Slot*> order;
  for (const auto& s : inst.slots) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const Slot* a, const Slot* b) {
    return std::tie(a->time_index, a->id) < std::tie(b->time_index, b->id);
  });
  std::map<SlotId, int> idx;
  for (const Slot* s : order) {
    idx[s->id] = static_cast<int>(m.slots.size());
    m.slots.push_back(s->id);
    m.capacity.push_back(s->capacity);
  }
  m.occupancy.assign(m.slots.size(), 0);
  for (const auto& f : inst.flights) {
    IndexedMarket::FlightView view;
    view.assigned = idx.at(sched.assignment.at(f.id));
    view.assigned_cost = f.cost_at(sched.assignment.at(f.id));
    for (const auto& [s, c] : f.delay_cost) view.window.emplace_back(idx.at(s), c);
    ++m.occupancy[view.assigned];
    m.flights.push_back(std::move(view));
  }
  return m;
}

}  // namespace

PriceVector minimum_prices(const Instance& inst, const Schedule& sched,
                           const PriceVector& prices, MinimumPricesStats* stats) {
  {
    auto report = verify_equilibrium(inst, sched, prices);
    if (!report.ok()) {
      throw NotEquilibriumError("not an equilibrium: " + report.violations.front());
    }
  }

  IndexedMarket m = index_market(inst, sched);
  const int num_slots = static_cast<int>(m.slots.size());
  std::vector<Cost> p(num_slots);
  for (int s = 0; s < num_slots; ++s) p[s] = prices.at(m.slots[s]);

  const long long cap = static_cast<long long>(num_slots) * num_slots *
                        (static_cast<long long>(m.flights.size()) + num_slots);
  long long events = 0;
  if (stats != nullptr) stats->safety_cap = cap;

  std::vector<std::vector<int>> forward(num_slots), backward(num_slots);
  std::vector<char> in_z(num_slots), in_d(num_slots);

  while (true) {
    // Indifference edges at the current prices.
    for (int s = 0; s < num_slots; ++s) {
      forward[s].clear();
      backward[s].clear();
    }
    for (const auto& f : m.flights) {
      const Cost total = p[f.assigned] + f.assigned_cost;
      for (const auto& [s, c] : f.window) {
        if (s != f.assigned && p[s] + c == total) {
          forward[f.assigned].push_back(s);
          backward[s].push_back(f.assigned);
        }
      }
    }

    // Z: slots reachable from a zero-priced slot.
    std::fill(in_z.begin(), in_z.end(), 0);
    std::deque<int> queue;
    for (int s = 0; s < num_slots; ++s) {
      if (p[s] == 0) {
        in_z[s] = 1;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : forward[u]) {
        if (!in_z[v]) {
          in_z[v] = 1;
          queue.push_back(v);
        }
      }
    }

    int d = -1;  // smallest time_index outside Z (slots are in time order)
    for (int s = 0; s < num_slots; ++s) {
      if (!in_z[s]) {
        d = s;
        break;
      }
    }
    if (d < 0) break;

    // D: slots that can reach d, d included. All of them are positive-priced,
    // otherwise d would be in Z.
    std::fill(in_d.begin(), in_d.end(), 0);
    in_d[d] = 1;
    queue.push_back(d);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : backward[u]) {
        if (!in_d[v]) {
          in_d[v] = 1;
          queue.push_back(v);
        }
      }
    }

    // Largest uniform decrease before a price in D hits zero or a new
    // indifference edge appears from outside D into D.
    Cost delta = std::numeric_limits<Cost>::max();
    for (int s = 0; s < num_slots; ++s) {
      if (in_d[s]) delta = std::min(delta, p[s]);
    }
    for (const auto& f : m.flights) {
      if (in_d[f.assigned]) continue;
      const Cost total = p[f.assigned] + f.assigned_cost;
      for (const auto& [s, c] : f.window) {
        if (in_d[s]) delta = std::min(delta, (p[s] + c) - total);
      }
    }
    if (delta <= 0) {
      throw IterationBoundError("non-positive price step; equilibrium invariant broken");
    }
    for (int s = 0; s < num_slots; ++s) {
      if (in_d[s]) p[s] -= delta;
    }

    if (++events > cap) {
      throw IterationBoundError("price-reduction event cap " + std::to_string(cap) +
                                " exceeded");
    }
  }

  if (stats != nullptr) stats->events = events;

  PriceVector result;
  for (int s = 0; s < num_slots; ++s) result.price[m.slots[s]] = p[s];
  return result;
}

EquilibriumOutcome clear_market(const Instance& inst, PriceSelection selection,
                                MinimumPricesStats* stats) {
  BMatchResult solved = solve_min_bmatching(inst);
  PriceVector prices = extract_prices(solved.duals);
  EquilibriumOutcome outcome;
  outcome.schedule = solved.schedule;
  outcome.objective = solved.objective;
  if (selection == PriceSelection::Minimum) {
    outcome.prices = minimum_prices(inst, solved.schedule, prices, stats);
    outcome.minimal_prices = true;
  } else {
    outcome.prices = prices;
    outcome.minimal_prices = false;
  }
  for (const auto& f : inst.flights) {
    const SlotId& assigned = outcome.schedule.assignment.at(f.id);
    outcome.flight_cost[f.id] = outcome.prices.at(assigned) + f.cost_at(assigned);
  }
  return outcome;
}

}  // namespace slotmarket
