#include "slotmarket/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace slotmarket {

Cost Flight::cost_at(const SlotId& s) const {
  auto it = delay_cost.find(s);
  if (it == delay_cost.end()) {
    throw Error("flight " + id + " has no cost entry for slot " + s);
  }
  return it->second;
}

const Slot* Instance::find_slot(const SlotId& id) const {
  for (const auto& s : slots) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const Flight* Instance::find_flight(const FlightId& id) const {
  for (const auto& f : flights) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

long long Instance::total_capacity() const {
  long long total = 0;
  for (const auto& s : slots) total += s.capacity;
  return total;
}

Cost Instance::max_cost() const {
  Cost m = 0;
  for (const auto& f : flights) {
    for (const auto& [_, c] : f.delay_cost) m = std::max(m, c);
  }
  return m;
}

Cost PriceVector::at(const SlotId& s) const {
  auto it = price.find(s);
  if (it == price.end()) {
    throw Error("no price for slot " + s);
  }
  return it->second;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  auto add = [&report](const std::string& msg) { report.violations.push_back(msg); };

  std::set<SlotId> slot_ids;
  for (const auto& s : inst.slots) {
    if (s.id.empty()) add("slot with empty id");
    if (!slot_ids.insert(s.id).second) add("duplicate slot id: " + s.id);
    if (s.capacity < 0) {
      add("slot " + s.id + " has negative capacity " + std::to_string(s.capacity));
    }
    if (s.time_index < 0) {
      add("slot " + s.id + " has negative time_index " + std::to_string(s.time_index));
    }
  }

  std::set<FlightId> flight_ids;
  for (const auto& f : inst.flights) {
    if (f.id.empty()) add("flight with empty id");
    if (!flight_ids.insert(f.id).second) add("duplicate flight id: " + f.id);
    if (f.window.empty()) add("flight " + f.id + " has an empty window");

    std::set<SlotId> window_set(f.window.begin(), f.window.end());
    if (window_set.size() != f.window.size()) {
      add("flight " + f.id + " lists a window slot twice");
    }
    for (const auto& s : window_set) {
      if (slot_ids.count(s) == 0) {
        add("flight " + f.id + " window references unknown slot " + s);
      }
    }
    std::set<SlotId> cost_domain;
    for (const auto& [s, c] : f.delay_cost) {
      cost_domain.insert(s);
      if (c < 0) {
        add("flight " + f.id + " has negative cost " + std::to_string(c) +
            " at slot " + s);
      }
    }
    if (cost_domain != window_set) {
      add("flight " + f.id + ": cost domain != window");
    }
  }

  long long cap = inst.total_capacity();
  if (cap < static_cast<long long>(inst.flights.size())) {
    std::ostringstream os;
    os << "total capacity " << cap << " < " << inst.flights.size() << " flights";
    add(os.str());
    ++report.capacity_deficits;
  }
  return report;
}

Cost total_delay_cost(const Instance& inst, const Schedule& sched) {
  std::map<SlotId, int> occupancy;
  Cost total = 0;
  for (const auto& f : inst.flights) {
    auto it = sched.assignment.find(f.id);
    if (it == sched.assignment.end()) {
      throw InvalidScheduleError("flight " + f.id + " is unassigned");
    }
    const SlotId& s = it->second;
    auto cost_it = f.delay_cost.find(s);
    if (cost_it == f.delay_cost.end()) {
      throw InvalidScheduleError("flight " + f.id + " assigned outside its window: " + s);
    }
    total += cost_it->second;
    ++occupancy[s];
  }
  for (const auto& [s, n] : occupancy) {
    const Slot* slot = inst.find_slot(s);
    if (slot == nullptr) {
      throw InvalidScheduleError("assignment references unknown slot " + s);
    }
    if (n > slot->capacity) {
      throw InvalidScheduleError("slot " + s + " over capacity: " + std::to_string(n) +
                                 " > " + std::to_string(slot->capacity));
    }
  }
  return total;
}

}  // namespace slotmarket
