#pragma once

#include <utility>
#include <vector>

#include "slotmarket/model.hpp"

namespace slotmarket {

/// Edge-weighted bipartite graph of the assignment market. Left side holds
/// the flights plus a dummy node absorbing unused slot capacity; each slot s
/// carries cap(s) parallel unit-weight dummy edges, stored by multiplicity.
struct MatchGraph {
  std::vector<FlightId> flights;    // sorted by id
  std::vector<SlotId> slots;        // sorted by (time_index, id)
  std::vector<int> slot_capacity;   // b_s = cap(s); doubles as dummy-edge multiplicity
  std::vector<int> slot_time_index;

  // flight_edges[f] = (slot index, c_is) for every s in W(f), in slot order
  std::vector<std::vector<std::pair<int, Cost>>> flight_edges;

  long long dummy_b = 0;  // b_v = Σ cap(s) − |A|

  int slot_index(const SlotId& id) const;
  int flight_index(const FlightId& id) const;
  // Number of slots carrying at least one dummy edge.
  int dummy_edge_classes() const;
};

// Throws InfeasibleError when Σ cap < |A|.
MatchGraph build_match_graph(const Instance& inst);

/// Node potentials of the b-matching dual, normalized so the dummy node has
/// potential 1. Feasibility: q_i + q_s <= c_is on flight edges and
/// q_v + q_s <= 1 on dummy edges, with equality on matched edges.
struct DualPotentials {
  std::map<FlightId, Cost> flight;  // q_i (equals the flight's total cost t_i)
  std::map<SlotId, Cost> slot;      // q_s (equals -p_s)
  Cost dummy = 1;                   // q_v
};

struct BMatchResult {
  Schedule schedule;
  DualPotentials duals;
  Cost objective = 0;  // Σ c_is over the matched flight edges
};

// Minimum-weight perfect b-matching via successive shortest paths with node
// potentials. Deterministic: ties broken by flight id, then slot time_index.
// Throws InfeasibleError when some flight cannot be saturated.
BMatchResult solve_min_bmatching(const MatchGraph& g);
BMatchResult solve_min_bmatching(const Instance& inst);

}  // namespace slotmarket
