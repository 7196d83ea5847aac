#pragma once

#include "slotmarket/bmatch.hpp"
#include "slotmarket/model.hpp"

namespace slotmarket {

// p_s = -q_s. Throws NotNormalizedError unless q_v = 1.
PriceVector extract_prices(const DualPotentials& duals);

struct VerificationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks both equilibrium conditions against (sched, prices):
///   (1) every flight sits at a total-cost-minimal slot of its window;
///   (2) every slot below capacity is priced zero.
/// Report-style: lists each violation with its witnesses.
VerificationReport verify_equilibrium(const Instance& inst, const Schedule& sched,
                                      const PriceVector& prices);

/// Slots as nodes; an edge s -> s' labeled i when flight i is assigned to s
/// and is indifferent between s and s' (equal total cost).
struct IndifferenceGraph {
  struct Edge {
    SlotId from;
    SlotId to;
    FlightId witness;
  };
  std::vector<SlotId> nodes;
  std::vector<Edge> edges;
};

// Throws NotEquilibriumError if (sched, prices) fails verification.
IndifferenceGraph indifference_graph(const Instance& inst, const Schedule& sched,
                                     const PriceVector& prices);

struct MinimumPricesStats {
  long long events = 0;        // price-reduction events executed
  long long safety_cap = 0;    // |S|^2 * (|A| + |S|)
};

/// Reduces an equilibrium price vector to the unique component-wise minimum
/// equilibrium prices. Repeatedly picks an unreached slot d (smallest
/// time_index), lowers every slot that can reach d in the indifference graph
/// by the largest integer step that keeps the equilibrium, and stops once
/// every slot is reachable from a zero-priced slot. The graph is recomputed
/// from scratch at every event.
/// Throws NotEquilibriumError on a bad input, IterationBoundError if the
/// safety cap is exceeded.
PriceVector minimum_prices(const Instance& inst, const Schedule& sched,
                           const PriceVector& prices,
                           MinimumPricesStats* stats = nullptr);

enum class PriceSelection { RawDuals, Minimum };

// Full single-market pipeline: solve, extract prices, optionally minimize.
EquilibriumOutcome clear_market(const Instance& inst,
                                PriceSelection selection = PriceSelection::Minimum,
                                MinimumPricesStats* stats = nullptr);

}  // namespace slotmarket
