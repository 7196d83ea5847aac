#pragma once

#include "slotmarket/model.hpp"

namespace slotmarket {
namespace oracle {

struct EnumerationResult {
  Cost objective = 0;
  std::vector<Schedule> optima;  // every argmin schedule
};

/// Exhaustively enumerates all capacity-feasible assignments.
/// Guards: |A| <= 8 and Π|W(i)| <= 10^6, else TooLargeError.
/// Throws InfeasibleError when no feasible assignment exists.
EnumerationResult enumerate_optimal_schedules(const Instance& inst);

/// Scans the integer price lattice [0, maxcost*|S|]^|S| for vectors
/// satisfying both equilibrium conditions for sched, and returns the
/// component-wise minimum. Errors if no equilibrium prices exist or the
/// lattice minimum is not attained by a single vector (both would signal a
/// bug elsewhere). Guard: |S| <= 4.
PriceVector min_equilibrium_prices(const Instance& inst, const Schedule& sched);

}  // namespace oracle
}  // namespace slotmarket
