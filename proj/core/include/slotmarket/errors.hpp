#pragma once

#include <stdexcept>
#include <string>

namespace slotmarket {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No capacity-feasible assignment exists (or total capacity < flight count).
struct InfeasibleError : Error {
  using Error::Error;
};

struct InvalidScheduleError : Error {
  using Error::Error;
};

// Dual potentials were not normalized to q_v = 1 before price extraction.
struct NotNormalizedError : Error {
  using Error::Error;
};

struct NotEquilibriumError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

// Safety cap of the price-reduction procedure exceeded; signals a bug.
struct IterationBoundError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Oracle found no equilibrium price vector; contradicts duality, signals a bug.
struct NoEquilibriumPricesError : Error {
  using Error::Error;
};

// Oracle's min-sum price vector is not the component-wise lattice minimum.
struct NotLatticeMinError : Error {
  using Error::Error;
};

}  // namespace slotmarket
