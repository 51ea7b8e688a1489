#pragma once

#include "lsap/mpc/engine.hpp"
#include "lsap/solvers.hpp"

namespace lsap::mpc {

struct SimplexCost {
  SolverResult result;  // from the cleartext run that fixes the pivot count
  Counters counters;    // modelled secure execution
  std::int64_t simulated_time_ns = 0;
};

// Cost of a secret-shared integer simplex that keeps the pivot position
// secret: per pivot a secret-index min over the objective row, a sign test,
// unit-vector extraction of the pivot column and row, a cross-multiplied
// ratio-test tree, and a fraction-free tableau update with one secret
// inversion. Comparison costs are the engine's own.
SimplexCost simplex_secure_cost(const WeightMatrix& w, const CostModel& model = {},
                                int kappa = 40);

// Counters for a given number of pivots on an s x s instance.
Counters simplex_counters(std::size_t side, std::int64_t pivots, int compare_bits);

}  // namespace lsap::mpc
