#pragma once

#include "lsap/leakage.hpp"
#include "lsap/mpc/engine.hpp"
#include "lsap/solvers.hpp"

namespace lsap::mpc {

struct ObliviousRun {
  SolverResult result;
  LeakageLog leakage;
  Counters counters;
  std::int64_t local_time_ns = 0;
  std::int64_t simulated_time_ns = 0;
  // Everything party 1 received, filled when config.record_views is set.
  std::vector<Fp> party1_view;
  double simulated_seconds() const { return static_cast<double>(simulated_time_ns) * 1e-9; }
};

// Public comparison width used for an instance (derived from its bit length
// and side only, never from the values).
int compare_bits_for(Algorithm algo, const WeightMatrix& w);

// Runs a solver on secret-shared weights. Weights and potentials stay shared
// for the whole run; covers, branch outcomes, zero-test results and argmin
// positions are opened and logged. With the countermeasure on, rows and
// columns are obliviously permuted first and the outputs are mapped back.
// Supported: hungarian, sap_acm, sap_jv, auction.
ObliviousRun run_oblivious(Algorithm algo, const WeightMatrix& w, const CostModel& model = {},
                           bool countermeasure = false, const EngineConfig& config = {},
                           Ratio alpha = {});

}  // namespace lsap::mpc
