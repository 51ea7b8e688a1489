#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "lsap/core.hpp"

namespace lsap {

enum class Algorithm { kHungarian, kSapAcm, kSapJv, kAuction, kSimplex };

const char* to_string(Algorithm algo);
Algorithm parse_algorithm(const std::string& text);

// Counters reported by every solver. `steps` counts main-loop steps (Munkres
// step calls, Dijkstra scans, auction bids, simplex pivots); `iterations`
// counts outer iterations (augmentations, auction phases, simplex pivots).
struct OpStats {
  std::int64_t steps = 0;
  std::int64_t zero_tests = 0;
  std::int64_t min_finds = 0;
  std::int64_t comparisons = 0;
  std::int64_t iterations = 0;
  friend bool operator==(const OpStats&, const OpStats&) = default;
};

struct SolverResult {
  Assignment assignment;
  DualSolution dual;
  OpStats stats;
};

// Auction step-size divisor as a rational num/den > 1.
struct Ratio {
  std::int64_t num = 4;
  std::int64_t den = 1;
};

// Called once after row reduction with the row minima and the reduced
// square matrix (row-major).
using ReductionHook =
    std::function<void(std::span<const std::int64_t> u, std::span<const std::int64_t> reduced)>;

// All solvers accept rectangular input (zero padding) and either sense. For
// a maximisation instance the returned duals satisfy u_i + v_j >= w_ij.
SolverResult solve_hungarian(const WeightMatrix& w, const ReductionHook& hook = {});
SolverResult solve_sap_acm(const WeightMatrix& w);
SolverResult solve_sap_jv(const WeightMatrix& w);
SolverResult solve_auction(const WeightMatrix& w, Ratio alpha = {});

// LP from to_lp(to_max_form(W)). The assignment cost and duals are reported
// for the minimisation instance offset - objective.
SolverResult solve_simplex(const LpInstance& lp);

SolverResult solve(Algorithm algo, const WeightMatrix& w);

/// Exhaustive optimum; lexicographically smallest optimal permutation wins.
Assignment brute_force(const WeightMatrix& w);

/// Largest absolute cost, the auction's starting step before (n+1) scaling.
std::int64_t auction_initial_epsilon(const WeightMatrix& w);

}  // namespace lsap
