#include "lsap/mpc/simplex_cost.hpp"

#include "lsap/mpc/oblivious.hpp"

namespace lsap::mpc {
namespace {

// A batch of k comparisons.
void compare(Counters& c, const ComparisonCost& cc, std::int64_t k) {
  if (k <= 0) return;
  c.rounds += cc.rounds;
  c.comparisons += k;
  c.multiplications += k * cc.multiplications;
  c.opened_values += k * cc.opened_values;
  c.random_bits += k * cc.random_bits;
}

// Secret-index min tree over k entries; `select` values move per comparison.
void tree(Counters& c, const ComparisonCost& cc, std::int64_t k, std::int64_t extra_rounds,
          std::int64_t select) {
  if (k <= 1) return;
  std::int64_t width = k;
  while (width > 1) {
    const std::int64_t pairs = width / 2;
    compare(c, cc, pairs);
    c.rounds += extra_rounds;
    c.multiplications += pairs * select;
    width = (width + 1) / 2;
  }
  c.min_finds += 1;
}

void entering_and_check(Counters& c, const ComparisonCost& cc, std::int64_t cols) {
  tree(c, cc, cols, 1, 2);
  compare(c, cc, 1);
  c.rounds += 1;  // open the termination bit
  c.opened_values += 1;
}

}  // namespace

Counters simplex_counters(std::size_t side, std::int64_t pivots, int compare_bits) {
  const auto s = static_cast<std::int64_t>(side);
  const std::int64_t m = 2 * s;          // constraints
  const std::int64_t cols = s * s + m;   // structural plus slack columns
  const ComparisonCost cc = comparison_cost(compare_bits);
  Counters c;
  for (std::int64_t p = 0; p < pivots; ++p) {
    entering_and_check(c, cc, cols);
    // Unit vector of the entering column, then the column itself.
    compare(c, cc, cols);
    c.rounds += 1;
    c.multiplications += (m + 1) * cols;
    // Ratio test: positivity, masking, cross-multiplied tree (2 products per
    // comparison, then select numerator, denominator and index).
    compare(c, cc, m);
    c.rounds += 1;
    c.multiplications += 2 * m;
    tree(c, cc, m, 2, 5);
    // Unit vector of the leaving row, then the pivot row.
    compare(c, cc, m);
    c.rounds += 1;
    c.multiplications += (cols + 1) * m;
    // Fraction-free update and division by the previous pivot through one
    // masked inversion.
    const std::int64_t cells = (m + 1) * (cols + 1);
    c.rounds += 1 + 2 + 1;
    c.multiplications += 2 * cells + 1 + cells;
    c.opened_values += 1;
  }
  entering_and_check(c, cc, cols);
  // Open the final primal solution.
  c.rounds += 1;
  c.opened_values += s * s;
  return c;
}

SimplexCost simplex_secure_cost(const WeightMatrix& w, const CostModel& model, int kappa) {
  SimplexCost out;
  out.result = solve(Algorithm::kSimplex, w);
  const int bits = compare_bits_for(Algorithm::kHungarian, w);
  if (bits + kappa + 3 >= Fp::kBits) {
    throw Error(ErrorCode::kInstanceTooLarge, "instance too wide for the field with masking");
  }
  out.counters = simplex_counters(w.side(), out.result.stats.iterations, bits);
  out.simulated_time_ns = simulated_time_ns(out.counters, model);
  return out;
}

}  // namespace lsap::mpc
