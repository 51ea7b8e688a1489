#include <numeric>

#include "lsap/solvers.hpp"

namespace lsap {

Assignment brute_force(const WeightMatrix& w) {
  const std::size_t s = w.side();
  if (s > 10) throw Error(ErrorCode::kInvalidArgument, "brute force is limited to side <= 10");
  const Balanced b = balance(w);
  const bool maximize = w.sense() == Sense::kMaximize;
  std::vector<std::size_t> perm(s), best;
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best_cost = 0;
  do {
    const std::int64_t c = permutation_cost(b.matrix, perm);
    if (best.empty() || (maximize ? c > best_cost : c < best_cost)) {
      best_cost = c;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    if (best[i] < w.cols()) pairs.push_back({i, best[i]});
  }
  return make_assignment(w, std::move(pairs));
}

}  // namespace lsap
