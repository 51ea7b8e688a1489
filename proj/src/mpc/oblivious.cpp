#include "lsap/mpc/oblivious.hpp"

#include <bit>

#include "lsap/algorithms/auction.hpp"
#include "lsap/algorithms/driver.hpp"
#include "lsap/algorithms/hungarian.hpp"
#include "lsap/algorithms/sap_acm.hpp"
#include "lsap/algorithms/sap_jv.hpp"
#include "lsap/mpc/domain.hpp"
#include "lsap/mpc/shuffle.hpp"

namespace lsap::mpc {
namespace {

int bit_width_u(std::uint64_t x) { return static_cast<int>(std::bit_width(x)); }

std::int64_t auction_eps0(std::size_t n, int bits) {
  return static_cast<std::int64_t>(n + 1) * ((std::int64_t{1} << bits) - 1);
}

}  // namespace

int compare_bits_for(Algorithm algo, const WeightMatrix& w) {
  const auto n = static_cast<std::uint64_t>(w.side());
  const int data = w.bit_length();
  if (algo == Algorithm::kAuction) {
    // Scaled costs, steps and prices stay below n^2 (n+1) 2^data.
    const int width = bit_width_u(n * n * (n + 1)) + data + 3;
    return width;
  }
  return data + bit_width_u(n) + 3;
}

ObliviousRun run_oblivious(Algorithm algo, const WeightMatrix& w, const CostModel& model,
                           bool countermeasure, const EngineConfig& config, Ratio alpha) {
  if (algo == Algorithm::kSimplex) {
    throw Error(ErrorCode::kInvalidArgument,
                "simplex has no oblivious execution here; see simplex_secure_cost");
  }
  const Prepared prep = prepare(w);
  const std::size_t n = prep.n;
  const int bits = compare_bits_for(algo, w);
  if (bits + config.kappa + 3 >= Fp::kBits) {
    throw Error(ErrorCode::kInstanceTooLarge, "instance too wide for the field with masking");
  }

  ObliviousRun run;
  Engine engine(config);
  const auto weights = engine.share(prep.costs, 0);

  std::vector<SharedValue> work = weights;
  ShuffleHandle handle;
  if (countermeasure) {
    Shuffled s = shuffle2d(engine, weights, n);
    work = std::move(s.matrix);
    handle = std::move(s.handle);
  }

  SecureDomain d(engine, bits, &run.leakage);
  CoreSolution<SharedValue> sol;
  switch (algo) {
    case Algorithm::kHungarian: sol = hungarian(d, work, n); break;
    case Algorithm::kSapAcm: sol = sap_acm(d, work, n); break;
    case Algorithm::kSapJv: sol = sap_jv(d, work, n); break;
    case Algorithm::kAuction: {
      AuctionParams params;
      params.eps0 = auction_eps0(n, w.bit_length());
      params.alpha = alpha;
      sol = auction(d, work, n, params);
      break;
    }
    case Algorithm::kSimplex: break;
  }

  std::vector<std::size_t> col_of_row = sol.col_of_row;
  std::vector<SharedValue> u = std::move(sol.u), v = std::move(sol.v);
  if (countermeasure) {
    // X = R^T X' C with X' public, then open X; u = R^T u', v = C^T v'.
    std::vector<SharedValue> rtx(n * n, SharedValue::from_public(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        rtx[i * n + col_of_row[a]] += handle.rows[a * n + i];
      }
    }
    std::vector<SharedValue> lhs, rhs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t b = 0; b < n; ++b) {
          lhs.push_back(rtx[i * n + b]);
          rhs.push_back(handle.cols[b * n + j]);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        lhs.push_back(handle.rows[a * n + i]);
        rhs.push_back(u[a]);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t b = 0; b < n; ++b) {
        lhs.push_back(handle.cols[b * n + j]);
        rhs.push_back(v[b]);
      }
    }
    const auto prod = engine.dot(lhs, rhs, n);
    const std::vector<SharedValue> x(prod.begin(), prod.begin() + static_cast<long>(n * n));
    u.assign(prod.begin() + static_cast<long>(n * n), prod.begin() + static_cast<long>(n * n + n));
    v.assign(prod.begin() + static_cast<long>(n * n + n), prod.end());
    const auto opened = engine.open(x);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (opened[i * n + j] == 1) col_of_row[i] = j;
      }
    }
  }

  // The optimum is opened as the sum of the selected (original) shares.
  SharedValue total = SharedValue::from_public(0);
  for (std::size_t i = 0; i < n; ++i) total += weights[i * n + col_of_row[i]];
  std::vector<SharedValue> outputs{total};
  outputs.insert(outputs.end(), u.begin(), u.end());
  outputs.insert(outputs.end(), v.begin(), v.end());
  const auto revealed = engine.open(outputs);
  std::vector<std::int64_t> uu(revealed.begin() + 1, revealed.begin() + 1 + static_cast<long>(n));
  std::vector<std::int64_t> vv(revealed.begin() + 1 + static_cast<long>(n), revealed.end());

  run.result = finish(prep, w, col_of_row, std::move(uu), std::move(vv), d.stats());
  const std::int64_t opened_cost = prep.maximize ? -revealed[0] : revealed[0];
  if (opened_cost != run.result.assignment.cost) {
    throw Error(ErrorCode::kInternal, "opened optimum disagrees with the assignment");
  }
  run.counters = engine.counters();
  if (config.record_views) run.party1_view = engine.view(1);
  run.local_time_ns = local_time_ns(run.counters, model);
  run.simulated_time_ns = simulated_time_ns(run.counters, model);
  return run;
}

}  // namespace lsap::mpc
