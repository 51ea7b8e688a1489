#include <algorithm>

#include "lsap/algorithms/auction.hpp"
#include "lsap/algorithms/driver.hpp"
#include "lsap/algorithms/hungarian.hpp"
#include "lsap/algorithms/sap_acm.hpp"
#include "lsap/algorithms/sap_jv.hpp"
#include "lsap/solvers.hpp"

namespace lsap {

const char* to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kHungarian: return "hungarian";
    case Algorithm::kSapAcm: return "sap_acm";
    case Algorithm::kSapJv: return "sap_jv";
    case Algorithm::kAuction: return "auction";
    case Algorithm::kSimplex: return "simplex";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& text) {
  for (auto a : {Algorithm::kHungarian, Algorithm::kSapAcm, Algorithm::kSapJv,
                 Algorithm::kAuction, Algorithm::kSimplex}) {
    if (text == to_string(a)) return a;
  }
  if (text == "munkres") return Algorithm::kHungarian;
  if (text == "sap-acm" || text == "sap") return Algorithm::kSapAcm;
  if (text == "sap-jv" || text == "jv" || text == "lapjv") return Algorithm::kSapJv;
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + text + "'");
}

Prepared prepare(const WeightMatrix& w) {
  w.validate();
  Prepared p;
  p.rows = w.rows();
  p.cols = w.cols();
  p.n = w.side();
  p.maximize = w.sense() == Sense::kMaximize;
  p.costs.assign(p.n * p.n, 0);
  for (std::size_t i = 0; i < p.rows; ++i) {
    for (std::size_t j = 0; j < p.cols; ++j) {
      p.costs[i * p.n + j] = p.maximize ? -w(i, j) : w(i, j);
    }
  }
  return p;
}

SolverResult finish(const Prepared& prep, const WeightMatrix& w,
                    const std::vector<std::size_t>& col_of_row,
                    std::vector<std::int64_t> u, std::vector<std::int64_t> v,
                    const OpStats& stats) {
  const std::size_t n = prep.n;
  if (col_of_row.size() != n || u.size() != n || v.size() != n) {
    throw Error(ErrorCode::kInternal, "solver returned a solution of the wrong size");
  }
  if (prep.rows < prep.cols) {
    const std::int64_t a = u[prep.rows];
    for (auto& x : u) x -= a;
    for (auto& x : v) x += a;
  } else if (prep.cols < prep.rows) {
    const std::int64_t b = v[prep.cols];
    for (auto& x : v) x -= b;
    for (auto& x : u) x += b;
  }
  u.resize(prep.rows);
  v.resize(prep.cols);
  if (prep.maximize) {
    for (auto& x : u) x = -x;
    for (auto& x : v) x = -x;
  }
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < prep.rows; ++i) {
    if (col_of_row[i] < prep.cols) pairs.push_back({i, col_of_row[i]});
  }
  SolverResult r;
  r.assignment = make_assignment(w, std::move(pairs));
  r.dual = {std::move(u), std::move(v)};
  r.stats = stats;
  return r;
}

namespace {

template <class Core>
SolverResult run_clear(const WeightMatrix& w, Core core) {
  const Prepared prep = prepare(w);
  ClearDomain d;
  auto sol = core(d, prep);
  return finish(prep, w, sol.col_of_row, std::move(sol.u), std::move(sol.v), d.stats());
}

}  // namespace

SolverResult solve_hungarian(const WeightMatrix& w, const ReductionHook& hook) {
  return run_clear(w, [&](ClearDomain& d, const Prepared& p) {
    std::function<void(std::span<const std::int64_t>, std::span<const std::int64_t>)> h;
    if (hook) h = hook;
    return hungarian(d, p.costs, p.n, h);
  });
}

SolverResult solve_sap_acm(const WeightMatrix& w) {
  return run_clear(w, [](ClearDomain& d, const Prepared& p) { return sap_acm(d, p.costs, p.n); });
}

SolverResult solve_sap_jv(const WeightMatrix& w) {
  return run_clear(w, [](ClearDomain& d, const Prepared& p) { return sap_jv(d, p.costs, p.n); });
}

std::int64_t auction_initial_epsilon(const WeightMatrix& w) {
  return std::max<std::int64_t>(1, w.max_abs());
}

SolverResult solve_auction(const WeightMatrix& w, Ratio alpha) {
  const auto n = static_cast<std::int64_t>(w.side());
  const std::int64_t m = auction_initial_epsilon(w);
  // Prices can climb to about n^2 * max|w| on the scaled problem.
  constexpr std::int64_t kBudget = std::int64_t{1} << 50;
  if (m > kBudget / (n * n * (n + 1))) {
    throw Error(ErrorCode::kInstanceTooLarge, "auction price range exceeds the bit budget");
  }
  AuctionParams params;
  params.eps0 = (n + 1) * m;
  params.alpha = alpha;
  return run_clear(w, [&](ClearDomain& d, const Prepared& p) {
    return auction(d, p.costs, p.n, params);
  });
}

SolverResult solve(Algorithm algo, const WeightMatrix& w) {
  switch (algo) {
    case Algorithm::kHungarian: return solve_hungarian(w);
    case Algorithm::kSapAcm: return solve_sap_acm(w);
    case Algorithm::kSapJv: return solve_sap_jv(w);
    case Algorithm::kAuction: return solve_auction(w);
    case Algorithm::kSimplex: {
      const Prepared prep = prepare(w);
      WeightMatrix sq(prep.n, prep.n, Sense::kMinimize, std::min(62, w.bit_length() + 1));
      for (std::size_t i = 0; i < prep.n; ++i) {
        for (std::size_t j = 0; j < prep.n; ++j) sq.at(i, j) = prep.costs[i * prep.n + j];
      }
      SolverResult r = solve_simplex(to_lp(to_max_form(sq)));
      std::vector<std::size_t> col_of_row(prep.n);
      for (const auto& p : r.assignment.pairs) col_of_row[p.row] = p.col;
      return finish(prep, w, col_of_row, r.dual.u, r.dual.v, r.stats);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

}  // namespace lsap
