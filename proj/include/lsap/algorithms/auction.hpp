#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "lsap/algorithms/domain.hpp"
#include "lsap/error.hpp"

namespace lsap {

struct AuctionParams {
  std::int64_t eps0 = 1;  // starting step on the (n+1)-scaled costs
  Ratio alpha{};
  std::int64_t bid_cap = 0;  // per phase; 0 picks a default
};

inline std::int64_t auction_default_bid_cap(std::size_t n, Ratio alpha) {
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t a = (alpha.num + alpha.den - 1) / alpha.den;
  return 1000 + 16 * (a + 1) * nn * nn * nn;
}

// Gauss-Seidel auction for minimum cost on costs scaled by (n+1), with
// epsilon scaling. Stops after the phase run at epsilon = 1, which is exact
// on the scaled problem. Duals: prices are turned into column potentials by
// label correcting against the final assignment, then scaled back by floor
// division (which keeps every difference constraint intact).
template <class D>
CoreSolution<typename D::Value> auction(D& d, const std::vector<typename D::Value>& c,
                                        std::size_t n, const AuctionParams& params) {
  using V = typename D::Value;
  OpStats& st = d.stats();
  if (params.alpha.den <= 0 || params.alpha.num <= params.alpha.den) {
    throw Error(ErrorCode::kInvalidArgument, "auction alpha must be a ratio > 1");
  }
  const auto scale = static_cast<std::int64_t>(n + 1);
  std::vector<V> cs(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) cs[k] = c[k] * scale;
  const std::int64_t cap =
      params.bid_cap > 0 ? params.bid_cap : auction_default_bid_cap(n, params.alpha);

  std::vector<V> price(n, d.constant(0));
  std::vector<long> owner(n, -1), assigned(n, -1);
  std::vector<V> vals, rest;
  std::int64_t eps = std::max<std::int64_t>(1, params.eps0);
  std::int64_t phase = 0;
  while (true) {
    std::fill(owner.begin(), owner.end(), -1);
    std::fill(assigned.begin(), assigned.end(), -1);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) queue.push_back(i);
    std::int64_t bids = 0;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      if (++bids > cap) {
        throw Error(ErrorCode::kNonTermination,
                    "auction made no progress at epsilon=" + std::to_string(eps));
      }
      ++st.steps;
      std::size_t j = 0;
      if (n > 1) {
        vals.clear();
        for (std::size_t k = 0; k < n; ++k) vals.push_back(cs[i * n + k] + price[k]);
        const auto [best_j, best] = d.argmin(vals);
        j = best_j;
        rest.clear();
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) rest.push_back(vals[k]);
        }
        const V second = d.min(rest);
        price[j] = price[j] + (second - best) + d.constant(eps);
      }
      if (owner[j] >= 0) {
        assigned[static_cast<std::size_t>(owner[j])] = -1;
        queue.push_back(static_cast<std::size_t>(owner[j]));
      }
      owner[j] = static_cast<long>(i);
      assigned[i] = static_cast<long>(j);
    }
    ++st.iterations;
    d.note(LeakKind::kIterationCount, phase++, bids);
    if (eps == 1) break;
    eps = std::max<std::int64_t>(1, eps * params.alpha.den / params.alpha.num);
  }

  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<std::size_t>(assigned[i]);

  // v'_k <- min(v'_k, min_i v'_sigma(i) + c'_ik - c'_i,sigma(i)) until stable.
  std::vector<V> vp(n);
  for (std::size_t k = 0; k < n; ++k) vp[k] = d.constant(0) - price[k];
  std::vector<V> flat(n * (n + 1)), diff(n);
  bool changed = true;
  for (std::size_t pass = 0; pass <= n + 1 && changed; ++pass) {
    for (std::size_t k = 0; k < n; ++k) {
      flat[k * (n + 1)] = vp[k];
      for (std::size_t i = 0; i < n; ++i) {
        flat[k * (n + 1) + 1 + i] = vp[sigma[i]] + cs[i * n + k] - cs[i * n + sigma[i]];
      }
    }
    std::vector<V> next = d.min_each(flat, n + 1);
    for (std::size_t k = 0; k < n; ++k) diff[k] = next[k] - vp[k];
    const std::vector<bool> same = d.is_zero(diff);
    changed = std::find(same.begin(), same.end(), false) != same.end();
    vp = std::move(next);
  }
  if (changed) throw Error(ErrorCode::kInternal, "auction duals did not settle");

  CoreSolution<V> out;
  out.col_of_row = sigma;
  out.v = d.floor_div(vp, scale);
  out.u.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.u.push_back(c[i * n + sigma[i]] - out.v[sigma[i]]);
  return out;
}

}  // namespace lsap
