#pragma once

#include <vector>

#include "lsap/algorithms/domain.hpp"

namespace lsap {

// Dense shortest augmenting path with potentials (Dijkstra per free row).
// Argmin positions and relaxation outcomes are opened; costs, distances and
// potentials stay in the domain.
template <class D>
CoreSolution<typename D::Value> sap_acm(D& d, const std::vector<typename D::Value>& c,
                                        std::size_t n) {
  using V = typename D::Value;
  OpStats& st = d.stats();

  std::vector<V> u = d.min_each(c, n);
  std::vector<V> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = c[i * n + j] - u[i];
  }
  std::vector<V> v = d.min_each(t, n);

  std::vector<V> slack(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) slack[i * n + j] = c[i * n + j] - u[i] - v[j];
  }
  const std::vector<bool> tight = d.is_zero(slack);

  std::vector<long> lmate(n, -1), rmate(n, -1);
  std::size_t mated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rmate[j] != -1) continue;
      if (tight[i * n + j]) {
        lmate[i] = static_cast<long>(j);
        rmate[j] = static_cast<long>(i);
        ++mated;
        break;
      }
    }
  }

  std::vector<V> dist(n), cand, cur;
  std::vector<long> dad(n);
  std::vector<char> seen(n);
  std::vector<std::size_t> open_cols;
  while (mated < n) {
    std::size_t s = 0;
    while (lmate[s] != -1) ++s;
    std::fill(dad.begin(), dad.end(), -1);
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t k = 0; k < n; ++k) dist[k] = c[s * n + k] - u[s] - v[k];

    std::size_t j = 0;
    while (true) {
      ++st.steps;
      open_cols.clear();
      cur.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (!seen[k]) {
          open_cols.push_back(k);
          cur.push_back(dist[k]);
        }
      }
      j = open_cols[d.argmin(cur).first];
      seen[j] = 1;
      if (rmate[j] == -1) break;

      const auto i = static_cast<std::size_t>(rmate[j]);
      open_cols.clear();
      cand.clear();
      cur.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (seen[k]) continue;
        open_cols.push_back(k);
        cand.push_back(dist[j] + c[i * n + k] - u[i] - v[k]);
        cur.push_back(dist[k]);
      }
      if (open_cols.empty()) continue;
      const std::vector<bool> better = d.less(cand, cur);
      for (std::size_t q = 0; q < open_cols.size(); ++q) {
        if (!better[q]) continue;
        dist[open_cols[q]] = cand[q];
        dad[open_cols[q]] = static_cast<long>(j);
      }
    }

    for (std::size_t k = 0; k < n; ++k) {
      if (k == j || !seen[k]) continue;
      const auto i = static_cast<std::size_t>(rmate[k]);
      const V delta = dist[k] - dist[j];
      v[k] = v[k] + delta;
      u[i] = u[i] - delta;
    }
    u[s] = u[s] + dist[j];

    while (dad[j] >= 0) {
      const auto p = static_cast<std::size_t>(dad[j]);
      rmate[j] = rmate[p];
      lmate[static_cast<std::size_t>(rmate[j])] = static_cast<long>(j);
      j = p;
    }
    rmate[j] = static_cast<long>(s);
    lmate[s] = static_cast<long>(j);
    ++mated;
    ++st.iterations;
    d.note(LeakKind::kIterationCount, st.iterations, static_cast<std::int64_t>(s));
  }

  CoreSolution<V> out;
  out.col_of_row.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.col_of_row[i] = static_cast<std::size_t>(lmate[i]);
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

}  // namespace lsap
