#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lsap/algorithms/domain.hpp"
#include "lsap/error.hpp"

namespace lsap {

// Six-step Munkres with explicit dual bookkeeping. c is row-major n x n and
// is reduced in place; u, v track the amounts subtracted so that
// c_ij = w_ij - u_i - v_j throughout. Covers and stars are public.
template <class D>
CoreSolution<typename D::Value> hungarian(
    D& d, std::vector<typename D::Value> c, std::size_t n,
    const std::function<void(std::span<const typename D::Value>,
                             std::span<const typename D::Value>)>& after_reduction = {}) {
  using V = typename D::Value;
  OpStats& st = d.stats();

  // Step 1: subtract each row minimum.
  ++st.steps;
  std::vector<V> u = d.min_each(c, n);
  std::vector<V> v(n, d.constant(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = c[i * n + j] - u[i];
  }
  if (after_reduction) after_reduction(u, c);

  std::vector<bool> zero = d.is_zero(c);
  std::vector<char> starred(n * n, 0), primed(n * n, 0);
  std::vector<char> row_cov(n, 0), col_cov(n, 0);

  // Step 2: star independent zeros.
  ++st.steps;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (zero[i * n + j] && !row_cov[i] && !col_cov[j]) {
        starred[i * n + j] = 1;
        row_cov[i] = col_cov[j] = 1;
      }
    }
  }
  std::fill(row_cov.begin(), row_cov.end(), 0);
  std::fill(col_cov.begin(), col_cov.end(), 0);

  auto star_in_row = [&](std::size_t i) -> long {
    for (std::size_t j = 0; j < n; ++j) if (starred[i * n + j]) return static_cast<long>(j);
    return -1;
  };
  auto star_in_col = [&](std::size_t j) -> long {
    for (std::size_t i = 0; i < n; ++i) if (starred[i * n + j]) return static_cast<long>(i);
    return -1;
  };
  auto prime_in_row = [&](std::size_t i) -> long {
    for (std::size_t j = 0; j < n; ++j) if (primed[i * n + j]) return static_cast<long>(j);
    return -1;
  };

  int step = 3;
  std::size_t z_row = 0, z_col = 0;
  std::vector<std::size_t> idx;
  std::vector<V> vals;
  while (true) {
    ++st.steps;
    if (step == 3) {
      std::size_t count = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (star_in_col(j) >= 0) {
          col_cov[j] = 1;
          ++count;
        }
      }
      for (std::size_t j = 0; j < n; ++j) d.note(LeakKind::kCoverBit, j, col_cov[j]);
      if (count >= n) break;
      step = 4;
    } else if (step == 4) {
      step = 0;
      while (step == 0) {
        long r = -1, col = -1;
        for (std::size_t i = 0; i < n && r < 0; ++i) {
          if (row_cov[i]) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (!col_cov[j] && zero[i * n + j]) {
              r = static_cast<long>(i);
              col = static_cast<long>(j);
              break;
            }
          }
        }
        if (r < 0) {
          step = 6;
          break;
        }
        primed[r * n + col] = 1;
        const long s = star_in_row(r);
        if (s >= 0) {
          row_cov[r] = 1;
          col_cov[s] = 0;
          d.note(LeakKind::kCoverBit, static_cast<std::int64_t>(n + r), 1);
        } else {
          z_row = static_cast<std::size_t>(r);
          z_col = static_cast<std::size_t>(col);
          step = 5;
        }
      }
    } else if (step == 5) {
      std::vector<std::pair<std::size_t, std::size_t>> path{{z_row, z_col}};
      while (true) {
        const long r = star_in_col(path.back().second);
        if (r < 0) break;
        path.emplace_back(static_cast<std::size_t>(r), path.back().second);
        const long col = prime_in_row(static_cast<std::size_t>(r));
        path.emplace_back(static_cast<std::size_t>(r), static_cast<std::size_t>(col));
      }
      for (auto [r, col] : path) starred[r * n + col] = !starred[r * n + col];
      std::fill(row_cov.begin(), row_cov.end(), 0);
      std::fill(col_cov.begin(), col_cov.end(), 0);
      std::fill(primed.begin(), primed.end(), 0);
      ++st.iterations;
      d.note(LeakKind::kIterationCount, st.iterations, static_cast<std::int64_t>(path.size()));
      step = 3;
    } else {
      // Step 6: shift by the smallest uncovered value.
      vals.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (row_cov[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!col_cov[j]) vals.push_back(c[i * n + j]);
        }
      }
      if (vals.empty()) throw Error(ErrorCode::kInternal, "munkres: nothing uncovered");
      const V minval = d.min(vals);
      for (std::size_t i = 0; i < n; ++i) {
        if (!row_cov[i]) continue;
        u[i] = u[i] - minval;
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] = c[i * n + j] + minval;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (col_cov[j]) continue;
        v[j] = v[j] + minval;
        for (std::size_t i = 0; i < n; ++i) c[i * n + j] = c[i * n + j] - minval;
      }
      // Only uncovered-uncovered entries can have become zero; doubly
      // covered ones grew by a positive amount.
      idx.clear();
      vals.clear();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!row_cov[i] && !col_cov[j]) {
            idx.push_back(i * n + j);
            vals.push_back(c[i * n + j]);
          } else if (row_cov[i] && col_cov[j]) {
            zero[i * n + j] = false;
          }
        }
      }
      const std::vector<bool> bits = d.is_zero(vals);
      for (std::size_t k = 0; k < idx.size(); ++k) zero[idx[k]] = bits[k];
      step = 4;
    }
  }

  CoreSolution<V> out;
  out.col_of_row.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.col_of_row[i] = static_cast<std::size_t>(star_in_row(i));
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

}  // namespace lsap
