#pragma once

#include <algorithm>
#include <vector>

#include "lsap/algorithms/domain.hpp"
#include "lsap/error.hpp"

namespace lsap {

// Jonker-Volgenant: column reduction, reduction transfer, two rounds of
// augmenting row reduction, then Dijkstra-style augmentation of the rows
// that are still free. The min / second-min scan is an argmin followed by an
// argmin over the remaining columns, which picks the same columns.
template <class D>
CoreSolution<typename D::Value> sap_jv(D& d, const std::vector<typename D::Value>& c,
                                       std::size_t n) {
  using V = typename D::Value;
  OpStats& st = d.stats();
  auto cost = [&](std::size_t i, std::size_t j) -> const V& { return c[i * n + j]; };

  std::vector<V> v(n, d.constant(0));
  std::vector<long> rowsol(n, -1), colsol(n, -1);
  std::vector<int> matches(n, 0);

  // Column reduction, last column first.
  {
    std::vector<V> t(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t[j * n + i] = cost(i, j);
    }
    const auto mins = d.argmin_each(t, n);
    for (std::size_t jj = n; jj-- > 0;) {
      v[jj] = mins[jj].second;
      const std::size_t imin = mins[jj].first;
      if (++matches[imin] == 1) {
        rowsol[imin] = static_cast<long>(jj);
        colsol[jj] = static_cast<long>(imin);
      } else {
        colsol[jj] = -1;
      }
    }
  }

  // Reduction transfer from rows assigned exactly once.
  std::vector<std::size_t> free_rows;
  std::vector<V> h;
  for (std::size_t i = 0; i < n; ++i) {
    if (matches[i] == 0) {
      free_rows.push_back(i);
    } else if (matches[i] == 1 && n > 1) {
      const auto j1 = static_cast<std::size_t>(rowsol[i]);
      h.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != j1) h.push_back(cost(i, j) - v[j]);
      }
      v[j1] = v[j1] - d.min(h);
    }
  }

  // Augmenting row reduction, done twice.
  std::vector<std::size_t> rest;
  const std::size_t arr_cap = 64 * n * n + 1024;
  std::size_t arr_steps = 0;
  for (int loop = 0; loop < 2 && n > 1; ++loop) {
    std::size_t k = 0;
    const std::size_t prev = free_rows.size();
    std::size_t numfree = 0;
    while (k < prev) {
      if (++arr_steps > arr_cap) {
        throw Error(ErrorCode::kNonTermination, "row reduction did not settle");
      }
      ++st.steps;
      const std::size_t i = free_rows[k++];
      h.clear();
      for (std::size_t j = 0; j < n; ++j) h.push_back(cost(i, j) - v[j]);
      const auto [a, umin] = d.argmin(h);
      std::size_t j1 = a;
      std::vector<V> others;
      rest.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == j1) continue;
        rest.push_back(j);
        others.push_back(h[j]);
      }
      const auto [b, usubmin] = d.argmin(others);
      const std::size_t j2 = rest[b];
      const V gap = usubmin - umin;
      const bool strict = !d.is_zero(std::span<const V>(&gap, 1))[0];

      long i0 = colsol[j1];
      if (strict) {
        v[j1] = v[j1] - gap;
      } else if (i0 > -1) {
        j1 = j2;
        i0 = colsol[j2];
      }
      rowsol[i] = static_cast<long>(j1);
      colsol[j1] = static_cast<long>(i);
      if (i0 > -1) {
        if (strict) {
          free_rows[--k] = static_cast<std::size_t>(i0);
        } else {
          free_rows[numfree++] = static_cast<std::size_t>(i0);
        }
      }
    }
    free_rows.resize(numfree);
  }

  // Augmentation.
  std::vector<V> dist(n), cand, cur, eqv;
  std::vector<long> pred(n);
  std::vector<std::size_t> collist(n), cols;
  for (const std::size_t freerow : free_rows) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[j] = cost(freerow, j) - v[j];
      pred[j] = static_cast<long>(freerow);
      collist[j] = j;
    }
    std::size_t low = 0, up = 0;
    long last = -1;
    std::size_t endofpath = 0;
    bool found = false;
    V minv = d.constant(0);
    do {
      ++st.steps;
      if (up == low) {
        last = static_cast<long>(low) - 1;
        cur.clear();
        for (std::size_t k = up; k < n; ++k) cur.push_back(dist[collist[k]]);
        minv = d.min(cur);
        eqv.clear();
        for (const V& x : cur) eqv.push_back(x - minv);
        const std::vector<bool> at_min = d.is_zero(eqv);
        // Stable partition: columns at the minimum move to [low, up).
        std::vector<std::size_t> head, tail;
        for (std::size_t k = up; k < n; ++k) {
          (at_min[k - up] ? head : tail).push_back(collist[k]);
        }
        std::size_t pos = up;
        for (auto j : head) collist[pos++] = j;
        for (auto j : tail) collist[pos++] = j;
        up += head.size();
        for (std::size_t k = low; k < up; ++k) {
          if (colsol[collist[k]] < 0) {
            endofpath = collist[k];
            found = true;
            break;
          }
        }
      }
      if (!found) {
        const std::size_t j1 = collist[low++];
        const auto i = static_cast<std::size_t>(colsol[j1]);
        const V hh = cost(i, j1) - v[j1] - minv;
        cols.assign(collist.begin() + static_cast<long>(up), collist.end());
        cand.clear();
        cur.clear();
        for (auto j : cols) {
          cand.push_back(cost(i, j) - v[j] - hh);
          cur.push_back(dist[j]);
        }
        const std::vector<bool> better = d.less(cand, cur);
        eqv.clear();
        for (std::size_t q = 0; q < cols.size(); ++q) {
          if (better[q]) eqv.push_back(cand[q] - minv);
        }
        const std::vector<bool> hits = d.is_zero(eqv);
        std::size_t hq = 0;
        const std::size_t base = up;
        for (std::size_t q = 0; q < cols.size(); ++q) {
          if (!better[q]) continue;
          const std::size_t j = cols[q];
          const std::size_t k = base + q;
          pred[j] = static_cast<long>(i);
          if (hits[hq++]) {
            if (colsol[j] < 0) {
              endofpath = j;
              found = true;
              break;
            }
            collist[k] = collist[up];
            collist[up++] = j;
          }
          dist[j] = cand[q];
        }
      }
    } while (!found);

    for (long k = 0; k <= last; ++k) {
      const std::size_t j1 = collist[static_cast<std::size_t>(k)];
      v[j1] = v[j1] + dist[j1] - minv;
    }
    std::size_t i;
    do {
      i = static_cast<std::size_t>(pred[endofpath]);
      colsol[endofpath] = static_cast<long>(i);
      const std::size_t j1 = endofpath;
      endofpath = static_cast<std::size_t>(rowsol[i]);
      rowsol[i] = static_cast<long>(j1);
    } while (i != freerow);
    ++st.iterations;
    d.note(LeakKind::kIterationCount, st.iterations, static_cast<std::int64_t>(freerow));
  }

  CoreSolution<V> out;
  out.col_of_row.resize(n);
  out.u.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(rowsol[i]);
    out.col_of_row[i] = j;
    out.u.push_back(cost(i, j) - v[j]);
  }
  out.v = std::move(v);
  return out;
}

}  // namespace lsap
