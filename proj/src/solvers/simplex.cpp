#include <boost/multiprecision/cpp_int.hpp>

#include "lsap/solvers.hpp"

namespace lsap {
namespace {

using Big = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
Big mul(const Big& a, const Big& b) { return a * b; }
Big sub(const Big& a, const Big& b) { return a - b; }

std::int64_t to_i64(std::int64_t x) { return x; }
std::int64_t to_i64(const Big& x) {
  if (x > Big(INT64_MAX) || x < Big(INT64_MIN)) throw Error(ErrorCode::kInternal, "simplex value out of range");
  return static_cast<std::int64_t>(x);
}

struct Outcome {
  std::vector<std::int64_t> x;     // primal values
  std::vector<std::int64_t> dual;  // one per constraint
  std::int64_t objective = 0;
  std::int64_t pivots = 0;
  std::int64_t comparisons = 0;
};

// Fraction-free tableau (entries are D times the true tableau), Bland's rule.
template <class I>
Outcome run(const LpInstance& lp) {
  const std::size_t n = lp.n, m = lp.m, w = n + m + 1, rhs = n + m;
  std::vector<I> t((m + 1) * w, I(0));
  auto at = [&](std::size_t r, std::size_t c) -> I& { return t[r * w + c]; };
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = I(lp.a[r][c]);
    at(r, n + r) = I(1);
    at(r, rhs) = I(lp.b[r]);
  }
  for (std::size_t c = 0; c < n; ++c) at(m, c) = I(-lp.objective[c]);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
  I denom(1);

  Outcome out;
  const std::int64_t cap = 1000000;
  while (true) {
    std::size_t q = rhs;
    for (std::size_t c = 0; c < n + m; ++c) {
      if (at(m, c) < 0) {
        q = c;
        break;
      }
    }
    out.comparisons += static_cast<std::int64_t>(n + m);
    if (q == rhs) break;
    if (++out.pivots > cap) throw Error(ErrorCode::kNonTermination, "simplex pivot cap reached");

    std::size_t p = m;
    for (std::size_t r = 0; r < m; ++r) {
      if (!(at(r, q) > 0)) continue;
      if (p == m) {
        p = r;
        continue;
      }
      ++out.comparisons;
      const I lhs = mul(at(r, rhs), at(p, q));
      const I rhs_v = mul(at(p, rhs), at(r, q));
      if (lhs < rhs_v || (lhs == rhs_v && basis[r] < basis[p])) p = r;
    }
    if (p == m) throw Error(ErrorCode::kInternal, "assignment LP reported unbounded");

    const I piv = at(p, q);
    const bool same = piv == denom;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == p) continue;
      const I f = at(r, q);
      if (f == 0 && same) continue;
      for (std::size_t c = 0; c < w; ++c) {
        I val = sub(mul(at(r, c), piv), mul(f, at(p, c)));
        if (denom != 1) val /= denom;
        at(r, c) = val;
      }
    }
    denom = piv;
    basis[p] = q;
  }

  auto exact = [&](const I& v) {
    if (v % denom != 0) throw Error(ErrorCode::kInternal, "simplex produced a fractional value");
    return to_i64(I(v / denom));
  };
  out.x.assign(n, 0);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) out.x[basis[r]] = exact(at(r, rhs));
  }
  out.dual.resize(m);
  for (std::size_t k = 0; k < m; ++k) out.dual[k] = exact(at(m, n + k));
  out.objective = exact(at(m, rhs));
  return out;
}

}  // namespace

SolverResult solve_simplex(const LpInstance& lp) {
  const std::size_t s = lp.side;
  if (s == 0 || lp.n != s * s || lp.m != 2 * s || lp.a.size() != lp.m || lp.b.size() != lp.m) {
    throw Error(ErrorCode::kDimensionMismatch, "malformed assignment LP");
  }
  for (auto c : lp.objective) {
    if (c < 0) throw Error(ErrorCode::kInvalidArgument, "LP objective must be non-negative; use to_max_form");
  }
  Outcome o;
  try {
    o = run<std::int64_t>(lp);
  } catch (const Overflow&) {
    o = run<Big>(lp);
  }

  // Chosen edges, then fill unmatched rows/columns (their weight is zero).
  std::vector<long> col_of(s, -1);
  std::vector<char> used(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const std::int64_t x = o.x[i * s + j];
      if (x == 1 && col_of[i] < 0 && !used[j]) {
        col_of[i] = static_cast<long>(j);
        used[j] = 1;
      } else if (x != 0 && x != 1) {
        throw Error(ErrorCode::kInternal, "simplex returned a non-integral vertex");
      }
    }
  }
  std::size_t next = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (col_of[i] >= 0) continue;
    while (used[next]) ++next;
    col_of[i] = static_cast<long>(next);
    used[next] = 1;
  }

  const std::int64_t big_m = lp.offset;
  SolverResult r;
  std::vector<Pair> pairs;
  std::int64_t cost = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const auto j = static_cast<std::size_t>(col_of[i]);
    pairs.push_back({i, j});
    cost += big_m - lp.objective[i * s + j];
  }
  r.assignment.pairs = std::move(pairs);
  r.assignment.cost = cost;
  r.dual.u.resize(s);
  r.dual.v.resize(s);
  for (std::size_t i = 0; i < s; ++i) r.dual.u[i] = big_m - o.dual[i];
  for (std::size_t j = 0; j < s; ++j) r.dual.v[j] = -o.dual[s + j];
  r.stats.steps = o.pivots;
  r.stats.iterations = o.pivots;
  r.stats.min_finds = 2 * o.pivots + 1;
  r.stats.comparisons = o.comparisons;
  return r;
}

}  // namespace lsap
