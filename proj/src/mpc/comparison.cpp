#include <bit>

#include "lsap/error.hpp"
#include "lsap/mpc/engine.hpp"

namespace lsap::mpc {

int ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
}

ComparisonCost comparison_cost(int bits) {
  ComparisonCost c;
  c.rounds = 2 + ceil_log2(static_cast<std::size_t>(bits));
  for (int s = 1; s < bits; s *= 2) c.multiplications += bits - s;
  c.multiplications += bits;  // final dot product
  c.opened_values = 1;
  c.random_bits = bits;
  return c;
}

void Engine::check_bound(const SharedValue& x, int bits) const {
  const i128 v = peek(x);
  const i128 bound = i128{1} << bits;
  if (v >= bound || v <= -bound) {
    throw Error(ErrorCode::kBitBound,
                "comparison operand " + to_string(v) + " exceeds 2^" + std::to_string(bits));
  }
}

// Sign test of x = a - b with statistical masking: open c = x + 2^L + r for
// r = r''2^L + sum r_i 2^i, compare c mod 2^L against the bits of r, and
// recover the carry into bit L.
std::vector<SharedValue> Engine::less_than(std::span<const SharedValue> a,
                                           std::span<const SharedValue> b, int bits) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "less_than: size mismatch");
  const int L = bits;
  const int K = config_.kappa;
  if (L < 1 || L + K + 2 >= Fp::kBits) {
    throw Error(ErrorCode::kBitBound, "comparison width " + std::to_string(L) +
                                          " leaves no room for masking in the field");
  }
  const std::size_t n = a.size();
  if (n == 0) return {};

  std::vector<SharedValue> x(n), masked(n), rbits;
  rbits.reserve(n * L);
  const Fp two_l = Fp::pow2(L);
  for (std::size_t t = 0; t < n; ++t) {
    x[t] = a[t] - b[t];
    check_bound(x[t], L);
    auto r = random_bits(static_cast<std::size_t>(L));
    const u128 top = (static_cast<u128>(dealer_rng_()) << 64 | dealer_rng_()) &
                     ((u128{1} << (K + 1)) - 1);
    SharedValue rv = dealer_share(Fp::raw(top)) * two_l;
    for (int i = 0; i < L; ++i) rv += r[i] * Fp::pow2(i);
    masked[t] = x[t] + two_l + rv;
    rbits.insert(rbits.end(), r.begin(), r.end());
  }
  const std::vector<Fp> c = open_field(masked);

  // d_i = c_i xor r_i, then suffix OR from the top bit (Hillis-Steele).
  const u128 low_mask = (u128{1} << L) - 1;
  std::vector<SharedValue> e(n * L);
  const SharedValue one = SharedValue::from_public(1);
  for (std::size_t t = 0; t < n; ++t) {
    const u128 cl = c[t].value() & low_mask;
    for (int i = 0; i < L; ++i) {
      const SharedValue& ri = rbits[t * L + i];
      e[t * L + i] = ((cl >> i) & 1) ? one - ri : ri;
    }
  }
  std::vector<SharedValue> lhs, rhs;
  for (int s = 1; s < L; s *= 2) {
    lhs.clear();
    rhs.clear();
    for (std::size_t t = 0; t < n; ++t) {
      for (int i = 0; i + s < L; ++i) {
        lhs.push_back(e[t * L + i]);
        rhs.push_back(e[t * L + i + s]);
      }
    }
    const auto prod = mul(lhs, rhs);
    std::size_t q = 0;
    for (std::size_t t = 0; t < n; ++t) {
      for (int i = 0; i + s < L; ++i, ++q) {
        e[t * L + i] = lhs[q] + rhs[q] - prod[q];
      }
    }
  }
  // The first differing bit has r_i = 1 exactly when c mod 2^L < r mod 2^L.
  std::vector<SharedValue> f(n * L);
  for (std::size_t t = 0; t < n; ++t) {
    for (int i = 0; i < L; ++i) {
      f[t * L + i] = i + 1 < L ? e[t * L + i] - e[t * L + i + 1] : e[t * L + i];
    }
  }
  const auto borrow = dot(f, rbits, static_cast<std::size_t>(L));

  const Fp inv_two_l = two_l.inverse();
  std::vector<SharedValue> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    const u128 cl = c[t].value() & low_mask;
    SharedValue rlow = SharedValue::from_public(0);
    for (int i = 0; i < L; ++i) rlow += rbits[t * L + i] * Fp::pow2(i);
    // y mod 2^L = cl - rlow + 2^L * borrow
    const SharedValue ymod = SharedValue::from_public(Fp::raw(cl)) - rlow + borrow[t] * two_l;
    const SharedValue y = x[t] + two_l;
    const SharedValue top = (y - ymod) * inv_two_l;
    out[t] = one - top;
  }
  counters_.comparisons += static_cast<std::int64_t>(n);
  return out;
}

std::vector<bool> Engine::less_than_open(std::span<const SharedValue> a,
                                         std::span<const SharedValue> b, int bits) {
  const auto lt = less_than(a, b, bits);
  const auto opened = open_field(lt);
  std::vector<bool> out(opened.size());
  for (std::size_t t = 0; t < opened.size(); ++t) out[t] = !opened[t].is_zero();
  return out;
}

std::vector<SharedValue> Engine::tree(std::span<const SharedValue> flat, std::size_t group,
                                      int bits, std::vector<SharedValue>* index) {
  if (group == 0 || flat.size() % group != 0) {
    throw Error(ErrorCode::kDimensionMismatch, "min: ragged groups");
  }
  const std::size_t groups = flat.size() / group;
  std::vector<std::vector<SharedValue>> val(groups), idx(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    val[g].assign(flat.begin() + static_cast<long>(g * group),
                  flat.begin() + static_cast<long>((g + 1) * group));
    if (index) {
      for (std::size_t k = 0; k < group; ++k) {
        idx[g].push_back(SharedValue::from_public(static_cast<std::int64_t>(k)));
      }
    }
  }
  std::size_t width = group;
  std::vector<SharedValue> left, right, sel_a, sel_b;
  while (width > 1) {
    left.clear();
    right.clear();
    const std::size_t half = width / 2;
    for (std::size_t g = 0; g < groups; ++g) {
      for (std::size_t k = 0; k < half; ++k) {
        left.push_back(val[g][2 * k]);
        right.push_back(val[g][2 * k + 1]);
      }
    }
    // Take the right element only when it is strictly smaller.
    const auto take_right = less_than(right, left, bits);
    sel_a.clear();
    sel_b.clear();
    for (std::size_t q = 0; q < left.size(); ++q) {
      sel_a.push_back(take_right[q]);
      sel_b.push_back(right[q] - left[q]);
    }
    if (index) {
      std::size_t q = 0;
      for (std::size_t g = 0; g < groups; ++g) {
        for (std::size_t k = 0; k < half; ++k, ++q) {
          sel_a.push_back(take_right[q]);
          sel_b.push_back(idx[g][2 * k + 1] - idx[g][2 * k]);
        }
      }
    }
    const auto prod = mul(sel_a, sel_b);
    std::size_t q = 0;
    const std::size_t pairs = left.size();
    for (std::size_t g = 0; g < groups; ++g) {
      std::vector<SharedValue> nv, ni;
      for (std::size_t k = 0; k < half; ++k, ++q) {
        nv.push_back(left[q] + prod[q]);
        if (index) ni.push_back(idx[g][2 * k] + prod[pairs + q]);
      }
      if (width % 2) {
        nv.push_back(val[g].back());
        if (index) ni.push_back(idx[g].back());
      }
      val[g] = std::move(nv);
      if (index) idx[g] = std::move(ni);
    }
    width = (width + 1) / 2;
  }
  counters_.min_finds += static_cast<std::int64_t>(groups);
  std::vector<SharedValue> out(groups);
  for (std::size_t g = 0; g < groups; ++g) out[g] = val[g].front();
  if (index) {
    index->clear();
    for (std::size_t g = 0; g < groups; ++g) index->push_back(idx[g].front());
  }
  return out;
}

std::vector<SharedValue> Engine::min_each(std::span<const SharedValue> flat, std::size_t group,
                                          int bits) {
  return tree(flat, group, bits, nullptr);
}

SharedValue Engine::min(std::span<const SharedValue> xs, int bits) {
  return tree(xs, xs.size(), bits, nullptr).front();
}

std::vector<std::pair<std::size_t, SharedValue>> Engine::min_index_each(
    std::span<const SharedValue> flat, std::size_t group, int bits) {
  std::vector<SharedValue> idx;
  const auto vals = tree(flat, group, bits, &idx);
  std::vector<std::pair<std::size_t, SharedValue>> out;
  if (group == 1) {
    for (const auto& v : vals) out.emplace_back(0, v);
    return out;
  }
  const auto opened = open(idx);
  for (std::size_t g = 0; g < vals.size(); ++g) {
    out.emplace_back(static_cast<std::size_t>(opened[g]), vals[g]);
  }
  return out;
}

std::pair<std::size_t, SharedValue> Engine::min_index(std::span<const SharedValue> xs, int bits) {
  return min_index_each(xs, xs.size(), bits).front();
}

std::pair<SharedValue, SharedValue> Engine::min_index_secret(std::span<const SharedValue> xs,
                                                             int bits) {
  std::vector<SharedValue> idx;
  const auto vals = tree(xs, xs.size(), bits, &idx);
  return {idx.front(), vals.front()};
}

std::vector<SharedValue> Engine::floor_div(std::span<const SharedValue> xs, std::int64_t d,
                                           int bits) {
  if (d <= 0) throw Error(ErrorCode::kInvalidArgument, "floor_div needs a positive divisor");
  const int K = config_.kappa;
  const int dbits = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(d)));
  if (bits + dbits + K + 3 >= Fp::kBits) {
    throw Error(ErrorCode::kBitBound, "floor_div operands too wide for the field");
  }
  const std::size_t n = xs.size();
  if (n == 0) return {};
  std::vector<SharedValue> masked(n), q_r(n), rem_r(n);
  const Fp shift = Fp::from_i128(static_cast<i128>(d) << bits);
  const Fp fd = Fp::from_int(d);
  std::uniform_int_distribution<std::int64_t> rem_dist(0, d - 1);
  for (std::size_t t = 0; t < n; ++t) {
    check_bound(xs[t], bits);
    const u128 q = (static_cast<u128>(dealer_rng_()) << 64 | dealer_rng_()) & ((u128{1} << K) - 1);
    q_r[t] = dealer_share(Fp::raw(q));
    rem_r[t] = dealer_share(Fp::from_int(rem_dist(dealer_rng_)));
    masked[t] = xs[t] + shift + q_r[t] * fd + rem_r[t];
  }
  const std::vector<Fp> c = open_field(masked);
  std::vector<SharedValue> rem_c(n);
  std::vector<Fp> q_c(n);
  for (std::size_t t = 0; t < n; ++t) {
    const u128 cv = c[t].value();
    q_c[t] = Fp::raw(cv / static_cast<u128>(d));
    rem_c[t] = SharedValue::from_public(Fp::raw(cv % static_cast<u128>(d)));
  }
  const auto carry = less_than(rem_c, rem_r, dbits + 1);
  std::vector<SharedValue> out(n);
  const Fp two_b = Fp::pow2(bits);
  for (std::size_t t = 0; t < n; ++t) {
    out[t] = SharedValue::from_public(q_c[t] - two_b) - q_r[t] - carry[t];
  }
  return out;
}

}  // namespace lsap::mpc
