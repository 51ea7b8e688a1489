#include "lsap/zk/range_proof.hpp"

#include <bit>

#include "lsap/error.hpp"

namespace lsap::zk {
namespace {

// Points carried as coef * base so that folding costs one scalar
// multiplication per element; inv is 1 / coef.
struct Scaled {
  std::vector<Scalar> coef;
  std::vector<Scalar> inv;
  std::vector<Point> base;
};

Scalar inner(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Scalar> powers(const Scalar& x, std::size_t n) {
  std::vector<Scalar> out(n);
  Scalar p = Scalar::one();
  for (auto& v : out) {
    v = p;
    p *= x;
  }
  return out;
}

void check_width(int width) {
  if (width < 1 || width > 64 || !is_pow2(static_cast<std::size_t>(width))) {
    throw Error(ErrorCode::kInvalidArgument, "range width must be a power of two up to 64");
  }
}

// Sum_j z^(2+j) <1, 2^width> style constants.
Scalar sum_of_powers_of_two(int width) {
  Scalar s, p = Scalar::one();
  const Scalar two = Scalar::from_int(2);
  for (int i = 0; i < width; ++i) {
    s += p;
    p *= two;
  }
  return s;
}

void absorb_statement(Transcript& t, std::span<const Point> commitments, int width) {
  t.append_u64("width", static_cast<std::uint64_t>(width));
  t.append_u64("batch", commitments.size());
  for (const auto& v : commitments) t.append("V", v);
}

}  // namespace

std::size_t next_pow2(std::size_t x) { return x <= 1 ? 1 : std::bit_ceil(x); }
bool is_pow2(std::size_t x) { return x != 0 && std::has_single_bit(x); }

ProofSize range_proof_size(std::size_t batch, int width) {
  check_width(width);
  const std::size_t u = next_pow2(batch);
  const auto lg = [](std::size_t x) { return static_cast<std::size_t>(std::countr_zero(x)); };
  return {2 * (lg(u) + lg(static_cast<std::size_t>(width))) + 4, RangeProof::kScalars};
}

ProofSize proof_size(std::size_t n, int width) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  return range_proof_size(n * n, width);
}

Point pedersen(const GroupContext& ctx, const Scalar& value, const Scalar& blinding) {
  return value * ctx.g + blinding * ctx.h;
}

RangeProof prove_range(const GroupContext& ctx, Transcript& t, std::span<const std::uint64_t> values,
                       std::span<const Scalar> blindings, int width) {
  check_width(width);
  const std::size_t m = values.size();
  if (!is_pow2(m) || blindings.size() != m) {
    throw Error(ErrorCode::kInvalidArgument, "batch must be a power of two with one blinding each");
  }
  const std::size_t nbits = static_cast<std::size_t>(width);
  const std::size_t total = m * nbits;
  if (total > ctx.capacity()) throw Error(ErrorCode::kInstanceTooLarge, "generator capacity exceeded");
  for (auto v : values) {
    if (width < 64 && v >> width) throw Error(ErrorCode::kWidthOverflow, "value exceeds range width");
  }

  std::vector<Point> commitments(m);
  for (std::size_t j = 0; j < m; ++j) {
    commitments[j] = pedersen(ctx, Scalar::from_u64(values[j]), blindings[j]);
  }
  absorb_statement(t, commitments, width);

  // Bit decomposition: a_L in {0,1}, a_R = a_L - 1.
  std::vector<Scalar> al(total), ar(total);
  const Scalar one = Scalar::one();
  Point a_commit;
  const Scalar alpha = Scalar::random();
  a_commit = alpha * ctx.h;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < nbits; ++i) {
      const std::size_t k = j * nbits + i;
      if ((values[j] >> i) & 1) {
        al[k] = one;
        a_commit += ctx.gv[k];
      } else {
        ar[k] = -one;
        a_commit -= ctx.hv[k];
      }
    }
  }
  std::vector<Scalar> sl(total), sr(total);
  for (auto& s : sl) s = Scalar::random();
  for (auto& s : sr) s = Scalar::random();
  const Scalar rho = Scalar::random();
  Point s_commit = rho * ctx.h + multi_scalar_mul(sl, std::span(ctx.gv).first(total)) +
                   multi_scalar_mul(sr, std::span(ctx.hv).first(total));

  t.append("A", a_commit);
  t.append("S", s_commit);
  const Scalar y = t.challenge("y");
  const Scalar z = t.challenge("z");

  const std::vector<Scalar> yp = powers(y, total);
  const std::vector<Scalar> two_p = powers(Scalar::from_int(2), nbits);
  const std::vector<Scalar> zp = powers(z, m + 2);

  std::vector<Scalar> l0(total), r0(total), r1(total);
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t j = k / nbits, i = k % nbits;
    l0[k] = al[k] - z;
    r0[k] = yp[k] * (ar[k] + z) + zp[2 + j] * two_p[i];
    r1[k] = yp[k] * sr[k];
  }
  const Scalar t1 = inner(l0, r1) + inner(sl, r0);
  const Scalar t2 = inner(sl, r1);
  const Scalar tau1 = Scalar::random(), tau2 = Scalar::random();
  const Point t1_commit = pedersen(ctx, t1, tau1);
  const Point t2_commit = pedersen(ctx, t2, tau2);
  t.append("T1", t1_commit);
  t.append("T2", t2_commit);
  const Scalar x = t.challenge("x");

  std::vector<Scalar> l(total), r(total);
  for (std::size_t k = 0; k < total; ++k) {
    l[k] = l0[k] + x * sl[k];
    r[k] = r0[k] + x * r1[k];
  }
  const Scalar t_hat = inner(l, r);
  Scalar tau_x = tau2 * x * x + tau1 * x;
  for (std::size_t j = 0; j < m; ++j) tau_x += zp[2 + j] * blindings[j];
  const Scalar mu = alpha + rho * x;

  t.append("t_hat", t_hat);
  t.append("tau_x", tau_x);
  t.append("mu", mu);
  const Scalar w = t.challenge("w");
  const Point q = w * ctx.q;

  RangeProof proof;
  proof.a_commit = a_commit;
  proof.s_commit = s_commit;
  proof.t1_commit = t1_commit;
  proof.t2_commit = t2_commit;
  proof.tau_x = tau_x;
  proof.mu = mu;
  proof.t_hat = t_hat;

  // Inner product argument on G and H' = y^-i H.
  Scaled g{std::vector<Scalar>(total, one), std::vector<Scalar>(total, one),
           {ctx.gv.begin(), ctx.gv.begin() + static_cast<long>(total)}};
  Scaled h{std::vector<Scalar>(total), yp, {ctx.hv.begin(), ctx.hv.begin() + static_cast<long>(total)}};
  const Scalar y_inv = y.inverse();
  {
    Scalar p = one;
    for (std::size_t k = 0; k < total; ++k) {
      h.coef[k] = p;
      p *= y_inv;
    }
  }
  std::vector<Scalar> a = std::move(l), b = std::move(r);
  std::vector<Scalar> ks;
  std::vector<Point> ps;
  for (std::size_t len = total; len > 1; len /= 2) {
    const std::size_t half = len / 2;
    const std::span<const Scalar> a_lo(a.data(), half), a_hi(a.data() + half, half);
    const std::span<const Scalar> b_lo(b.data(), half), b_hi(b.data() + half, half);
    const Scalar c_l = inner(a_lo, b_hi), c_r = inner(a_hi, b_lo);

    ks.clear();
    ps.clear();
    for (std::size_t i = 0; i < half; ++i) {
      ks.push_back(a_lo[i] * g.coef[half + i]);
      ps.push_back(g.base[half + i]);
      ks.push_back(b_hi[i] * h.coef[i]);
      ps.push_back(h.base[i]);
    }
    const Point lp = multi_scalar_mul(ks, ps) + c_l * q;
    ks.clear();
    ps.clear();
    for (std::size_t i = 0; i < half; ++i) {
      ks.push_back(a_hi[i] * g.coef[i]);
      ps.push_back(g.base[i]);
      ks.push_back(b_lo[i] * h.coef[half + i]);
      ps.push_back(h.base[half + i]);
    }
    const Point rp = multi_scalar_mul(ks, ps) + c_r * q;
    proof.l_vec.push_back(lp);
    proof.r_vec.push_back(rp);
    t.append("L", lp);
    t.append("R", rp);
    const Scalar u = t.challenge("u");
    const Scalar u_inv = u.inverse();

    for (std::size_t i = 0; i < half; ++i) {
      a[i] = a_lo[i] * u + a_hi[i] * u_inv;
      b[i] = b_lo[i] * u_inv + b_hi[i] * u;
    }
    a.resize(half);
    b.resize(half);
    if (half == 1) break;
    // G' = u^-1 G_lo + u G_hi and H' = u H_lo + u^-1 H_hi, factored as
    // coef * (base_lo + ratio * base_hi).
    for (std::size_t i = 0; i < half; ++i) {
      const Scalar gc = u_inv * g.coef[i], gi = u * g.inv[i];
      g.base[i] = g.base[i] + (u * g.coef[half + i] * gi) * g.base[half + i];
      g.coef[i] = gc;
      g.inv[i] = gi;
      const Scalar hc = u * h.coef[i], hi = u_inv * h.inv[i];
      h.base[i] = h.base[i] + (u_inv * h.coef[half + i] * hi) * h.base[half + i];
      h.coef[i] = hc;
      h.inv[i] = hi;
    }
    for (auto* s : {&g, &h}) {
      s->coef.resize(half);
      s->inv.resize(half);
      s->base.resize(half);
    }
  }
  proof.a = a[0];
  proof.b = b[0];
  return proof;
}

bool verify_range(const GroupContext& ctx, Transcript& t, std::span<const Point> commitments,
                  const RangeProof& proof, int width) {
  check_width(width);
  const std::size_t m = commitments.size();
  const std::size_t nbits = static_cast<std::size_t>(width);
  if (!is_pow2(m)) throw Error(ErrorCode::kParse, "batch is not a power of two");
  const std::size_t total = m * nbits;
  const auto rounds = static_cast<std::size_t>(std::countr_zero(total));
  if (proof.l_vec.size() != rounds || proof.r_vec.size() != rounds) {
    throw Error(ErrorCode::kParse, "inner product argument has the wrong length");
  }
  if (total > ctx.capacity()) throw Error(ErrorCode::kInstanceTooLarge, "generator capacity exceeded");

  absorb_statement(t, commitments, width);
  t.append("A", proof.a_commit);
  t.append("S", proof.s_commit);
  const Scalar y = t.challenge("y");
  const Scalar z = t.challenge("z");
  t.append("T1", proof.t1_commit);
  t.append("T2", proof.t2_commit);
  const Scalar x = t.challenge("x");
  t.append("t_hat", proof.t_hat);
  t.append("tau_x", proof.tau_x);
  t.append("mu", proof.mu);
  const Scalar w = t.challenge("w");
  std::vector<Scalar> u(rounds), u_inv(rounds);
  for (std::size_t k = 0; k < rounds; ++k) {
    t.append("L", proof.l_vec[k]);
    t.append("R", proof.r_vec[k]);
    u[k] = t.challenge("u");
    u_inv[k] = u[k].inverse();
  }

  const Scalar one = Scalar::one();
  const std::vector<Scalar> zp = powers(z, m + 3);
  const std::vector<Scalar> two_p = powers(Scalar::from_int(2), nbits);
  Scalar sum_y;
  {
    Scalar p = one;
    for (std::size_t k = 0; k < total; ++k) {
      sum_y += p;
      p *= y;
    }
  }
  Scalar delta = (z - z * z) * sum_y;
  const Scalar ones_two = sum_of_powers_of_two(width);
  for (std::size_t j = 0; j < m; ++j) delta -= zp[3 + j] * ones_two;

  // s_i = prod_k u_k^(+-1), bit of i for round k read from the top.
  std::vector<Scalar> s(total), s_inv(total);
  s[0] = one;
  s_inv[0] = one;
  for (std::size_t k = 0; k < rounds; ++k) {
    s[0] *= u_inv[k];
    s_inv[0] *= u[k];
  }
  for (std::size_t i = 1; i < total; ++i) {
    const int top = std::bit_width(i) - 1;
    const std::size_t k = rounds - 1 - static_cast<std::size_t>(top);
    const std::size_t prev = i - (std::size_t{1} << top);
    s[i] = s[prev] * u[k] * u[k];
    s_inv[i] = s_inv[prev] * u_inv[k] * u_inv[k];
  }

  // Both checks folded into one multi-exponentiation with a random weight c:
  //   c (t_hat g + tau_x h - sum z^(2+j) V_j - delta g - x T1 - x^2 T2)
  // + (A + x S - z sum G + sum h_i H_i - mu h + t_hat Q
  //    + sum (u^2 L + u^-2 R) - a sum s_i G_i - b sum s_i^-1 H'_i - ab Q) = 0
  const Scalar c = Scalar::random();
  const Scalar y_inv = y.inverse();
  std::vector<Scalar> ks;
  std::vector<Point> ps;
  ks.reserve(2 * total + 2 * rounds + 8 + m);
  ps.reserve(ks.capacity());

  ks.push_back(c * (proof.t_hat - delta));
  ps.push_back(ctx.g);
  ks.push_back(c * proof.tau_x - proof.mu);
  ps.push_back(ctx.h);
  for (std::size_t j = 0; j < m; ++j) {
    ks.push_back(-(c * zp[2 + j]));
    ps.push_back(commitments[j]);
  }
  ks.push_back(-(c * x));
  ps.push_back(proof.t1_commit);
  ks.push_back(-(c * x * x));
  ps.push_back(proof.t2_commit);

  ks.push_back(one);
  ps.push_back(proof.a_commit);
  ks.push_back(x);
  ps.push_back(proof.s_commit);
  ks.push_back(w * (proof.t_hat - proof.a * proof.b));
  ps.push_back(ctx.q);
  for (std::size_t k = 0; k < rounds; ++k) {
    ks.push_back(u[k] * u[k]);
    ps.push_back(proof.l_vec[k]);
    ks.push_back(u_inv[k] * u_inv[k]);
    ps.push_back(proof.r_vec[k]);
  }
  Scalar y_inv_p = one;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t j = i / nbits;
    ks.push_back(-z - proof.a * s[i]);
    ps.push_back(ctx.gv[i]);
    ks.push_back(z + y_inv_p * (zp[2 + j] * two_p[i % nbits] - proof.b * s_inv[i]));
    ps.push_back(ctx.hv[i]);
    y_inv_p *= y_inv;
  }
  return multi_scalar_mul(ks, ps).is_identity();
}

}  // namespace lsap::zk
