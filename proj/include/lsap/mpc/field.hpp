#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace lsap::mpc {

using u128 = unsigned __int128;
using i128 = __int128;

// Element of GF(p), p = 2^127 - 1.
class Fp {
 public:
  static constexpr u128 kP = (u128{1} << 127) - 1;
  static constexpr int kBits = 127;

  constexpr Fp() = default;
  static constexpr Fp raw(u128 v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  static Fp from_int(std::int64_t x) {
    return x >= 0 ? raw(static_cast<u128>(x)) : raw(kP - static_cast<u128>(-static_cast<i128>(x)));
  }
  static Fp from_i128(i128 x) {
    return x >= 0 ? raw(static_cast<u128>(x) % kP) : raw(kP - static_cast<u128>(-x) % kP);
  }
  // Uniform over the field (or over its nonzero part).
  static Fp random(std::mt19937_64& rng);
  static Fp random_nonzero(std::mt19937_64& rng);

  u128 value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  // Centred lift to (-p/2, p/2).
  i128 lift() const {
    return v_ > kP / 2 ? -static_cast<i128>(kP - v_) : static_cast<i128>(v_);
  }

  friend Fp operator+(Fp a, Fp b) {
    u128 s = a.v_ + b.v_;
    s = (s & kP) + (s >> 127);
    if (s >= kP) s -= kP;
    return raw(s);
  }
  friend Fp operator-(Fp a, Fp b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (kP - b.v_)); }
  friend Fp operator-(Fp a) { return raw(a.v_ == 0 ? 0 : kP - a.v_); }
  friend Fp operator*(Fp a, Fp b);
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp pow(u128 e) const;
  Fp inverse() const;
  static Fp pow2(int k);

 private:
  u128 v_ = 0;
};

inline Fp operator*(Fp a, Fp b) {
  const std::uint64_t a0 = static_cast<std::uint64_t>(a.v_), a1 = static_cast<std::uint64_t>(a.v_ >> 64);
  const std::uint64_t b0 = static_cast<std::uint64_t>(b.v_), b1 = static_cast<std::uint64_t>(b.v_ >> 64);
  const u128 lo0 = static_cast<u128>(a0) * b0;
  const u128 mid = static_cast<u128>(a0) * b1 + static_cast<u128>(a1) * b0;
  const u128 hi0 = static_cast<u128>(a1) * b1;
  const u128 lo = lo0 + (mid << 64);
  const u128 hi = hi0 + (mid >> 64) + (lo < lo0 ? 1 : 0);
  // 2^128 = 2 and 2^127 = 1 modulo p.
  u128 r = (lo & Fp::kP) + (lo >> 127) + (hi << 1);
  r = (r & Fp::kP) + (r >> 127);
  if (r >= Fp::kP) r -= Fp::kP;
  return Fp::raw(r);
}

std::string to_string(i128 x);

}  // namespace lsap::mpc
