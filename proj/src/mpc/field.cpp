#include "lsap/mpc/field.hpp"

#include <algorithm>

namespace lsap::mpc {

Fp Fp::random(std::mt19937_64& rng) {
  while (true) {
    const u128 v = (static_cast<u128>(rng()) << 64 | rng()) & kP;
    if (v != kP) return raw(v);
  }
}

Fp Fp::random_nonzero(std::mt19937_64& rng) {
  while (true) {
    const Fp f = random(rng);
    if (!f.is_zero()) return f;
  }
}

Fp Fp::pow(u128 e) const {
  Fp base = *this, acc = raw(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const { return pow(kP - 2); }

Fp Fp::pow2(int k) { return raw(u128{1} << (k % 127)); }

std::string to_string(i128 x) {
  if (x == 0) return "0";
  const bool neg = x < 0;
  u128 m = neg ? static_cast<u128>(-x) : static_cast<u128>(x);
  std::string s;
  while (m) {
    s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace lsap::mpc
