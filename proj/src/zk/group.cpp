#include "lsap/zk/group.hpp"

#include <sodium.h>

#include "lsap/error.hpp"

namespace lsap::zk {

void ensure_sodium() {
  static const int status = sodium_init();
  if (status < 0) throw Error(ErrorCode::kInternal, "libsodium failed to initialise");
}

bool Scalar::is_canonical(const Bytes& b) {
  // Canonical iff reducing it (padded to 64 bytes) changes nothing.
  std::array<std::uint8_t, 64> wide{};
  std::copy(b.begin(), b.end(), wide.begin());
  Bytes r;
  crypto_core_ristretto255_scalar_reduce(r.data(), wide.data());
  return r == b;
}

Scalar Scalar::from_u64(std::uint64_t x) {
  Scalar s;
  for (int k = 0; k < 8; ++k) s.b_[k] = static_cast<std::uint8_t>(x >> (8 * k));
  return s;
}

Scalar Scalar::from_int(std::int64_t x) {
  const std::uint64_t mag =
      x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
  return x < 0 ? -from_u64(mag) : from_u64(mag);
}

Scalar Scalar::random() {
  ensure_sodium();
  Scalar s;
  crypto_core_ristretto255_scalar_random(s.b_.data());
  return s;
}

Scalar Scalar::from_wide(std::span<const std::uint8_t, 64> wide) {
  Scalar s;
  crypto_core_ristretto255_scalar_reduce(s.b_.data(), wide.data());
  return s;
}

bool Scalar::is_zero() const { return sodium_is_zero(b_.data(), b_.size()) == 1; }

Scalar Scalar::inverse() const {
  Scalar s;
  if (crypto_core_ristretto255_scalar_invert(s.b_.data(), b_.data()) != 0) {
    throw Error(ErrorCode::kInternal, "inverse of zero scalar");
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar s;
  crypto_core_ristretto255_scalar_add(s.b_.data(), a.b_.data(), b.b_.data());
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar s;
  crypto_core_ristretto255_scalar_sub(s.b_.data(), a.b_.data(), b.b_.data());
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar s;
  crypto_core_ristretto255_scalar_mul(s.b_.data(), a.b_.data(), b.b_.data());
  return s;
}

Scalar operator-(const Scalar& a) {
  Scalar s;
  crypto_core_ristretto255_scalar_negate(s.b_.data(), a.b_.data());
  return s;
}

Point Point::from_bytes(const Bytes& b) {
  ensure_sodium();
  if (!crypto_core_ristretto255_is_valid_point(b.data())) {
    throw Error(ErrorCode::kParse, "invalid group element encoding");
  }
  Point p;
  p.b_ = b;
  return p;
}

Point Point::from_hash(std::span<const std::uint8_t, 64> h) {
  ensure_sodium();
  Point p;
  crypto_core_ristretto255_from_hash(p.b_.data(), h.data());
  return p;
}

Point Point::base() {
  ensure_sodium();
  Point p;
  Scalar one = Scalar::one();
  if (crypto_scalarmult_ristretto255_base(p.b_.data(), one.bytes().data()) != 0) {
    throw Error(ErrorCode::kInternal, "base point");
  }
  return p;
}

bool Point::is_identity() const { return sodium_is_zero(b_.data(), b_.size()) == 1; }

Point operator+(const Point& a, const Point& b) {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  Point p;
  crypto_core_ristretto255_add(p.b_.data(), a.b_.data(), b.b_.data());
  return p;
}

Point operator-(const Point& a, const Point& b) {
  if (b.is_identity()) return a;
  Point p;
  crypto_core_ristretto255_sub(p.b_.data(), a.b_.data(), b.b_.data());
  return p;
}

Point operator*(const Scalar& k, const Point& p) {
  if (k.is_zero() || p.is_identity()) return {};
  Point out;
  // A nonzero result is written in full; -1 only flags the identity.
  if (crypto_scalarmult_ristretto255(out.b_.data(), k.bytes().data(), p.b_.data()) != 0) {
    return {};
  }
  return out;
}

Point multi_scalar_mul(std::span<const Scalar> k, std::span<const Point> p) {
  if (k.size() != p.size()) throw Error(ErrorCode::kDimensionMismatch, "multiexp length");
  Point acc;
  const Scalar one = Scalar::one(), minus_one = -one;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i].is_zero()) continue;
    if (k[i] == one) {
      acc += p[i];
    } else if (k[i] == minus_one) {
      acc -= p[i];
    } else {
      acc += k[i] * p[i];
    }
  }
  return acc;
}

namespace {

Point derive(const std::string& label, const std::string& tag, std::uint64_t index) {
  crypto_hash_sha512_state st;
  crypto_hash_sha512_init(&st);
  const std::string prefix = "lsap-generators/";
  crypto_hash_sha512_update(&st, reinterpret_cast<const unsigned char*>(prefix.data()), prefix.size());
  const std::uint64_t len = label.size();
  std::array<std::uint8_t, 8> buf;
  for (int k = 0; k < 8; ++k) buf[k] = static_cast<std::uint8_t>(len >> (8 * k));
  crypto_hash_sha512_update(&st, buf.data(), buf.size());
  crypto_hash_sha512_update(&st, reinterpret_cast<const unsigned char*>(label.data()), label.size());
  crypto_hash_sha512_update(&st, reinterpret_cast<const unsigned char*>(tag.data()), tag.size());
  for (int k = 0; k < 8; ++k) buf[k] = static_cast<std::uint8_t>(index >> (8 * k));
  crypto_hash_sha512_update(&st, buf.data(), buf.size());
  std::array<std::uint8_t, 64> h;
  crypto_hash_sha512_final(&st, h.data());
  return Point::from_hash(h);
}

}  // namespace

GroupContext setup(const std::string& label, std::size_t capacity) {
  ensure_sodium();
  GroupContext ctx;
  ctx.label = label;
  ctx.g = derive(label, "/g", 0);
  ctx.h = derive(label, "/h", 0);
  ctx.q = derive(label, "/q", 0);
  ctx.gv.reserve(capacity);
  ctx.hv.reserve(capacity);
  for (std::size_t i = 0; i < capacity; ++i) {
    ctx.gv.push_back(derive(label, "/G", i));
    ctx.hv.push_back(derive(label, "/H", i));
  }
  return ctx;
}

}  // namespace lsap::zk
