#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lsap::zk {

// Scalar modulo the ristretto255 group order, 32 bytes little endian.
class Scalar {
 public:
  static constexpr std::size_t kBytes = 32;
  using Bytes = std::array<std::uint8_t, kBytes>;

  Scalar() = default;
  static Scalar from_bytes(const Bytes& b) { Scalar s; s.b_ = b; return s; }
  // Rejects non-canonical encodings.
  static bool is_canonical(const Bytes& b);
  static Scalar from_int(std::int64_t x);
  static Scalar from_u64(std::uint64_t x);
  static Scalar random();
  // Reduces 64 uniform bytes.
  static Scalar from_wide(std::span<const std::uint8_t, 64> wide);
  static Scalar zero() { return {}; }
  static Scalar one() { return from_int(1); }

  const Bytes& bytes() const { return b_; }
  bool is_zero() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Bytes b_{};
};

// Group element in canonical compressed encoding; all zeros is the identity.
class Point {
 public:
  static constexpr std::size_t kBytes = 32;
  using Bytes = std::array<std::uint8_t, kBytes>;

  Point() = default;
  static Point identity() { return {}; }
  // Throws kParse on an invalid encoding.
  static Point from_bytes(const Bytes& b);
  // Hash to the group (64 bytes in).
  static Point from_hash(std::span<const std::uint8_t, 64> h);
  static Point base();

  const Bytes& bytes() const { return b_; }
  bool is_identity() const;

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator*(const Scalar& k, const Point& p);
  Point& operator+=(const Point& o) { return *this = *this + o; }
  Point& operator-=(const Point& o) { return *this = *this - o; }
  friend bool operator==(const Point&, const Point&) = default;

 private:
  Bytes b_{};
};

// Sum of k_i P_i.
Point multi_scalar_mul(std::span<const Scalar> k, std::span<const Point> p);

// Generators derived by hashing a public label; nobody knows a discrete-log
// relation between any two of them.
struct GroupContext {
  std::string label;
  Point g;  // value base
  Point h;  // blinding base
  Point q;  // inner-product base
  std::vector<Point> gv;
  std::vector<Point> hv;

  std::size_t capacity() const { return gv.size(); }
};

// Deterministic in (label, capacity); capacity is the number of range-proof
// bits supported (batch size times width).
GroupContext setup(const std::string& label, std::size_t capacity);

// Ensures libsodium is initialised.
void ensure_sodium();

}  // namespace lsap::zk
