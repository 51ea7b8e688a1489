#pragma once

#include <sodium.h>

#include <string_view>

#include "lsap/zk/group.hpp"

namespace lsap::zk {

// Fiat-Shamir transcript over SHA-512. Every message is framed by its label
// and length, and each challenge is bound to everything absorbed before it.
class Transcript {
 public:
  explicit Transcript(std::string_view domain);

  void append(std::string_view label, std::span<const std::uint8_t> data);
  void append(std::string_view label, const Point& p) { append(label, p.bytes()); }
  void append(std::string_view label, const Scalar& s) { append(label, s.bytes()); }
  void append_u64(std::string_view label, std::uint64_t x);

  Scalar challenge(std::string_view label);

 private:
  crypto_hash_sha512_state state_;
};

}  // namespace lsap::zk
