#include "lsap/zk/transcript.hpp"

#include <array>

namespace lsap::zk {
namespace {

void absorb(crypto_hash_sha512_state& st, std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 8> len;
  for (int k = 0; k < 8; ++k) len[k] = static_cast<std::uint8_t>(data.size() >> (8 * k));
  crypto_hash_sha512_update(&st, len.data(), len.size());
  crypto_hash_sha512_update(&st, data.data(), data.size());
}

std::span<const std::uint8_t> bytes_of(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace

Transcript::Transcript(std::string_view domain) {
  ensure_sodium();
  crypto_hash_sha512_init(&state_);
  absorb(state_, bytes_of("lsap-transcript-v1"));
  absorb(state_, bytes_of(domain));
}

void Transcript::append(std::string_view label, std::span<const std::uint8_t> data) {
  absorb(state_, bytes_of(label));
  absorb(state_, data);
}

void Transcript::append_u64(std::string_view label, std::uint64_t x) {
  std::array<std::uint8_t, 8> b;
  for (int k = 0; k < 8; ++k) b[k] = static_cast<std::uint8_t>(x >> (8 * k));
  append(label, b);
}

Scalar Transcript::challenge(std::string_view label) {
  absorb(state_, bytes_of("challenge"));
  absorb(state_, bytes_of(label));
  // Fork the state so later messages still chain on this challenge.
  crypto_hash_sha512_state fork = state_;
  std::array<std::uint8_t, 64> out;
  crypto_hash_sha512_final(&fork, out.data());
  absorb(state_, out);
  return Scalar::from_wide(out);
}

}  // namespace lsap::zk
