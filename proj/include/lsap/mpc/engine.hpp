#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "lsap/mpc/field.hpp"

namespace lsap::mpc {

inline constexpr int kParties = 3;

// Shamir degree-1 sharing of a field element; s[k] is held by party k, the
// evaluation point of party k is k + 1.
struct SharedValue {
  std::array<Fp, kParties> s{};

  static SharedValue from_public(Fp c) { return {{c, c, c}}; }
  static SharedValue from_public(std::int64_t c) { return from_public(Fp::from_int(c)); }

  friend SharedValue operator+(const SharedValue& a, const SharedValue& b) {
    return {{a.s[0] + b.s[0], a.s[1] + b.s[1], a.s[2] + b.s[2]}};
  }
  friend SharedValue operator-(const SharedValue& a, const SharedValue& b) {
    return {{a.s[0] - b.s[0], a.s[1] - b.s[1], a.s[2] - b.s[2]}};
  }
  friend SharedValue operator*(const SharedValue& a, Fp k) {
    return {{a.s[0] * k, a.s[1] * k, a.s[2] * k}};
  }
  friend SharedValue operator*(const SharedValue& a, std::int64_t k) { return a * Fp::from_int(k); }
  friend SharedValue operator+(const SharedValue& a, Fp c) {
    return a + from_public(c);
  }
  SharedValue& operator+=(const SharedValue& b) { return *this = *this + b; }
  SharedValue& operator-=(const SharedValue& b) { return *this = *this - b; }
};

struct Counters {
  std::int64_t rounds = 0;
  std::int64_t opened_values = 0;
  std::int64_t multiplications = 0;
  std::int64_t zero_tests = 0;
  std::int64_t comparisons = 0;
  std::int64_t min_finds = 0;
  std::int64_t random_bits = 0;

  Counters& operator+=(const Counters& o);
  friend Counters operator-(Counters a, const Counters& b);
  friend bool operator==(const Counters&, const Counters&) = default;
  // Multiplications plus opened values.
  std::int64_t secure_ops() const { return multiplications + opened_values; }
};

// Prices for the simulated clock. Local work is charged per round, per
// multiplication and per opened value; the network adds latency per round.
struct CostModel {
  double latency_ms = 0.0;
  double round_overhead_ms = 0.1;
  double mult_us = 1.0;
  double open_us = 0.5;
};

// Simulated times in integer nanoseconds so the latency law is exact.
std::int64_t local_time_ns(const Counters& c, const CostModel& m);
std::int64_t simulated_time_ns(const Counters& c, const CostModel& m);

struct EngineConfig {
  std::uint64_t seed = 1;
  int kappa = 40;        // statistical masking parameter
  int input_bits = 62;   // inputs must satisfy |x| < 2^input_bits
  bool record_views = false;
};

// Cost of one secret comparison of `bits`-bit values, in the units counted
// by the engine. Shared with the simplex cost model.
struct ComparisonCost {
  std::int64_t rounds = 0;          // per batch
  std::int64_t multiplications = 0; // per element
  std::int64_t opened_values = 0;   // per element
  std::int64_t random_bits = 0;     // per element
};
ComparisonCost comparison_cost(int bits);
int ceil_log2(std::size_t n);

// Three semi-honest parties simulated in one process. Every interaction goes
// through per-pair channels and exchange(), which is the round barrier.
class Engine {
 public:
  explicit Engine(EngineConfig config = {});

  const EngineConfig& config() const { return config_; }
  const Counters& counters() const { return counters_; }
  Counters& counters() { return counters_; }

  // Input by `owner`; one round per batch.
  SharedValue share(std::int64_t x, int owner = 0);
  std::vector<SharedValue> share(std::span<const std::int64_t> xs, int owner = 0);
  // Each party inputs its own vector in the same round.
  std::array<std::vector<SharedValue>, kParties> share_all(
      const std::array<std::vector<std::int64_t>, kParties>& xs);

  std::int64_t reconstruct(const SharedValue& a);
  std::vector<std::int64_t> open(std::span<const SharedValue> xs);
  std::vector<Fp> open_field(std::span<const SharedValue> xs);

  SharedValue mul(const SharedValue& a, const SharedValue& b);
  std::vector<SharedValue> mul(std::span<const SharedValue> a, std::span<const SharedValue> b);
  // Sum_k a_k b_k for each group of `len` consecutive entries; one round.
  std::vector<SharedValue> dot(std::span<const SharedValue> a, std::span<const SharedValue> b,
                               std::size_t len);

  // Opens r*a with r random nonzero: two rounds per batch.
  std::vector<bool> zero_test(std::span<const SharedValue> xs);

  // Secret bits [a_k < b_k]; |a_k - b_k| < 2^bits is required.
  std::vector<SharedValue> less_than(std::span<const SharedValue> a,
                                     std::span<const SharedValue> b, int bits);
  std::vector<bool> less_than_open(std::span<const SharedValue> a,
                                   std::span<const SharedValue> b, int bits);

  // Comparison trees over consecutive groups of `group` entries, all groups
  // in parallel. Lowest index wins ties.
  std::vector<SharedValue> min_each(std::span<const SharedValue> flat, std::size_t group,
                                    int bits);
  SharedValue min(std::span<const SharedValue> xs, int bits);
  // Public index: the argmin position is opened.
  std::vector<std::pair<std::size_t, SharedValue>> min_index_each(
      std::span<const SharedValue> flat, std::size_t group, int bits);
  std::pair<std::size_t, SharedValue> min_index(std::span<const SharedValue> xs, int bits);
  // Secret index.
  std::pair<SharedValue, SharedValue> min_index_secret(std::span<const SharedValue> xs, int bits);

  // floor(x / d) for public d > 0 and |x| < 2^bits.
  std::vector<SharedValue> floor_div(std::span<const SharedValue> xs, std::int64_t d, int bits);

  // Preprocessing from a trusted dealer; costs no online rounds.
  SharedValue dealer_share(Fp value);
  std::vector<SharedValue> random_bits(std::size_t n);
  SharedValue random_nonzero();

  // Values a party received over the network (when record_views is set).
  const std::vector<Fp>& view(int party) const { return views_[party]; }
  // Every value opened so far (when record_views is set).
  const std::vector<Fp>& opened_log() const { return opened_; }

  // Private coins of one party.
  std::mt19937_64& party_rng(int party) { return party_rng_[party]; }

  // Simulator-side peek that does not touch counters or the network.
  static i128 peek(const SharedValue& a);

 private:
  void send(int from, int to, Fp value) { outbox_[from][to].push_back(value); }
  void exchange();
  Fp recv(int to, int from) { return inbox_[to][from][cursor_[to][from]++]; }
  SharedValue reshare_products(std::array<Fp, kParties> h);
  std::vector<SharedValue> finish_reshare(std::size_t count);
  void queue_reshare(const std::array<Fp, kParties>& h);
  void check_bound(const SharedValue& x, int bits) const;
  std::vector<SharedValue> tree(std::span<const SharedValue> flat, std::size_t group, int bits,
                                std::vector<SharedValue>* index);

  EngineConfig config_;
  Counters counters_;
  std::array<std::mt19937_64, kParties> party_rng_;
  std::mt19937_64 dealer_rng_;
  std::array<std::array<std::vector<Fp>, kParties>, kParties> outbox_, inbox_;
  std::array<std::array<std::size_t, kParties>, kParties> cursor_{};
  std::array<std::vector<Fp>, kParties> views_;
  std::vector<Fp> opened_;
};

}  // namespace lsap::mpc
