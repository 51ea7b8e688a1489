#include "lsap/mpc/engine.hpp"

#include <cmath>

#include "lsap/error.hpp"

namespace lsap::mpc {

Counters& Counters::operator+=(const Counters& o) {
  rounds += o.rounds;
  opened_values += o.opened_values;
  multiplications += o.multiplications;
  zero_tests += o.zero_tests;
  comparisons += o.comparisons;
  min_finds += o.min_finds;
  random_bits += o.random_bits;
  return *this;
}

Counters operator-(Counters a, const Counters& b) {
  a.rounds -= b.rounds;
  a.opened_values -= b.opened_values;
  a.multiplications -= b.multiplications;
  a.zero_tests -= b.zero_tests;
  a.comparisons -= b.comparisons;
  a.min_finds -= b.min_finds;
  a.random_bits -= b.random_bits;
  return a;
}

std::int64_t local_time_ns(const Counters& c, const CostModel& m) {
  return c.rounds * std::llround(m.round_overhead_ms * 1e6) +
         c.multiplications * std::llround(m.mult_us * 1e3) +
         c.opened_values * std::llround(m.open_us * 1e3);
}

std::int64_t simulated_time_ns(const Counters& c, const CostModel& m) {
  return local_time_ns(c, m) + c.rounds * std::llround(m.latency_ms * 1e6);
}

Engine::Engine(EngineConfig config) : config_(config), dealer_rng_(config.seed ^ 0xD1CEu) {
  for (int k = 0; k < kParties; ++k) {
    party_rng_[k].seed(config.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(k) + 1);
  }
}

void Engine::exchange() {
  for (int to = 0; to < kParties; ++to) {
    for (int from = 0; from < kParties; ++from) {
      inbox_[to][from].swap(outbox_[from][to]);
      outbox_[from][to].clear();
      cursor_[to][from] = 0;
      if (config_.record_views && from != to) {
        views_[to].insert(views_[to].end(), inbox_[to][from].begin(), inbox_[to][from].end());
      }
    }
  }
  ++counters_.rounds;
}

SharedValue Engine::share(std::int64_t x, int owner) {
  return share(std::span<const std::int64_t>(&x, 1), owner).front();
}

std::vector<SharedValue> Engine::share(std::span<const std::int64_t> xs, int owner) {
  std::array<std::vector<std::int64_t>, kParties> all;
  all[owner].assign(xs.begin(), xs.end());
  return std::move(share_all(all)[owner]);
}

std::array<std::vector<SharedValue>, kParties> Engine::share_all(
    const std::array<std::vector<std::int64_t>, kParties>& xs) {
  const std::int64_t bound = std::int64_t{1} << config_.input_bits;
  for (int p = 0; p < kParties; ++p) {
    for (const std::int64_t x : xs[p]) {
      if (x >= bound || x <= -bound) {
        throw Error(ErrorCode::kBitBound, "input exceeds the configured bound 2^" +
                                              std::to_string(config_.input_bits));
      }
      const Fp secret = Fp::from_int(x);
      const Fp a = Fp::random(party_rng_[p]);
      Fp share = secret;
      for (int k = 0; k < kParties; ++k) {
        share += a;
        send(p, k, share);
      }
    }
  }
  exchange();
  std::array<std::vector<SharedValue>, kParties> out;
  for (int p = 0; p < kParties; ++p) {
    out[p].resize(xs[p].size());
    for (auto& v : out[p]) {
      for (int k = 0; k < kParties; ++k) v.s[k] = recv(k, p);
    }
  }
  return out;
}

std::vector<Fp> Engine::open_field(std::span<const SharedValue> xs) {
  for (const auto& x : xs) {
    // Adding a fresh sharing of zero makes the sent points uniform even when
    // the sharing was built from public constants alone.
    const SharedValue y = x + dealer_share(Fp());
    for (int from = 0; from < kParties; ++from) {
      for (int to = 0; to < kParties; ++to) send(from, to, y.s[from]);
    }
  }
  exchange();
  std::vector<Fp> out(xs.size());
  for (std::size_t t = 0; t < xs.size(); ++t) {
    // Party 0 reconstructs from points 1 and 2 and checks point 3 lies on
    // the same line; the other parties hold identical copies.
    const Fp f1 = recv(0, 0), f2 = recv(0, 1), f3 = recv(0, 2);
    if (f3 != f2 + f2 - f1) throw Error(ErrorCode::kInternal, "inconsistent shares on open");
    out[t] = f1 + f1 - f2;
  }
  counters_.opened_values += static_cast<std::int64_t>(xs.size());
  if (config_.record_views) opened_.insert(opened_.end(), out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> Engine::open(std::span<const SharedValue> xs) {
  const std::vector<Fp> fs = open_field(xs);
  std::vector<std::int64_t> out;
  out.reserve(fs.size());
  for (const Fp f : fs) {
    const i128 v = f.lift();
    if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::kBitBound, "opened value exceeds 64 bits");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

std::int64_t Engine::reconstruct(const SharedValue& a) {
  return open(std::span<const SharedValue>(&a, 1)).front();
}

void Engine::queue_reshare(const std::array<Fp, kParties>& h) {
  for (int k = 0; k < kParties; ++k) {
    const Fp r = Fp::random(party_rng_[k]);
    Fp x = h[k];
    for (int j = 0; j < kParties; ++j) {
      x += r;
      send(k, j, x);
    }
  }
}

std::vector<SharedValue> Engine::finish_reshare(std::size_t count) {
  exchange();
  std::vector<SharedValue> out(count);
  for (auto& v : out) {
    for (int j = 0; j < kParties; ++j) {
      // Degree-2 recombination at 0 from points 1, 2, 3: (3, -3, 1).
      const Fp d = recv(j, 0) - recv(j, 1);
      v.s[j] = d + d + d + recv(j, 2);
    }
  }
  return out;
}

SharedValue Engine::mul(const SharedValue& a, const SharedValue& b) {
  return mul(std::span<const SharedValue>(&a, 1), std::span<const SharedValue>(&b, 1)).front();
}

std::vector<SharedValue> Engine::mul(std::span<const SharedValue> a,
                                     std::span<const SharedValue> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "mul: size mismatch");
  if (a.empty()) return {};
  for (std::size_t t = 0; t < a.size(); ++t) {
    queue_reshare({a[t].s[0] * b[t].s[0], a[t].s[1] * b[t].s[1], a[t].s[2] * b[t].s[2]});
  }
  counters_.multiplications += static_cast<std::int64_t>(a.size());
  return finish_reshare(a.size());
}

std::vector<SharedValue> Engine::dot(std::span<const SharedValue> a,
                                     std::span<const SharedValue> b, std::size_t len) {
  if (a.size() != b.size() || len == 0 || a.size() % len != 0) {
    throw Error(ErrorCode::kDimensionMismatch, "dot: size mismatch");
  }
  if (a.empty()) return {};
  for (std::size_t g = 0; g < a.size(); g += len) {
    std::array<Fp, kParties> h{};
    for (std::size_t t = g; t < g + len; ++t) {
      for (int k = 0; k < kParties; ++k) h[k] += a[t].s[k] * b[t].s[k];
    }
    queue_reshare(h);
  }
  counters_.multiplications += static_cast<std::int64_t>(a.size());
  return finish_reshare(a.size() / len);
}

SharedValue Engine::dealer_share(Fp value) {
  const Fp a = Fp::random(dealer_rng_);
  SharedValue out;
  Fp x = value;
  for (int k = 0; k < kParties; ++k) {
    x += a;
    out.s[k] = x;
  }
  return out;
}

std::vector<SharedValue> Engine::random_bits(std::size_t n) {
  std::vector<SharedValue> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(dealer_share(Fp::raw(dealer_rng_() & 1)));
  counters_.random_bits += static_cast<std::int64_t>(n);
  return out;
}

SharedValue Engine::random_nonzero() { return dealer_share(Fp::random_nonzero(dealer_rng_)); }

std::vector<bool> Engine::zero_test(std::span<const SharedValue> xs) {
  if (xs.empty()) return {};
  std::vector<SharedValue> masks;
  masks.reserve(xs.size());
  for (std::size_t t = 0; t < xs.size(); ++t) masks.push_back(random_nonzero());
  const auto masked = mul(masks, xs);
  const auto opened = open_field(masked);
  std::vector<bool> out(xs.size());
  for (std::size_t t = 0; t < xs.size(); ++t) out[t] = opened[t].is_zero();
  counters_.zero_tests += static_cast<std::int64_t>(xs.size());
  return out;
}

i128 Engine::peek(const SharedValue& a) { return (a.s[0] + a.s[0] - a.s[1]).lift(); }

}  // namespace lsap::mpc
