#pragma once

#include "lsap/algorithms/domain.hpp"
#include "lsap/mpc/engine.hpp"

namespace lsap::mpc {

// Secret-shared values on top of an Engine. Same interface and the same
// stats/leakage bookkeeping as ClearDomain, so the solver templates run
// unchanged.
class SecureDomain : public DomainBase {
 public:
  using Value = SharedValue;

  SecureDomain(Engine& engine, int compare_bits, LeakageLog* log = nullptr)
      : DomainBase(log), engine_(engine), bits_(compare_bits) {}

  int compare_bits() const { return bits_; }
  Engine& engine() { return engine_; }

  Value constant(std::int64_t c) const { return SharedValue::from_public(c); }

  std::vector<bool> is_zero(std::span<const Value> xs) {
    auto out = engine_.zero_test(xs);
    count_zero_tests(out);
    return out;
  }
  Value min(std::span<const Value> xs) {
    count_mins(1, xs.size());
    return engine_.min(xs, bits_);
  }
  std::vector<Value> min_each(std::span<const Value> flat, std::size_t group) {
    count_mins(flat.size() / group, group);
    return engine_.min_each(flat, group, bits_);
  }
  std::pair<std::size_t, Value> argmin(std::span<const Value> xs) {
    auto out = engine_.min_index(xs, bits_);
    count_argmin(xs.size(), out.first);
    return out;
  }
  std::vector<std::pair<std::size_t, Value>> argmin_each(std::span<const Value> flat,
                                                         std::size_t group) {
    auto out = engine_.min_index_each(flat, group, bits_);
    for (const auto& [k, v] : out) count_argmin(group, k);
    return out;
  }
  std::vector<bool> less(std::span<const Value> a, std::span<const Value> b) {
    auto out = engine_.less_than_open(a, b, bits_);
    count_branches(out);
    return out;
  }
  std::vector<Value> floor_div(std::span<const Value> xs, std::int64_t d) {
    return engine_.floor_div(xs, d, bits_);
  }
  std::vector<std::int64_t> reveal(std::span<const Value> xs) { return engine_.open(xs); }

 private:
  Engine& engine_;
  int bits_;
};

}  // namespace lsap::mpc
