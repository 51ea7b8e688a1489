#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lsap/leakage.hpp"
#include "lsap/solvers.hpp"

namespace lsap {

// Solution of a square minimisation instance in some arithmetic domain.
template <class V>
struct CoreSolution {
  std::vector<std::size_t> col_of_row;
  std::vector<V> u;
  std::vector<V> v;
};

// Bookkeeping shared by the clear and the secret-shared domains so that both
// count and log exactly the same events for the same run.
class DomainBase {
 public:
  explicit DomainBase(LeakageLog* log = nullptr) : log_(log) {}

  OpStats& stats() { return stats_; }
  const OpStats& stats() const { return stats_; }

  void note(LeakKind kind, std::int64_t index, std::int64_t value) {
    if (log_) log_->append(kind, index, value);
  }

 protected:
  void count_zero_tests(const std::vector<bool>& bits) {
    stats_.zero_tests += static_cast<std::int64_t>(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) note(LeakKind::kZeroTest, k, bits[k]);
  }
  void count_mins(std::size_t groups, std::size_t size) {
    stats_.min_finds += static_cast<std::int64_t>(groups);
    if (size > 0) stats_.comparisons += static_cast<std::int64_t>(groups * (size - 1));
  }
  void count_argmin(std::size_t size, std::size_t index) {
    count_mins(1, size);
    note(LeakKind::kArgminOpened, static_cast<std::int64_t>(size),
         static_cast<std::int64_t>(index));
  }
  void count_branches(const std::vector<bool>& bits) {
    stats_.comparisons += static_cast<std::int64_t>(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) note(LeakKind::kBranchTaken, k, bits[k]);
  }

 private:
  OpStats stats_;
  LeakageLog* log_;
};

// Plain integers. Used by the cleartext solvers.
class ClearDomain : public DomainBase {
 public:
  using Value = std::int64_t;
  using DomainBase::DomainBase;

  Value constant(std::int64_t c) const { return c; }

  std::vector<bool> is_zero(std::span<const Value> xs);
  Value min(std::span<const Value> xs);
  std::vector<Value> min_each(std::span<const Value> flat, std::size_t group);
  std::pair<std::size_t, Value> argmin(std::span<const Value> xs);
  std::vector<std::pair<std::size_t, Value>> argmin_each(std::span<const Value> flat,
                                                         std::size_t group);
  // Opened bits a_k < b_k.
  std::vector<bool> less(std::span<const Value> a, std::span<const Value> b);
  std::vector<Value> floor_div(std::span<const Value> xs, std::int64_t d);
  std::vector<std::int64_t> reveal(std::span<const Value> xs) const {
    return {xs.begin(), xs.end()};
  }
};

}  // namespace lsap
