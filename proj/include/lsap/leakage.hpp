#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lsap {

enum class LeakKind {
  kBranchTaken,
  kCoverBit,
  kZeroTest,
  kIterationCount,
  kArgminOpened,
};

const char* to_string(LeakKind kind);

// Payloads are public indices and booleans only.
struct LeakEvent {
  LeakKind kind;
  std::int64_t index;
  std::int64_t value;
  friend bool operator==(const LeakEvent&, const LeakEvent&) = default;
};

class LeakageLog {
 public:
  void append(LeakKind kind, std::int64_t index, std::int64_t value) {
    if (enabled_) events_.push_back({kind, index, value});
  }
  const std::vector<LeakEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  std::size_t count(LeakKind kind) const;
  void clear() { events_.clear(); }
  void set_enabled(bool on) { enabled_ = on; }

  /// One event per line: "<kind> <index> <value>".
  void write(std::ostream& out) const;
  std::string to_text() const;

 private:
  std::vector<LeakEvent> events_;
  bool enabled_ = true;
};

}  // namespace lsap
