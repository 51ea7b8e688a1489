#include <algorithm>
#include <ostream>
#include <sstream>

#include "lsap/leakage.hpp"

namespace lsap {

const char* to_string(LeakKind kind) {
  switch (kind) {
    case LeakKind::kBranchTaken: return "branch";
    case LeakKind::kCoverBit: return "cover";
    case LeakKind::kZeroTest: return "zero-test";
    case LeakKind::kIterationCount: return "iteration";
    case LeakKind::kArgminOpened: return "argmin";
  }
  return "unknown";
}

std::size_t LeakageLog::count(LeakKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      events_.begin(), events_.end(), [&](const LeakEvent& e) { return e.kind == kind; }));
}

void LeakageLog::write(std::ostream& out) const {
  for (const auto& e : events_) {
    out << to_string(e.kind) << ' ' << e.index << ' ' << e.value << '\n';
  }
}

std::string LeakageLog::to_text() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

}  // namespace lsap
