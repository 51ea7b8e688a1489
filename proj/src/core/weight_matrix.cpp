#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "lsap/core.hpp"

namespace lsap {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kInstanceTooLarge: return "instance too large";
    case ErrorCode::kBitBound: return "bit bound violated";
    case ErrorCode::kNonTermination: return "no progress";
    case ErrorCode::kInternal: return "internal error";
    case ErrorCode::kInvalidCertificate: return "invalid certificate";
    case ErrorCode::kWidthOverflow: return "range width overflow";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown";
}

const char* to_string(Sense sense) {
  return sense == Sense::kMinimize ? "minimize" : "maximize";
}

Sense parse_sense(const std::string& text) {
  if (text == "minimize" || text == "min") return Sense::kMinimize;
  if (text == "maximize" || text == "max") return Sense::kMaximize;
  throw Error(ErrorCode::kParse, "unknown sense '" + text + "'");
}

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols, Sense sense,
                           int bit_length)
    : rows_(rows), cols_(cols), data_(rows * cols, 0), sense_(sense),
      bit_length_(bit_length) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "weight matrix needs rows >= 1 and cols >= 1");
  }
  if (bit_length < 1 || bit_length > 62) {
    throw Error(ErrorCode::kInvalidArgument, "bit length must lie in [1, 62]");
  }
}

WeightMatrix WeightMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows, Sense sense,
    int bit_length) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::kInvalidArgument, "weight matrix needs rows >= 1 and cols >= 1");
  }
  WeightMatrix w(rows.size(), rows.front().size(), sense, bit_length);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != w.cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged weight matrix");
    }
    std::copy(rows[i].begin(), rows[i].end(), w.data_.begin() + i * w.cols_);
  }
  return w;
}

std::int64_t WeightMatrix::max_entry() const {
  return *std::max_element(data_.begin(), data_.end());
}

std::int64_t WeightMatrix::min_entry() const {
  return *std::min_element(data_.begin(), data_.end());
}

std::int64_t WeightMatrix::max_abs() const {
  std::int64_t m = 0;
  for (auto x : data_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

bool WeightMatrix::fits(int bits) const {
  const std::int64_t bound = std::int64_t{1} << bits;
  return std::all_of(data_.begin(), data_.end(),
                     [&](std::int64_t x) { return x > -bound && x < bound; });
}

void WeightMatrix::validate() const {
  if (!fits(bit_length_)) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "entry magnitude exceeds 2^" + std::to_string(bit_length_));
  }
}

bool WeightMatrix::operator==(const WeightMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         sense_ == other.sense_ && data_ == other.data_;
}

Assignment make_assignment(const WeightMatrix& w, std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Assignment a;
  for (const auto& p : pairs) {
    if (p.row >= w.rows() || p.col >= w.cols()) {
      throw Error(ErrorCode::kDimensionMismatch, "assignment pair out of range");
    }
    a.cost += w(p.row, p.col);
  }
  a.pairs = std::move(pairs);
  return a;
}

std::int64_t DualSolution::objective() const {
  return std::accumulate(u.begin(), u.end(), std::int64_t{0}) +
         std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

std::int64_t permutation_cost(const WeightMatrix& w,
                              std::span<const std::size_t> perm) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) total += w(i, perm[i]);
  return total;
}

}  // namespace lsap
