#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsap/error.hpp"

namespace lsap {

enum class Sense { kMinimize, kMaximize };

inline constexpr int kDefaultBitLength = 16;

const char* to_string(Sense sense);
Sense parse_sense(const std::string& text);

/// Integer cost (or utility) matrix of an assignment instance.
///
/// Entries are bounded by the configured bit length: |w| < 2^bit_length.
/// A matrix produced by to_max_form() remembers the public offset M it was
/// derived with, so results can be mapped back to the minimization instance.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols,
               Sense sense = Sense::kMinimize,
               int bit_length = kDefaultBitLength);

  static WeightMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                Sense sense = Sense::kMinimize,
                                int bit_length = kDefaultBitLength);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t side() const { return rows_ > cols_ ? rows_ : cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::int64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  const std::vector<std::int64_t>& data() const { return data_; }

  Sense sense() const { return sense_; }
  void set_sense(Sense sense) { sense_ = sense; }
  int bit_length() const { return bit_length_; }
  void set_bit_length(int bits) { bit_length_ = bits; }
  std::optional<std::int64_t> max_offset() const { return max_offset_; }
  void set_max_offset(std::optional<std::int64_t> m) { max_offset_ = m; }

  std::int64_t max_entry() const;
  std::int64_t min_entry() const;
  std::int64_t max_abs() const;

  /// Throws kInstanceTooLarge when an entry does not fit the bit length.
  void validate() const;
  bool fits(int bits) const;

  bool operator==(const WeightMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
  Sense sense_ = Sense::kMinimize;
  int bit_length_ = kDefaultBitLength;
  std::optional<std::int64_t> max_offset_;
};

struct Pair {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

struct Assignment {
  std::vector<Pair> pairs;  // sorted by row
  std::int64_t cost = 0;
};

/// Builds an assignment from pairs, sorting by row and summing the weights.
Assignment make_assignment(const WeightMatrix& w, std::vector<Pair> pairs);

/// Row/column potentials of the dual problem.
struct DualSolution {
  std::vector<std::int64_t> u;
  std::vector<std::int64_t> v;
  std::int64_t objective() const;
};

/// max c^T x  s.t.  A x <= b, x >= 0 for a square assignment instance.
struct LpInstance {
  std::vector<std::int64_t> objective;
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::int64_t> b;
  std::size_t n = 0;  // variables
  std::size_t m = 0;  // constraints
  std::size_t side = 0;
  // Public constant of the max-form mapping; the minimization costs are
  // offset - objective. Zero means plain negation.
  std::int64_t offset = 0;
  int bit_length = kDefaultBitLength;
};

/// Square zero-padded instance plus what is needed to strip the padding.
struct Balanced {
  WeightMatrix matrix;
  std::size_t orig_rows = 0;
  std::size_t orig_cols = 0;
  bool padded() const { return orig_rows != orig_cols; }
};

Balanced balance(const WeightMatrix& w);

/// Drops pairs that touch padded rows or columns and recomputes the cost
/// against the original matrix.
Assignment strip_padding(const Balanced& balanced, const Assignment& padded,
                         const WeightMatrix& original);

/// M - w with M = max entry (or the supplied M, which must dominate).
WeightMatrix to_max_form(const WeightMatrix& w,
                         std::optional<std::int64_t> offset = std::nullopt);

/// Plain negation; flips the sense.
WeightMatrix negated(const WeightMatrix& w);

LpInstance to_lp(const WeightMatrix& w);

/// Weighted sum over a permutation given as col = perm[row].
std::int64_t permutation_cost(const WeightMatrix& w,
                              std::span<const std::size_t> perm);

// Text format: "rows cols sense" then row-major integers, one row per line.
// The CSV flavour has the same header fields separated by commas.
WeightMatrix read_matrix(std::istream& in);
WeightMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const WeightMatrix& w);
std::string format_matrix(const WeightMatrix& w);
void write_matrix_csv(std::ostream& out, const WeightMatrix& w);

}  // namespace lsap
