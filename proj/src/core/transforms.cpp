#include <algorithm>

#include "lsap/core.hpp"

namespace lsap {

Balanced balance(const WeightMatrix& w) {
  Balanced out;
  out.orig_rows = w.rows();
  out.orig_cols = w.cols();
  const std::size_t s = w.side();
  out.matrix = WeightMatrix(s, s, w.sense(), w.bit_length());
  out.matrix.set_max_offset(w.max_offset());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) out.matrix.at(i, j) = w(i, j);
  }
  return out;
}

Assignment strip_padding(const Balanced& balanced, const Assignment& padded,
                         const WeightMatrix& original) {
  std::vector<Pair> kept;
  for (const auto& p : padded.pairs) {
    if (p.row < balanced.orig_rows && p.col < balanced.orig_cols) kept.push_back(p);
  }
  return make_assignment(original, std::move(kept));
}

WeightMatrix to_max_form(const WeightMatrix& w, std::optional<std::int64_t> offset) {
  if (w.sense() != Sense::kMinimize) {
    throw Error(ErrorCode::kInvalidArgument, "to_max_form expects a minimization instance");
  }
  const std::int64_t m = offset.value_or(w.max_entry());
  if (m < w.max_entry()) {
    throw Error(ErrorCode::kInvalidArgument, "offset must dominate every entry");
  }
  WeightMatrix out(w.rows(), w.cols(), Sense::kMaximize, w.bit_length());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) out.at(i, j) = m - w(i, j);
  }
  // M - w can need one more bit when w has negative entries.
  if (!out.fits(out.bit_length())) out.set_bit_length(std::min(62, w.bit_length() + 1));
  out.set_max_offset(m);
  return out;
}

WeightMatrix negated(const WeightMatrix& w) {
  WeightMatrix out(w.rows(), w.cols(),
                   w.sense() == Sense::kMinimize ? Sense::kMaximize : Sense::kMinimize,
                   w.bit_length());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) out.at(i, j) = -w(i, j);
  }
  return out;
}

LpInstance to_lp(const WeightMatrix& w) {
  if (!w.square()) {
    throw Error(ErrorCode::kInvalidArgument, "to_lp expects a square matrix; balance() first");
  }
  if (w.sense() != Sense::kMaximize) {
    throw Error(ErrorCode::kInvalidArgument, "to_lp expects a maximization instance; use to_max_form()");
  }
  const std::size_t s = w.rows();
  LpInstance lp;
  lp.side = s;
  lp.n = s * s;
  lp.m = 2 * s;
  lp.offset = w.max_offset().value_or(0);
  lp.bit_length = w.bit_length();
  lp.objective = w.data();
  lp.a.assign(lp.m, std::vector<std::int64_t>(lp.n, 0));
  lp.b.assign(lp.m, 1);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      lp.a[i][i * s + j] = 1;      // row i used at most once
      lp.a[s + j][i * s + j] = 1;  // column j used at most once
    }
  }
  return lp;
}

}  // namespace lsap
