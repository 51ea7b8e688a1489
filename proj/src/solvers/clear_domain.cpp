#include <algorithm>

#include "lsap/algorithms/domain.hpp"
#include "lsap/error.hpp"

namespace lsap {
namespace {

std::size_t first_min(std::span<const std::int64_t> xs) {
  if (xs.empty()) throw Error(ErrorCode::kInvalidArgument, "minimum of an empty set");
  std::size_t best = 0;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (xs[k] < xs[best]) best = k;
  }
  return best;
}

std::int64_t floor_div1(std::int64_t x, std::int64_t d) {
  std::int64_t q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

}  // namespace

std::vector<bool> ClearDomain::is_zero(std::span<const Value> xs) {
  std::vector<bool> out(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) out[k] = xs[k] == 0;
  count_zero_tests(out);
  return out;
}

ClearDomain::Value ClearDomain::min(std::span<const Value> xs) {
  const Value m = xs[first_min(xs)];
  count_mins(1, xs.size());
  return m;
}

std::vector<ClearDomain::Value> ClearDomain::min_each(std::span<const Value> flat,
                                                      std::size_t group) {
  if (group == 0 || flat.size() % group != 0) {
    throw Error(ErrorCode::kDimensionMismatch, "min_each: ragged groups");
  }
  std::vector<Value> out;
  out.reserve(flat.size() / group);
  for (std::size_t g = 0; g < flat.size(); g += group) {
    out.push_back(flat[g + first_min(flat.subspan(g, group))]);
  }
  count_mins(out.size(), group);
  return out;
}

std::pair<std::size_t, ClearDomain::Value> ClearDomain::argmin(std::span<const Value> xs) {
  const std::size_t k = first_min(xs);
  count_argmin(xs.size(), k);
  return {k, xs[k]};
}

std::vector<std::pair<std::size_t, ClearDomain::Value>> ClearDomain::argmin_each(
    std::span<const Value> flat, std::size_t group) {
  if (group == 0 || flat.size() % group != 0) {
    throw Error(ErrorCode::kDimensionMismatch, "argmin_each: ragged groups");
  }
  std::vector<std::pair<std::size_t, Value>> out;
  for (std::size_t g = 0; g < flat.size(); g += group) {
    const std::size_t k = first_min(flat.subspan(g, group));
    out.emplace_back(k, flat[g + k]);
  }
  for (const auto& [k, x] : out) count_argmin(group, k);
  return out;
}

std::vector<bool> ClearDomain::less(std::span<const Value> a, std::span<const Value> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "less: size mismatch");
  std::vector<bool> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] < b[k];
  count_branches(out);
  return out;
}

std::vector<ClearDomain::Value> ClearDomain::floor_div(std::span<const Value> xs,
                                                       std::int64_t d) {
  if (d <= 0) throw Error(ErrorCode::kInvalidArgument, "floor_div needs a positive divisor");
  std::vector<Value> out;
  out.reserve(xs.size());
  for (auto x : xs) out.push_back(floor_div1(x, d));
  return out;
}

}  // namespace lsap
