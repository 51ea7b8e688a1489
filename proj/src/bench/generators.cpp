#include "lsap/bench/generators.hpp"

#include <random>

#include "lsap/error.hpp"

namespace lsap::bench {
namespace {

void check(std::size_t n, int width) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (width < 1 || width > 62) throw Error(ErrorCode::kInvalidArgument, "width must be in 1..62");
}

std::vector<std::size_t> draw_preferences(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> pref(n);
  for (auto& p : pref) p = pick(rng);
  return pref;
}

}  // namespace

WeightMatrix gen_random(std::size_t n, int width, std::uint64_t seed) {
  check(n, width);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, (std::int64_t{1} << width) - 1);
  WeightMatrix w(n, n, Sense::kMinimize, width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = dist(rng);
  }
  return w;
}

std::int64_t structured_step(std::size_t n, int width) {
  check(n, width);
  // Half of the range is left for the noise.
  const std::int64_t top = (std::int64_t{1} << width) - 1;
  return std::max<std::int64_t>(1, top / (2 * static_cast<std::int64_t>(n)));
}

std::vector<std::size_t> structured_preferences(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  std::mt19937_64 rng(seed);
  return draw_preferences(rng, n);
}

WeightMatrix gen_structured(std::size_t n, std::uint64_t seed, int width, std::int64_t noise) {
  check(n, width);
  std::mt19937_64 rng(seed);
  const std::vector<std::size_t> pref = draw_preferences(rng, n);
  const std::int64_t step = structured_step(n, width);
  if (noise < 0) noise = step / 2;
  const std::int64_t top = (std::int64_t{1} << width) - 1;
  std::uniform_int_distribution<std::int64_t> jitter(0, noise);
  WeightMatrix w(n, n, Sense::kMinimize, width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto dist = static_cast<std::int64_t>(j > pref[i] ? j - pref[i] : pref[i] - j);
      w.at(i, j) = std::min(top, step * dist + (noise > 0 ? jitter(rng) : 0));
    }
  }
  return w;
}

}  // namespace lsap::bench
