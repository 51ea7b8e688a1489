#include <gtest/gtest.h>

#include <sstream>

#include "lsap/core.hpp"
#include "lsap/leakage.hpp"
#include "oracles.hpp"

namespace lsap {
namespace {

WeightMatrix from(const oracle::Grid& g, Sense s = Sense::kMinimize) {
  return WeightMatrix::from_rows(g, s);
}

TEST(WeightMatrix, RejectsEmptyAndRagged) {
  EXPECT_THROW(WeightMatrix(0, 3), Error);
  EXPECT_THROW(WeightMatrix::from_rows({{1, 2}, {3}}), Error);
}

TEST(WeightMatrix, BitLengthBound) {
  auto w = from({{65535, -65535}});
  EXPECT_NO_THROW(w.validate());
  w.at(0, 0) = 65536;
  try {
    w.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
}

TEST(Balance, PadsShortSideWithZeros) {
  const auto b = balance(from({{1, 2, 3}, {4, 5, 6}}));
  ASSERT_EQ(b.matrix.rows(), 3u);
  ASSERT_EQ(b.matrix.cols(), 3u);
  EXPECT_EQ(b.matrix(0, 2), 3);
  EXPECT_EQ(b.matrix(1, 0), 4);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(b.matrix(2, j), 0);
  EXPECT_TRUE(b.padded());
}

TEST(Balance, SquareIsIdentityAndIdempotent) {
  const auto w = from(oracle::random_grid(4, 4, -50, 50, 3));
  const auto b = balance(w);
  EXPECT_EQ(b.matrix, w);
  EXPECT_FALSE(b.padded());
  EXPECT_EQ(balance(b.matrix).matrix, b.matrix);
}

TEST(Balance, StripDropsPaddedPairs) {
  const auto w = from({{1, 2, 3}, {4, 5, 6}});
  const auto b = balance(w);
  const auto full = make_assignment(b.matrix, {{0, 0}, {1, 1}, {2, 2}});
  const auto a = strip_padding(b, full, w);
  ASSERT_EQ(a.pairs.size(), 2u);
  EXPECT_EQ(a.cost, 6);
}

TEST(MaxForm, SubtractsFromOffset) {
  const auto m = to_max_form(from({{1, 2}, {3, 4}}), 4);
  EXPECT_EQ(m.sense(), Sense::kMaximize);
  EXPECT_EQ(m, from({{3, 2}, {1, 0}}, Sense::kMaximize));
  const auto one = to_max_form(from({{7}}), 7);
  EXPECT_EQ(one(0, 0), 0);
  EXPECT_EQ(one.max_offset(), 7);
  EXPECT_THROW(to_max_form(from({{1, 9}}), 4), Error);
  EXPECT_THROW(to_max_form(from({{1}}, Sense::kMaximize)), Error);
}

// cost(P, M - W) = s*M - cost(P, W) for every permutation P.
TEST(MaxForm, PermutationCostLaw) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = from(oracle::random_grid(5, 5, -100, 100, seed));
    const auto m = to_max_form(w);
    const std::int64_t big = w.max_entry();
    std::vector<std::size_t> p{0, 1, 2, 3, 4};
    do {
      ASSERT_EQ(permutation_cost(m, p), 5 * big - permutation_cost(w, p));
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

// Argmin set of W equals argmax set of M - W.
TEST(MaxForm, SameOptimalPermutations) {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const auto w = from(oracle::random_grid(5, 5, 0, 6, seed));
    const auto m = to_max_form(w);
    std::vector<std::size_t> p{0, 1, 2, 3, 4};
    std::int64_t best_min = INT64_MAX, best_max = INT64_MIN;
    do {
      best_min = std::min(best_min, permutation_cost(w, p));
      best_max = std::max(best_max, permutation_cost(m, p));
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(p.begin(), p.end());
    do {
      ASSERT_EQ(permutation_cost(w, p) == best_min, permutation_cost(m, p) == best_max);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(ToLp, DimensionsFollowSide) {
  for (std::size_t s : {1u, 2u, 5u, 10u}) {
    const auto lp = to_lp(to_max_form(from(oracle::random_grid(s, s, 0, 9, s))));
    EXPECT_EQ(lp.n, s * s);
    EXPECT_EQ(lp.m, 2 * s);
    EXPECT_EQ(lp.a.size(), 2 * s);
    EXPECT_EQ(lp.a.front().size(), s * s);
  }
  const auto lp = to_lp(to_max_form(from({{1, 2}, {2, 4}})));
  EXPECT_EQ(lp.b, (std::vector<std::int64_t>{1, 1, 1, 1}));
  EXPECT_EQ(lp.objective, (std::vector<std::int64_t>{3, 2, 2, 0}));
  EXPECT_EQ(lp.offset, 4);
  // Each variable appears in exactly one row and one column constraint.
  for (std::size_t v = 0; v < lp.n; ++v) {
    int hits = 0;
    for (std::size_t r = 0; r < lp.m; ++r) hits += static_cast<int>(lp.a[r][v]);
    EXPECT_EQ(hits, 2);
  }
}

TEST(ToLp, RejectsWrongShapeOrSense) {
  EXPECT_THROW(to_lp(from({{1, 2, 3}}, Sense::kMaximize)), Error);
  EXPECT_THROW(to_lp(from({{1}})), Error);
}

TEST(MatrixIo, TextRoundTrip) {
  const auto w = from(oracle::random_grid(3, 4, -65535, 65535, 9), Sense::kMaximize);
  const std::string text = format_matrix(w);
  std::istringstream in(text);
  const auto back = read_matrix(in);
  EXPECT_EQ(back, w);
  EXPECT_EQ(format_matrix(back), text);
}

TEST(MatrixIo, CsvRoundTrip) {
  const auto w = from({{1, -2}, {3, 4}, {5, 6}});
  std::ostringstream out;
  write_matrix_csv(out, w);
  EXPECT_EQ(out.str(), "3,2,minimize\n1,-2\n3,4\n5,6\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_matrix(in), w);
}

TEST(MatrixIo, Malformed) {
  for (const char* bad : {"", "2 2\n1 2 3 4\n", "2 2 minimize\n1 2 3\n", "2 2 min\n1 x 3 4\n",
                          "1 1 sideways\n3\n", "0 2 min\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_matrix(in), Error) << bad;
  }
}

TEST(MatrixIo, WidensBitLengthForLargeEntries) {
  std::istringstream in("1 2 min\n70000 1\n");
  const auto w = read_matrix(in);
  EXPECT_EQ(w.bit_length(), 17);
}

TEST(Assignment, CostAndOrder) {
  const auto w = from({{1, 2}, {2, 4}});
  const auto a = make_assignment(w, {{1, 0}, {0, 1}});
  EXPECT_EQ(a.cost, 4);
  EXPECT_EQ(a.pairs.front().row, 0u);
  EXPECT_THROW(make_assignment(w, {{2, 0}}), Error);
}

TEST(Leakage, TextExportAndCounts) {
  LeakageLog log;
  log.append(LeakKind::kZeroTest, 3, 1);
  log.append(LeakKind::kCoverBit, 0, 0);
  EXPECT_EQ(log.count(LeakKind::kZeroTest), 1u);
  EXPECT_EQ(log.to_text(), "zero-test 3 1\ncover 0 0\n");
  log.set_enabled(false);
  log.append(LeakKind::kBranchTaken, 0, 1);
  EXPECT_EQ(log.size(), 2u);
}

}  // namespace
}  // namespace lsap
