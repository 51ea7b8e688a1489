#include <gtest/gtest.h>

#include <set>

#include "lsap/algorithms/auction.hpp"
#include "lsap/solvers.hpp"
#include "oracles.hpp"

namespace lsap {
namespace {

constexpr Algorithm kAll[] = {Algorithm::kHungarian, Algorithm::kSapAcm, Algorithm::kSapJv,
                              Algorithm::kAuction, Algorithm::kSimplex};

WeightMatrix from(const oracle::Grid& g, Sense s = Sense::kMinimize) {
  return WeightMatrix::from_rows(g, s);
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const Assignment& a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : a.pairs) out.emplace_back(p.row, p.col);
  return out;
}

void expect_certified(const oracle::Grid& g, const SolverResult& r, const char* what) {
  EXPECT_TRUE(oracle::dual_certifies(g, pairs_of(r.assignment), r.dual.u, r.dual.v)) << what;
  std::set<std::size_t> rows, cols;
  for (const auto& p : r.assignment.pairs) {
    rows.insert(p.row);
    cols.insert(p.col);
  }
  EXPECT_EQ(rows.size(), r.assignment.pairs.size()) << what;
  EXPECT_EQ(cols.size(), r.assignment.pairs.size()) << what;
  EXPECT_EQ(r.assignment.pairs.size(), std::min(g.size(), g.front().size())) << what;
}

TEST(Hungarian, SingleCell) {
  const auto r = solve_hungarian(from({{1}}));
  ASSERT_EQ(r.assignment.pairs.size(), 1u);
  EXPECT_EQ(r.assignment.cost, 1);
  EXPECT_EQ(r.dual.u, std::vector<std::int64_t>{1});
  EXPECT_EQ(r.dual.v, std::vector<std::int64_t>{0});
}

TEST(AllSolvers, TwoByTwoExample) {
  const oracle::Grid g{{1, 2}, {2, 4}};
  for (auto algo : kAll) {
    const auto r = solve(algo, from(g));
    EXPECT_EQ(r.assignment.cost, 4) << to_string(algo);
    EXPECT_EQ(r.assignment.pairs, (std::vector<Pair>{{0, 1}, {1, 0}})) << to_string(algo);
    expect_certified(g, r, to_string(algo));
  }
}

TEST(SapAcm, ZeroDiagonal) {
  const auto r = solve_sap_acm(from({{0, 9}, {9, 0}}));
  EXPECT_EQ(r.assignment.cost, 0);
  EXPECT_EQ(r.assignment.pairs, (std::vector<Pair>{{0, 0}, {1, 1}}));
}

TEST(SapJv, Rectangular) {
  const oracle::Grid g{{1, 2, 3}, {4, 5, 6}};
  const auto r = solve_sap_jv(from(g));
  EXPECT_EQ(r.assignment.cost, 6);
  expect_certified(g, r, "jv");
  EXPECT_EQ(solve_sap_jv(from({{5}})).assignment.cost, 5);
}

TEST(Auction, InitialEpsilonIsLargestMagnitude) {
  EXPECT_EQ(auction_initial_epsilon(from({{3, -1}, {2, 0}})), 3);
  EXPECT_EQ(auction_initial_epsilon(from({{1, -7}, {2, 0}})), 7);
}

TEST(Auction, RandomSixBySix) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = oracle::random_grid(6, 6, 0, 65535, 7000 + seed);
    const auto r = solve_auction(from(g), {4, 1});
    ASSERT_EQ(r.assignment.cost, oracle::best_cost(g)) << seed;
    expect_certified(g, r, "auction");
  }
}

TEST(Auction, ScalingByNPlusOneKeepsOptimalSet) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::random_grid(5, 5, 0, 9, 300 + seed);
    auto scaled = g;
    for (auto& row : scaled) for (auto& x : row) x *= 6;
    const auto a = solve_auction(from(g));
    const auto b = solve_auction(from(scaled));
    EXPECT_EQ(b.assignment.cost, 6 * a.assignment.cost);
    EXPECT_EQ(permutation_cost(from(scaled), [&] {
                std::vector<std::size_t> p;
                for (const auto& q : a.assignment.pairs) p.push_back(q.col);
                return p;
              }()),
              b.assignment.cost);
  }
}

TEST(Auction, AlphaVariantsAndBadAlpha) {
  const auto g = oracle::random_grid(6, 6, 0, 1000, 5);
  for (Ratio a : {Ratio{2, 1}, Ratio{3, 2}, Ratio{10, 1}}) {
    EXPECT_EQ(solve_auction(from(g), a).assignment.cost, oracle::best_cost(g));
  }
  EXPECT_THROW(solve_auction(from(g), {1, 1}), Error);
}

TEST(Auction, BudgetAndStallGuards) {
  WeightMatrix big(60, 60, Sense::kMinimize, 40);
  big.at(0, 0) = (std::int64_t{1} << 39);
  try {
    solve_auction(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
  ClearDomain d;
  AuctionParams p;
  p.eps0 = 1;
  p.bid_cap = 2;
  std::vector<std::int64_t> c{0, 0, 0, 0, 0, 0, 0, 0, 0};
  try {
    auction(d, c, 3, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonTermination);
    EXPECT_NE(std::string(e.what()).find("epsilon=1"), std::string::npos);
  }
}

TEST(Simplex, TwoByTwoMaxForm) {
  const auto lp = to_lp(to_max_form(from({{1, 2}, {2, 4}}), 4));
  const auto r = solve_simplex(lp);
  EXPECT_EQ(r.assignment.pairs, (std::vector<Pair>{{0, 1}, {1, 0}}));
  EXPECT_EQ(r.assignment.cost, 4);
  // Maximisation objective of the same pairs.
  EXPECT_EQ(2 * 4 - r.assignment.cost, lp.objective[1] + lp.objective[2]);
  expect_certified({{1, 2}, {2, 4}}, r, "simplex");
}

TEST(Simplex, SingleCellNeedsAtMostOnePivot) {
  const auto r = solve_simplex(to_lp(to_max_form(from({{7}}))));
  EXPECT_LE(r.stats.iterations, 1);
  EXPECT_EQ(r.assignment.cost, 7);
  EXPECT_EQ(r.dual.u[0] + r.dual.v[0], 7);
}

TEST(Simplex, LpOptimumMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::random_grid(4, 4, 0, 65535, 900 + seed);
    const auto r = solve_simplex(to_lp(to_max_form(from(g))));
    ASSERT_EQ(r.assignment.cost, oracle::best_cost(g));
    expect_certified(g, r, "simplex");
  }
}

TEST(Simplex, IterationCountAtSideTen) {
  const auto r = solve_simplex(to_lp(to_max_form(from(oracle::random_grid(10, 10, 0, 65535, 1)))));
  EXPECT_GT(r.stats.iterations, 0);
  RecordProperty("iterations", static_cast<int>(r.stats.iterations));
}

TEST(Simplex, RejectsNegatedObjective) {
  auto lp = to_lp(to_max_form(from({{1, 2}, {2, 4}})));
  lp.objective[0] = -1;
  EXPECT_THROW(solve_simplex(lp), Error);
}

TEST(BruteForce, TiesAndLimits) {
  const auto a = brute_force(from({{0, 0}, {0, 0}}));
  EXPECT_EQ(a.pairs, (std::vector<Pair>{{0, 0}, {1, 1}}));
  EXPECT_EQ(brute_force(from({{1, 2}, {2, 4}})).cost, 4);
  EXPECT_THROW(brute_force(WeightMatrix(11, 11)), Error);
  EXPECT_EQ(brute_force(from({{1, 2}, {2, 4}}, Sense::kMaximize)).cost, 5);
}

TEST(AllSolvers, EightByEightAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = oracle::random_grid(8, 8, 0, 65535, 10000 + seed);
    const std::int64_t best = oracle::best_cost(g);
    ASSERT_EQ(solve_hungarian(from(g)).assignment.cost, best) << seed;
    ASSERT_EQ(brute_force(from(g)).cost, best) << seed;
  }
}

TEST(AllSolvers, CrossSolverAgreementWithCertificates) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto g = seed % 3 == 0 ? oracle::random_grid(n, n, 0, 5, seed)
                                 : oracle::random_grid(n, n, -300, 65535, seed);
    const std::int64_t best = oracle::best_cost(g);
    for (auto algo : kAll) {
      const auto r = solve(algo, from(g));
      ASSERT_EQ(r.assignment.cost, best) << to_string(algo) << " seed " << seed;
      expect_certified(g, r, to_string(algo));
    }
  }
}

TEST(AllSolvers, BandedInstances) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto g = oracle::banded_grid(n, seed);
    for (auto algo : kAll) {
      ASSERT_EQ(solve(algo, from(g)).assignment.cost, oracle::best_cost(g)) << to_string(algo);
    }
  }
}

// Rectangular: the dual of an unbalanced instance carries v <= 0 on the long
// side (u <= 0 when rows outnumber columns).
TEST(AllSolvers, RectangularMatchesInjectionOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const bool wide = seed % 2 == 0;
    const auto g = wide ? oracle::random_grid(2, 4, -20, 60, seed)
                        : oracle::random_grid(4, 2, -20, 60, seed);
    const std::int64_t best = oracle::best_cost(g);
    for (auto algo : kAll) {
      const auto r = solve(algo, from(g));
      ASSERT_EQ(r.assignment.cost, best) << to_string(algo);
      expect_certified(g, r, to_string(algo));
      for (auto x : wide ? r.dual.v : r.dual.u) EXPECT_LE(x, 0) << to_string(algo);
    }
    // Zero-padded square solve restricted to original rows.
    const auto b = balance(from(g));
    const auto sq = solve_hungarian(b.matrix);
    EXPECT_EQ(strip_padding(b, sq.assignment, from(g)).cost, best);
  }
}

TEST(AllSolvers, MaximizeSense) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const auto g = oracle::random_grid(n, n, -100, 100, 50 + seed);
    const std::int64_t best = oracle::best_cost(g, true);
    for (auto algo : kAll) {
      const auto r = solve(algo, from(g, Sense::kMaximize));
      ASSERT_EQ(r.assignment.cost, best) << to_string(algo);
      // Dual of a maximisation: u_i + v_j >= w_ij, tight on the matching.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EXPECT_GE(r.dual.u[i] + r.dual.v[j], g[i][j]);
      EXPECT_EQ(r.dual.objective(), best);
    }
  }
}

TEST(Hungarian, RowReductionExposesRowMinima) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto g = oracle::random_grid(n, n, 0, 65535, 4000 + seed);
    bool called = false;
    solve_hungarian(from(g), [&](std::span<const std::int64_t> u,
                                 std::span<const std::int64_t> reduced) {
      called = true;
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(u[i], *std::min_element(g[i].begin(), g[i].end()));
        bool has_zero = false;
        for (std::size_t j = 0; j < n; ++j) has_zero |= reduced[i * n + j] == 0;
        EXPECT_TRUE(has_zero);
      }
    });
    EXPECT_TRUE(called);
  }
}

TEST(Stats, OperationCountsGrowWithSize) {
  for (auto algo : {Algorithm::kHungarian, Algorithm::kSapAcm, Algorithm::kSapJv,
                    Algorithm::kAuction}) {
    double prev_z = -1, prev_m = -1;
    for (std::size_t n : {4u, 8u, 16u, 32u}) {
      double z = 0, m = 0;
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = solve(algo, from(oracle::random_grid(n, n, 0, 65535, seed)));
        z += static_cast<double>(r.stats.zero_tests);
        m += static_cast<double>(r.stats.min_finds);
      }
      EXPECT_GE(z, prev_z) << to_string(algo) << " n=" << n;
      EXPECT_GE(m, prev_m) << to_string(algo) << " n=" << n;
      prev_z = z;
      prev_m = m;
    }
  }
}

TEST(Algorithm, NamesRoundTrip) {
  for (auto algo : kAll) EXPECT_EQ(parse_algorithm(to_string(algo)), algo);
  EXPECT_THROW(parse_algorithm("greedy"), Error);
}

}  // namespace
}  // namespace lsap
