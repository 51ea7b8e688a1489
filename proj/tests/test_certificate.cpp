#include <gtest/gtest.h>

#include <numeric>

#include "lsap/certificate.hpp"
#include "oracles.hpp"

namespace lsap {
namespace {

WeightMatrix from(const oracle::Grid& g) { return WeightMatrix::from_rows(g); }

OptimalityCertificate two_by_two() {
  const auto w = from({{1, 2}, {2, 4}});
  return extract_certificate(w, solve_hungarian(w));
}

TEST(Extract, TwoByTwo) {
  const auto cert = two_by_two();
  EXPECT_EQ(cert.optimum, 4);
  EXPECT_TRUE(verify_certificate_clear(cert).accepted);
}

TEST(Extract, SingleCell) {
  const auto w = from({{5}});
  const auto cert = extract_certificate(w, solve_sap_acm(w));
  EXPECT_EQ(cert.optimum, 5);
  EXPECT_EQ(cert.dual.u, std::vector<std::int64_t>{5});
  EXPECT_EQ(cert.dual.v, std::vector<std::int64_t>{0});
}

TEST(Extract, RefusesTamperedDual) {
  const auto w = from({{1, 2}, {2, 4}});
  auto r = solve_hungarian(w);
  r.dual.u[0] += 1;
  try {
    extract_certificate(w, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidCertificate);
  }
}

TEST(Verify, GivenDualAccepted) {
  OptimalityCertificate cert{make_assignment(from({{1, 2}, {2, 4}}), {{0, 1}, {1, 0}}), 4,
                             {{0, 1}, {1, 2}}, from({{1, 2}, {2, 4}})};
  EXPECT_TRUE(verify_certificate_clear(cert).accepted);
  EXPECT_EQ(tight_edge_set(cert), (std::vector<Pair>{{0, 1}, {1, 0}}));
}

TEST(Verify, OptimumOffByOneFailsDualSum) {
  auto cert = two_by_two();
  cert.optimum += 1;
  const auto v = verify_certificate_clear(cert);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.condition, 3);
}

TEST(Verify, LoweredWeightFailsFeasibilityAtCell) {
  auto cert = two_by_two();
  cert.weights.at(0, 0) = cert.dual.u[0] + cert.dual.v[0] - 1;
  const auto v = verify_certificate_clear(cert);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.condition, 4);
  ASSERT_TRUE(v.where.has_value());
  EXPECT_EQ(*v.where, (Pair{0, 0}));
}

TEST(Verify, BrokenMatchingFailsCondition2) {
  auto cert = two_by_two();
  cert.assignment.pairs = {{0, 1}, {1, 1}};
  EXPECT_EQ(verify_certificate_clear(cert).condition, 2);
  cert.assignment.pairs = {{0, 1}};
  EXPECT_EQ(verify_certificate_clear(cert).condition, 2);
  cert.assignment.pairs = {{0, 1}, {1, 7}};
  EXPECT_EQ(verify_certificate_clear(cert).condition, 2);
}

TEST(Verify, WrongAssignmentWeightFailsCondition1) {
  // A feasible dual with the right sum, but the pairs weigh something else.
  OptimalityCertificate cert{{{{0, 0}, {1, 1}}, 5}, 4, {{0, 1}, {1, 2}}, from({{1, 2}, {2, 4}})};
  const auto v = verify_certificate_clear(cert);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.condition, 1);
}

TEST(Verify, DimensionMismatchThrows) {
  auto cert = two_by_two();
  cert.dual.v.push_back(0);
  EXPECT_THROW(verify_certificate_clear(cert), Error);
}

TEST(Verify, RectangularSignConstraint) {
  const auto w = from({{1, 2, 3}, {4, 5, 6}});
  auto cert = extract_certificate(w, solve_sap_jv(w));
  // Shifting u up and v down keeps every sum but gives the unused column a
  // positive potential.
  for (auto& x : cert.dual.u) x -= 1;
  for (auto& x : cert.dual.v) x += 1;
  cert.dual.u[0] -= 1;  // restore the sum: 2 rows -2, 3 cols +3, so -1 more
  EXPECT_FALSE(verify_certificate_clear(cert).accepted);
}

TEST(TightEdges, RandomSixBySix) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = from(oracle::random_grid(6, 6, 0, 65535, seed));
    const auto cert = extract_certificate(w, solve_sap_jv(w));
    EXPECT_EQ(tight_edge_set(cert).size(), 6u);
  }
  const auto one = extract_certificate(from({{3}}), solve_auction(from({{3}})));
  EXPECT_EQ(tight_edge_set(one), (std::vector<Pair>{{0, 0}}));
}

TEST(TightEdges, NonzeroSlackThrows) {
  auto cert = two_by_two();
  cert.dual.u[0] -= 1;
  cert.dual.u[1] += 1;
  EXPECT_THROW(tight_edge_set(cert), Error);
}

TEST(Completeness, EverySolverCertifies) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const auto w = from(oracle::random_grid(n, n, -1000, 65535, 77 + seed));
    for (auto algo : {Algorithm::kHungarian, Algorithm::kSapAcm, Algorithm::kSapJv,
                      Algorithm::kAuction, Algorithm::kSimplex}) {
      EXPECT_NO_THROW(extract_certificate(w, solve(algo, w))) << to_string(algo);
    }
  }
}

// A suboptimal permutation admits no feasible dual that is tight on it.
TEST(Soundness, SuboptimalPermutationsHaveNoDual) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const auto g = oracle::random_grid(n, n, 0, 20, 500 + seed);
    const std::int64_t best = oracle::best_cost(g);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::int64_t cost = 0;
      for (std::size_t i = 0; i < n; ++i) {
        pairs.emplace_back(i, p[i]);
        cost += g[i][p[i]];
      }
      EXPECT_EQ(oracle::tight_dual_exists(g, pairs), cost == best);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(Serialization, PublicHasNoWitness) {
  const auto cert = two_by_two();
  const std::string pub = to_public_json(cert);
  EXPECT_EQ(pub,
            R"({"format":"lsap-certificate","version":1,"kind":"public","rows":2,"cols":2,)"
            R"("assignment":[[0,1],[1,0]],"optimum":4})");
  const auto pc = parse_public_certificate(pub);
  EXPECT_EQ(pc.optimum, 4);
  EXPECT_EQ(certificate_id(pc), certificate_id(cert));
  EXPECT_EQ(certificate_id(cert).size(), 64u);
}

TEST(Serialization, WitnessRoundTrip) {
  const auto cert = two_by_two();
  const std::string text = to_witness_json(cert);
  const auto back = parse_witness_certificate(text);
  EXPECT_EQ(back.weights, cert.weights);
  EXPECT_EQ(back.dual.u, cert.dual.u);
  EXPECT_EQ(back.dual.v, cert.dual.v);
  EXPECT_EQ(back.assignment.pairs, cert.assignment.pairs);
  EXPECT_EQ(to_witness_json(back), text);
  EXPECT_TRUE(verify_certificate_clear(back).accepted);
}

TEST(Serialization, RejectsWitnessAsPublicAndGarbage) {
  const auto cert = two_by_two();
  EXPECT_THROW(parse_public_certificate(to_witness_json(cert)), Error);
  EXPECT_THROW(parse_witness_certificate(to_public_json(cert)), Error);
  EXPECT_THROW(parse_public_certificate("{not json"), Error);
  EXPECT_THROW(parse_public_certificate(R"({"format":"x","version":1})"), Error);
}

TEST(Serialization, IdChangesWithOptimum) {
  auto cert = two_by_two();
  const auto id = certificate_id(cert);
  cert.optimum = 5;
  EXPECT_NE(certificate_id(cert), id);
}

}  // namespace
}  // namespace lsap
