// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lsap/bench/generators.hpp"
#include "lsap/certificate.hpp"
#include "lsap/mpc/oblivious.hpp"
#include "lsap/mpc/shuffle.hpp"
#include "lsap/mpc/simplex_cost.hpp"
#include "lsap/solvers.hpp"
#include "lsap/zk/serialize.hpp"
#include "oracles.hpp"
#include "stats.hpp"

namespace {

using namespace lsap;
using Clock = std::chrono::steady_clock;

constexpr Algorithm kSolvers[] = {Algorithm::kHungarian, Algorithm::kSapAcm, Algorithm::kSapJv,
                                  Algorithm::kAuction, Algorithm::kSimplex};
constexpr Algorithm kOblivious[] = {Algorithm::kHungarian, Algorithm::kSapAcm, Algorithm::kSapJv,
                                    Algorithm::kAuction};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// CPU time of this thread; unlike wall-clock time it ignores time spent
// descheduled on a shared machine.
double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

oracle::Grid grid_of(const WeightMatrix& w) {
  oracle::Grid g(w.rows(), std::vector<std::int64_t>(w.cols()));
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) g[i][j] = w(i, j);
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const Assignment& a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : a.pairs) out.emplace_back(p.row, p.col);
  return out;
}

mpc::EngineConfig seeded(std::uint64_t seed, bool views = false) {
  mpc::EngineConfig c;
  c.seed = seed;
  c.record_views = views;
  return c;
}

std::size_t bucket16(mpc::Fp x) { return static_cast<std::size_t>(x.value() >> 123); }

Outcome ac1_oracle_equivalence() {
  const auto t0 = Clock::now();
  std::int64_t solves = 0, mismatches = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      for (const WeightMatrix& w : {bench::gen_random(n, 16, seed), bench::gen_structured(n, seed)}) {
        const std::int64_t best = oracle::best_cost(grid_of(w));
        for (Algorithm a : kSolvers) {
          ++solves;
          if (solve(a, w).assignment.cost != best) ++mismatches;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 120.0,
          std::to_string(mismatches) + " mismatches over " + std::to_string(solves) +
              " solves (n=2..8, 200 random + 200 structured each) in " + fmt("%.1f", secs) +
              " s, limit 120 s"};
}

Outcome ac2_certificates() {
  std::int64_t certified = 0, uncertified = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      for (const WeightMatrix& w : {bench::gen_random(n, 16, seed), bench::gen_structured(n, seed)}) {
        for (Algorithm a : kSolvers) {
          try {
            const auto cert = extract_certificate(w, solve(a, w));
            if (verify_certificate_clear(cert).accepted) {
              ++certified;
              continue;
            }
          } catch (const Error&) {
          }
          ++uncertified;
        }
      }
    }
  }

  // Every strictly suboptimal permutation: no dual makes it tight, and the
  // clear check rejects it when paired with the optimal dual.
  std::int64_t suboptimal = 0, no_dual = 0, rejected = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      // A narrow range makes ties, so optimal permutations are not unique.
      const oracle::Grid g = oracle::random_grid(n, n, 0, 12, 1000 * n + seed);
      const WeightMatrix w = WeightMatrix::from_rows(g);
      const SolverResult best = solve(Algorithm::kSapJv, w);
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<Pair> pairs;
        for (std::size_t i = 0; i < n; ++i) pairs.push_back({i, perm[i]});
        const Assignment a = make_assignment(w, pairs);
        if (a.cost == best.assignment.cost) continue;
        ++suboptimal;
        if (!oracle::tight_dual_exists(g, pairs_of(a))) ++no_dual;
        const OptimalityCertificate forged{a, a.cost, best.dual, w};
        if (!verify_certificate_clear(forged).accepted) ++rejected;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return {uncertified == 0 && no_dual == suboptimal && rejected == suboptimal,
          std::to_string(certified) + "/" + std::to_string(certified + uncertified) +
              " solver results certified; " + std::to_string(no_dual) + "/" +
              std::to_string(suboptimal) + " suboptimal permutations admit no tight dual, " +
              std::to_string(rejected) + "/" + std::to_string(suboptimal) + " rejected by the checker"};
}

Outcome ac3_dual_update() {
  int ok = 0;
  const int total = 500;
  for (int k = 0; k < total; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k) % 11;
    const WeightMatrix w = bench::gen_random(n, 16, 5000 + k);
    std::vector<std::int64_t> minima(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = w.row(i);
      minima[i] = *std::min_element(r.begin(), r.end());
    }
    bool hook_ok = false;
    const SolverResult r = solve_hungarian(w, [&](std::span<const std::int64_t> u,
                                                  std::span<const std::int64_t> reduced) {
      hook_ok = std::equal(u.begin(), u.end(), minima.begin(), minima.end());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (reduced[i * n + j] != w(i, j) - minima[i]) hook_ok = false;
    });
    bool tight = true;
    for (const auto& p : r.assignment.pairs) tight &= r.dual.u[p.row] + r.dual.v[p.col] == w(p.row, p.col);
    const bool strong = r.dual.objective() == r.assignment.cost;
    if (hook_ok && tight && strong) ++ok;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " instances: u equals the row minima after reduction, "
                           "sum(u)+sum(v) equals the cost, assignment pairs tight"};
}

Outcome ac4_mpc_transfer() {
  const auto t0 = Clock::now();
  std::int64_t runs = 0, mismatches = 0;
  std::vector<std::vector<std::int64_t>> counts(std::size(kOblivious), std::vector<std::int64_t>(16, 0));
  std::vector<std::int64_t> input_counts(16, 0);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const WeightMatrix w = bench::gen_random(n, 16, 70000 + 100 * n + seed);
      const std::int64_t best = brute_force(w).cost;
      // Distinct engine seeds per cell, so no mask stream is reused across sizes.
      const std::uint64_t engine_seed = 1000 * n + seed;
      for (std::size_t k = 0; k < std::size(kOblivious); ++k) {
        const bool views = seed <= 10;
        const auto run = mpc::run_oblivious(kOblivious[k], w, {}, false, seeded(engine_seed, views));
        ++runs;
        if (run.result.assignment.cost != best || solve(kOblivious[k], w).assignment.cost != best) {
          ++mismatches;
        }
        for (const auto& x : run.party1_view) ++counts[k][bucket16(x)];
      }
      // Party 1's share of every weight, across seeds.
      mpc::Engine e(seeded(engine_seed));
      for (const auto& s : e.share(w.data())) ++input_counts[bucket16(s.s[1])];
    }
  }
  double min_p = oracle::chi2_uniform_pvalue(input_counts);
  std::int64_t samples = 0;
  for (const auto& c : counts) {
    min_p = std::min(min_p, oracle::chi2_uniform_pvalue(c));
    samples += std::accumulate(c.begin(), c.end(), std::int64_t{0});
  }
  return {mismatches == 0 && min_p > 0.01,
          std::to_string(mismatches) + " cost mismatches over " + std::to_string(runs) +
              " secure runs (4 algorithms, n=2..8, 100 seeds); smallest chi2 p-value " +
              fmt("%.3f", min_p) + " over party-1 view streams (" + std::to_string(samples) +
              " field elements) and input shares, threshold 0.01; " + fmt("%.0f", seconds_since(t0)) + " s"};
}

Outcome ac5_latency_law() {
  bool exact = true;
  std::int64_t checks = 0;
  std::ostringstream table;
  for (std::size_t n : {10u, 20u}) {
    const WeightMatrix w = bench::gen_random(n, 16, 90 + n);
    for (Algorithm a : kOblivious) {
      mpc::CostModel m0;
      const auto base = mpc::run_oblivious(a, w, m0, false, seeded(3));
      for (double ms : {0.0, 5.0, 10.0, 15.0, 20.0}) {
        mpc::CostModel m = m0;
        m.latency_ms = ms;
        const auto r = mpc::run_oblivious(a, w, m, false, seeded(3));
        ++checks;
        exact &= r.counters == base.counters &&
                 r.simulated_time_ns - base.simulated_time_ns ==
                     base.counters.rounds * static_cast<std::int64_t>(ms) * 1000000;
        if (a == Algorithm::kSapAcm && (ms == 0.0 || ms == 20.0)) {
          table << " n=" << n << "@" << ms << "ms:" << fmt("%.2f", r.simulated_seconds()) << "s";
        }
      }
    }
  }
  double r10 = 0, r50 = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    r10 += static_cast<double>(mpc::run_oblivious(Algorithm::kSapAcm, bench::gen_random(10, 16, seed)).counters.rounds);
    r50 += static_cast<double>(mpc::run_oblivious(Algorithm::kSapAcm, bench::gen_random(50, 16, seed)).counters.rounds);
  }
  const double ratio = r50 / r10;
  return {exact && ratio > 5.0, std::to_string(checks) + " latency cells exact: " + (exact ? "yes" : "no") +
                                    "; sap_acm rounds n=50/n=10 = " + fmt("%.2f", ratio) +
                                    " (need > 5);" + table.str()};
}

Outcome ac6_shuffle() {
  int round_trips = 0;
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::int64_t> dist(-(1 << 20), 1 << 20);
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    mpc::Engine e(seeded(seed));
    std::vector<std::int64_t> xs(100);
    for (auto& x : xs) x = dist(rng);
    const auto s = mpc::shuffle2d(e, e.share(xs), 10);
    if (e.open(mpc::unshuffle2d(e, s.matrix, s.handle)) == xs) ++round_trips;
  }

  int invariant = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const WeightMatrix w = bench::gen_random(6, 16, 600 + seed);
    const std::int64_t best = brute_force(w).cost;
    bool all = true;
    for (Algorithm a : kOblivious) {
      all &= mpc::run_oblivious(a, w, {}, true, seeded(seed)).result.assignment.cost == best &&
             mpc::run_oblivious(a, w, {}, false, seeded(seed)).result.assignment.cost == best;
    }
    if (all) ++invariant;
  }

  // Every row's minimum is in column 0, so without the shuffle the first
  // opened argmin is always 0.
  const auto w = WeightMatrix::from_rows({{1, 50, 60, 70}, {2, 40, 80, 90}, {3, 45, 65, 85}, {4, 55, 75, 95}});
  std::vector<std::int64_t> counts(4, 0);
  for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
    const auto r = mpc::run_oblivious(Algorithm::kSapAcm, w, {}, true, seeded(seed));
    for (const auto& ev : r.leakage.events()) {
      if (ev.kind == LeakKind::kArgminOpened) {
        ++counts[static_cast<std::size_t>(ev.value)];
        break;
      }
    }
  }
  const double p = oracle::chi2_uniform_pvalue(counts);
  return {round_trips == 1000 && invariant == 100 && p > 0.01,
          std::to_string(round_trips) + "/1000 unshuffle(shuffle(M)) = M at 10x10; " +
              std::to_string(invariant) + "/100 6x6 costs unchanged by the countermeasure; first argmin counts " +
              std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" + std::to_string(counts[2]) +
              "/" + std::to_string(counts[3]) + " chi2 p=" + fmt("%.3f", p)};
}

Outcome ac7_proof_size() {
  const std::pair<std::size_t, std::size_t> table[] = {{4, 20}, {5, 22}, {8, 24}, {11, 26}, {16, 28}};
  bool ok = true;
  std::ostringstream detail;
  for (auto [n, groups] : table) {
    const WeightMatrix w = bench::gen_random(n, 12, 700 + n);
    const auto cert = extract_certificate(w, solve(Algorithm::kSapJv, w));
    const zk::ProofBundle b = zk::prove_bundle(cert, 16);
    const std::size_t got = b.proof.range.group_elements();
    const bool verified = zk::verify_bundle(b).accepted;
    ok &= got == groups && zk::RangeProof::kScalars == 5 && b.commitments.size() == n * n + 2 * n &&
          zk::proof_size(n, 16).group_elements == groups && verified;
    detail << " n=" << n << ":" << got << "/" << groups << "g," << zk::RangeProof::kScalars << "s,"
           << b.commitments.size() << "c" << (verified ? "" : ",unverified");
  }
  return {ok, "emitted/expected group elements, scalars, commitments (n^2+2n):" + detail.str()};
}

Outcome ac8_soundness() {
  const WeightMatrix w = bench::gen_random(3, 8, 8);
  const auto cert = extract_certificate(w, solve(Algorithm::kSapJv, w));
  const zk::GroupContext ctx = zk::setup(zk::kDefaultLabel, zk::required_capacity(3, 3, 16));
  const zk::Blinds blinds = zk::Blinds::random(3, 3);
  const zk::CommitmentSet published = zk::commit_instance(ctx, w, cert.dual, blinds);
  const zk::PublicStatement st = zk::statement_of(cert);
  const bool honest = zk::verify_optimality(ctx, published, st, zk::prove_optimality(ctx, cert, blinds)).accepted;
  int rejected = 0;
  for (std::size_t k = 0; k < 15; ++k) {
    OptimalityCertificate m = cert;
    if (k < 9) {
      m.weights.at(k / 3, k % 3) += 1;
    } else if (k < 12) {
      m.dual.u[k - 9] += 1;
    } else {
      m.dual.v[k - 12] += 1;
    }
    const auto p = zk::prove_optimality(ctx, m, blinds, 16, zk::ProveMode::kUnchecked);
    if (!zk::verify_optimality(ctx, published, st, p).accepted) ++rejected;
  }
  return {honest && rejected == 15, std::to_string(rejected) + "/15 single-value mutations rejected; honest proof " +
                                        (honest ? "accepted" : "rejected")};
}

Outcome ac9_prove_time() {
  const int width = 16;
  const std::size_t batches[] = {16, 32, 64};
  const zk::GroupContext ctx = zk::setup("acceptance-timing", 64 * width);
  std::mt19937_64 rng(9);
  auto time_one = [&](std::size_t batch) {
    std::vector<std::uint64_t> values(batch);
    std::vector<zk::Scalar> blinds(batch);
    for (std::size_t k = 0; k < batch; ++k) {
      values[k] = rng() & 0xffff;
      blinds[k] = zk::Scalar::random();
    }
    zk::Transcript t("acceptance-timing");
    const double t0 = thread_cpu_seconds();
    const zk::RangeProof p = zk::prove_range(ctx, t, values, blinds, width);
    (void)p;
    return thread_cpu_seconds() - t0;
  };
  // Sizes are interleaved so that background load hits all of them alike;
  // the first pass is a warm-up.
  std::vector<double> times[3];
  for (int rep = 0; rep < 8; ++rep) {
    for (int b = 0; b < 3; ++b) {
      const double t = time_one(batches[b]);
      if (rep > 0) times[b].push_back(t);
    }
  }
  double medians[3];
  for (int b = 0; b < 3; ++b) {
    std::sort(times[b].begin(), times[b].end());
    medians[b] = times[b][times[b].size() / 2];
  }
  const double r1 = medians[1] / medians[0], r2 = medians[2] / medians[1];
  const bool ok = r1 >= 1.6 && r1 <= 2.6 && r2 >= 1.6 && r2 <= 2.6;
  return {ok, "median prove CPU time batch 16/32/64 at width 16 (7 runs each): " + fmt("%.3f", medians[0]) +
                  "/" + fmt("%.3f", medians[1]) + "/" + fmt("%.3f", medians[2]) + " s, ratios " +
                  fmt("%.2f", r1) + " and " + fmt("%.2f", r2) + " (need [1.6, 2.6])"};
}

Outcome ac10_ordering() {
  bool ordered = true;
  double ratio_rounds = 0, ratio_ops = 0;
  std::ostringstream detail;
  for (std::size_t n : {10u, 20u, 30u}) {
    double rounds[3] = {0, 0, 0}, ops[3] = {0, 0, 0};
    const int instances = 50;
    for (int k = 0; k < instances; ++k) {
      const WeightMatrix w = bench::gen_random(n, 16, 10000 + 100 * n + k);
      const mpc::Counters c[3] = {mpc::run_oblivious(Algorithm::kSapAcm, w).counters,
                                  mpc::run_oblivious(Algorithm::kHungarian, w).counters,
                                  mpc::simplex_secure_cost(w).counters};
      for (int a = 0; a < 3; ++a) {
        rounds[a] += static_cast<double>(c[a].rounds) / instances;
        ops[a] += static_cast<double>(c[a].secure_ops()) / instances;
      }
    }
    ordered &= rounds[0] < rounds[1] && rounds[1] < rounds[2] && ops[0] < ops[1] && ops[1] < ops[2];
    detail << " n=" << n << " rounds " << fmt("%.0f", rounds[0]) << "/" << fmt("%.0f", rounds[1]) << "/"
           << fmt("%.0f", rounds[2]) << " ops " << fmt("%.0f", ops[0]) << "/" << fmt("%.0f", ops[1]) << "/"
           << fmt("%.0f", ops[2]) << ";";
    if (n == 30) {
      ratio_rounds = rounds[2] / rounds[0];
      ratio_ops = ops[2] / ops[0];
    }
  }
  const bool ratio_ok = ratio_rounds >= 10 && ratio_ops >= 10;
  return {ordered && ratio_ok,
          std::string("sap_acm/hungarian/simplex means over 50 instances:") + detail.str() +
              " strict order " + (ordered ? "holds" : "violated") + "; simplex/sap_acm at n=30 rounds " +
              fmt("%.0f", ratio_rounds) + "x ops " + fmt("%.0f", ratio_ops) + "x (need >= 10)"};
}

}  // namespace

// Optional arguments pick criteria by key, e.g. "acceptance AC4 AC9".
int main(int argc, char** argv) {
  const std::vector<std::string> only(argv + 1, argv + argc);
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 oracle equivalence", ac1_oracle_equivalence},
      {"AC2 certificate completeness and soundness", ac2_certificates},
      {"AC3 dual update fidelity", ac3_dual_update},
      {"AC4 secure correctness transfer", ac4_mpc_transfer},
      {"AC5 latency law", ac5_latency_law},
      {"AC6 shuffle countermeasure", ac6_shuffle},
      {"AC7 proof size law", ac7_proof_size},
      {"AC8 proof soundness", ac8_soundness},
      {"AC9 prove time growth", ac9_prove_time},
      {"AC10 algorithm ordering", ac10_ordering},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const std::string key = std::string(name).substr(0, std::string(name).find(' '));
    if (!only.empty() && std::find(only.begin(), only.end(), key) == only.end()) continue;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
