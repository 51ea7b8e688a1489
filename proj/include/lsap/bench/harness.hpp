#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lsap/mpc/engine.hpp"
#include "lsap/solvers.hpp"

namespace lsap::bench {

enum class DataKind { kRandom, kStructured, kFile };
const char* to_string(DataKind kind);
DataKind parse_data_kind(const std::string& s);

// One benchmark cell. runtime_s is the simulated time under the cost model
// at the given latency; wall-clock time is not recorded because it depends
// on the host.
struct BenchRecord {
  std::string algorithm;
  std::size_t n = 0;
  DataKind data = DataKind::kRandom;
  std::uint64_t seed = 0;
  double runtime_s = 0;
  std::int64_t rounds = 0;
  std::int64_t zero_tests = 0;
  std::int64_t min_finds = 0;
  std::int64_t iterations = 0;
  double latency_ms = 0;
  std::int64_t steps = 0;
  std::int64_t comparisons = 0;
  std::int64_t secure_ops = 0;
  bool countermeasure = false;
  std::int64_t cost = 0;
};

// Column names in field order.
const std::vector<std::string>& bench_columns();

struct BenchConfig {
  std::vector<Algorithm> algorithms;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<double> latencies_ms{0.0};
  DataKind data = DataKind::kRandom;
  int width = kDefaultBitLength;
  std::vector<bool> countermeasure{false};
  mpc::CostModel model;  // latency is taken from latencies_ms
  // With data == kFile the single instance to run; sizes and seeds are
  // ignored.
  const WeightMatrix* instance = nullptr;
};

// Runs every (algorithm, n, seed, countermeasure) cell once and derives the
// records for every latency from its counters. Costs are cross-checked
// between algorithms on every instance and against brute force up to n = 8;
// a disagreement throws kInternal.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

// Parses "10..50", "10..50:10" or "4,8,16" (forms may be mixed by commas).
// The step defaults to 1.
std::vector<std::size_t> parse_sizes(const std::string& spec);
// Same grammar; zero is allowed.
std::vector<std::uint64_t> parse_seeds(const std::string& spec);
std::vector<double> parse_latencies(const std::string& spec);
std::vector<Algorithm> parse_algorithms(const std::string& spec);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records,
               bool timestamp_header = false);
std::vector<BenchRecord> read_csv(std::istream& in);

}  // namespace lsap::bench
