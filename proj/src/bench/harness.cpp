#include "lsap/bench/harness.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lsap/bench/generators.hpp"
#include "lsap/error.hpp"
#include "lsap/mpc/oblivious.hpp"
#include "lsap/mpc/simplex_cost.hpp"

namespace lsap::bench {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::int64_t parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad ") + what + ": '" + s + "'");
  }
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad ") + what + ": '" + s + "'");
  }
}

std::vector<std::uint64_t> parse_range_list(const std::string& spec, std::int64_t min,
                                            const char* what) {
  std::vector<std::uint64_t> out;
  for (const std::string& part : split(spec, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      const std::int64_t v = parse_int(part, what);
      if (v < min) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " out of range: " + part);
      out.push_back(static_cast<std::uint64_t>(v));
      continue;
    }
    std::string hi_part = part.substr(dots + 2);
    std::int64_t step = 1;
    if (const auto colon = hi_part.find(':'); colon != std::string::npos) {
      step = parse_int(hi_part.substr(colon + 1), "step");
      hi_part = hi_part.substr(0, colon);
    }
    const std::int64_t lo = parse_int(part.substr(0, dots), what), hi = parse_int(hi_part, what);
    if (lo < min || hi < lo || step < 1) {
      throw Error(ErrorCode::kInvalidArgument, std::string("bad ") + what + " range '" + part + "'");
    }
    for (std::int64_t v = lo; v <= hi; v += step) out.push_back(static_cast<std::uint64_t>(v));
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, std::string("no ") + what + " given");
  return out;
}

struct Measured {
  mpc::Counters counters;
  OpStats stats;
  std::int64_t cost = 0;
};

Measured measure(Algorithm algo, const WeightMatrix& w, bool countermeasure, std::uint64_t seed,
                 const mpc::CostModel& model) {
  if (algo == Algorithm::kSimplex) {
    const mpc::SimplexCost s = mpc::simplex_secure_cost(w, model);
    return {s.counters, s.result.stats, s.result.assignment.cost};
  }
  mpc::EngineConfig config;
  config.seed = seed + 1;
  const mpc::ObliviousRun r = mpc::run_oblivious(algo, w, model, countermeasure, config);
  return {r.counters, r.result.stats, r.result.assignment.cost};
}

}  // namespace

const char* to_string(DataKind kind) {
  switch (kind) {
    case DataKind::kRandom: return "random";
    case DataKind::kStructured: return "structured";
    case DataKind::kFile: return "file";
  }
  return "?";
}

DataKind parse_data_kind(const std::string& s) {
  if (s == "random") return DataKind::kRandom;
  if (s == "structured") return DataKind::kStructured;
  if (s == "file") return DataKind::kFile;
  throw Error(ErrorCode::kInvalidArgument, "unknown data kind '" + s + "'");
}

const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> cols{
      "algorithm", "n",     "data",        "seed",       "runtime_s",
      "rounds",    "zero_tests", "min_finds", "iterations", "latency_ms",
      "steps",     "comparisons", "secure_ops", "countermeasure", "cost"};
  return cols;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.algorithms.empty() || config.latencies_ms.empty() || config.countermeasure.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty benchmark grid");
  }
  struct Instance {
    WeightMatrix w;
    std::uint64_t seed;
  };
  std::vector<Instance> instances;
  if (config.data == DataKind::kFile) {
    if (!config.instance) throw Error(ErrorCode::kInvalidArgument, "file data needs an instance");
    instances.push_back({*config.instance, 0});
  } else {
    if (config.sizes.empty() || config.seeds.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty benchmark grid");
    }
    for (std::size_t n : config.sizes) {
      for (std::uint64_t seed : config.seeds) {
        instances.push_back({config.data == DataKind::kRandom ? gen_random(n, config.width, seed)
                                                              : gen_structured(n, seed, config.width),
                             seed});
      }
    }
  }

  std::vector<BenchRecord> out;
  for (const auto& inst : instances) {
    const std::size_t n = inst.w.side();
    std::optional<std::int64_t> reference;
    if (n <= 8) reference = brute_force(inst.w).cost;
    for (Algorithm algo : config.algorithms) {
      for (bool cm : config.countermeasure) {
        if (cm && algo == Algorithm::kSimplex) continue;
        const Measured m = measure(algo, inst.w, cm, inst.seed, config.model);
        if (!reference) reference = m.cost;
        if (m.cost != *reference) {
          throw Error(ErrorCode::kInternal,
                      std::string(to_string(algo)) + " disagrees on cost at n=" +
                          std::to_string(n) + " seed=" + std::to_string(inst.seed));
        }
        for (double latency : config.latencies_ms) {
          mpc::CostModel model = config.model;
          model.latency_ms = latency;
          BenchRecord r;
          r.algorithm = to_string(algo);
          r.n = n;
          r.data = config.data;
          r.seed = inst.seed;
          r.runtime_s = static_cast<double>(mpc::simulated_time_ns(m.counters, model)) * 1e-9;
          r.rounds = m.counters.rounds;
          r.zero_tests = m.counters.zero_tests;
          r.min_finds = m.counters.min_finds;
          r.iterations = m.stats.iterations;
          r.latency_ms = latency;
          r.steps = m.stats.steps;
          r.comparisons = m.counters.comparisons;
          r.secure_ops = m.counters.secure_ops();
          r.countermeasure = cm;
          r.cost = m.cost;
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
  const auto v = parse_range_list(spec, 1, "size");
  return {v.begin(), v.end()};
}

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
  return parse_range_list(spec, 0, "seed");
}

std::vector<double> parse_latencies(const std::string& spec) {
  std::vector<double> out;
  for (const std::string& part : split(spec, ',')) {
    const double v = parse_double(part, "latency");
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "latency must be nonnegative");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "no latencies given");
  return out;
}

std::vector<Algorithm> parse_algorithms(const std::string& spec) {
  if (spec == "all") {
    return {Algorithm::kHungarian, Algorithm::kSapAcm, Algorithm::kSapJv, Algorithm::kAuction,
            Algorithm::kSimplex};
  }
  std::vector<Algorithm> out;
  for (const std::string& part : split(spec, ',')) out.push_back(parse_algorithm(part));
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "no algorithms given");
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records, bool timestamp_header) {
  if (timestamp_header) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    out << "# generated " << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ") << "\n";
  }
  const auto& cols = bench_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
  out << "\n";
  for (const auto& r : records) {
    out << r.algorithm << ',' << r.n << ',' << to_string(r.data) << ',' << r.seed << ','
        << std::fixed << std::setprecision(9) << r.runtime_s << ',' << r.rounds << ','
        << r.zero_tests << ',' << r.min_finds << ',' << r.iterations << ','
        << std::setprecision(3) << r.latency_ms << ',' << r.steps << ',' << r.comparisons << ','
        << r.secure_ops << ',' << (r.countermeasure ? 1 : 0) << ',' << r.cost << "\n";
    out.unsetf(std::ios::floatfield);
  }
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::vector<BenchRecord> out;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = split(line, ',');
    if (!header) {
      if (f != bench_columns()) throw Error(ErrorCode::kParse, "unexpected bench CSV header");
      header = true;
      continue;
    }
    if (f.size() != bench_columns().size()) throw Error(ErrorCode::kParse, "bench CSV row has wrong arity");
    BenchRecord r;
    r.algorithm = f[0];
    r.n = static_cast<std::size_t>(parse_int(f[1], "n"));
    r.data = parse_data_kind(f[2]);
    r.seed = static_cast<std::uint64_t>(parse_int(f[3], "seed"));
    r.runtime_s = parse_double(f[4], "runtime");
    r.rounds = parse_int(f[5], "rounds");
    r.zero_tests = parse_int(f[6], "zero_tests");
    r.min_finds = parse_int(f[7], "min_finds");
    r.iterations = parse_int(f[8], "iterations");
    r.latency_ms = parse_double(f[9], "latency");
    r.steps = parse_int(f[10], "steps");
    r.comparisons = parse_int(f[11], "comparisons");
    r.secure_ops = parse_int(f[12], "secure_ops");
    r.countermeasure = parse_int(f[13], "countermeasure") != 0;
    r.cost = parse_int(f[14], "cost");
    out.push_back(std::move(r));
  }
  if (!header) throw Error(ErrorCode::kParse, "bench CSV has no header");
  return out;
}

}  // namespace lsap::bench
