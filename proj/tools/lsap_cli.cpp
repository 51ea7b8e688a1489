#include <sodium.h>

#include <CLI11.hpp>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lsap/bench/generators.hpp"
#include "lsap/bench/harness.hpp"
#include "lsap/bench/report.hpp"
#include "lsap/certificate.hpp"
#include "lsap/error.hpp"
#include "lsap/mpc/oblivious.hpp"
#include "lsap/zk/serialize.hpp"

namespace {

using namespace lsap;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kUsage = 1, kRejected = 2, kFailure = 3 };

struct Options {
  std::string algo = "hungarian";
  std::string n;
  std::string seeds = "1";
  std::string latency = "0";
  std::string data;
  std::string in;
  std::string out;
  std::string report;
  int width = kDefaultBitLength;
  bool countermeasure = false;
  bool mpc = false;
  bool timestamp = false;
};

fs::path out_dir() {
  const char* env = std::getenv("LSAP_OUT_DIR");
  return env && *env ? fs::path(env) : fs::path(".");
}

std::string digest(const std::string& text) {
  unsigned char h[crypto_hash_sha256_BYTES];
  crypto_hash_sha256(h, reinterpret_cast<const unsigned char*>(text.data()), text.size());
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : h) out += {hex[c >> 4], hex[c & 15]};
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!(f << text)) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

bench::DataKind data_kind(const Options& o) {
  if (!o.data.empty()) return bench::parse_data_kind(o.data);
  return o.in.empty() ? bench::DataKind::kRandom : bench::DataKind::kFile;
}

// The single instance selected by --data/--in or --n/--seeds.
WeightMatrix instance(const Options& o) {
  const bench::DataKind kind = data_kind(o);
  if (kind == bench::DataKind::kFile) {
    if (o.in.empty()) throw Error(ErrorCode::kInvalidArgument, "--data file needs --in");
    return read_matrix_file(o.in);
  }
  if (o.n.empty()) throw Error(ErrorCode::kInvalidArgument, "--n is required for generated data");
  const std::size_t n = bench::parse_sizes(o.n).front();
  const std::uint64_t seed = bench::parse_seeds(o.seeds).front();
  return kind == bench::DataKind::kRandom ? bench::gen_random(n, o.width, seed)
                                          : bench::gen_structured(n, seed, o.width);
}

void print_vector(const char* name, const std::vector<std::int64_t>& v) {
  std::cout << name;
  for (auto x : v) std::cout << ' ' << x;
  std::cout << "\n";
}

void print_result(const WeightMatrix& w, Algorithm algo, const SolverResult& r) {
  std::cout << "algorithm " << to_string(algo) << "\n"
            << "instance " << w.rows() << "x" << w.cols() << " " << to_string(w.sense()) << "\n"
            << "assignment";
  for (const auto& p : r.assignment.pairs) std::cout << ' ' << p.row << ':' << p.col;
  std::cout << "\ncost " << r.assignment.cost << "\n";
  print_vector("u", r.dual.u);
  print_vector("v", r.dual.v);
  const OpStats& s = r.stats;
  std::cout << "stats steps=" << s.steps << " iterations=" << s.iterations
            << " zero_tests=" << s.zero_tests << " min_finds=" << s.min_finds
            << " comparisons=" << s.comparisons << "\n";
}

int cmd_solve(const Options& o) {
  const WeightMatrix w = instance(o);
  const Algorithm algo = parse_algorithm(o.algo);
  if (!o.mpc) {
    print_result(w, algo, solve(algo, w));
    return kOk;
  }
  mpc::CostModel model;
  model.latency_ms = bench::parse_latencies(o.latency).front();
  mpc::EngineConfig config;
  config.seed = bench::parse_seeds(o.seeds).front() + 1;
  const mpc::ObliviousRun run = mpc::run_oblivious(algo, w, model, o.countermeasure, config);
  print_result(w, algo, run.result);
  const mpc::Counters& c = run.counters;
  std::cout << "mpc rounds=" << c.rounds << " multiplications=" << c.multiplications
            << " opened=" << c.opened_values << " zero_tests=" << c.zero_tests
            << " comparisons=" << c.comparisons << " min_finds=" << c.min_finds << "\n"
            << "simulated_s " << run.simulated_seconds() << "\n"
            << "leakage events=" << run.leakage.size() << " digest=" << digest(run.leakage.to_text())
            << "\n";
  return kOk;
}

OptimalityCertificate certificate_for(const Options& o) {
  const WeightMatrix w = instance(o);
  return extract_certificate(w, solve(parse_algorithm(o.algo), w));
}

int cmd_certify(const Options& o) {
  const OptimalityCertificate cert = certificate_for(o);
  const fs::path dir = o.out.empty() ? out_dir() : fs::path(o.out);
  write_text(dir / "certificate.public.json", to_public_json(cert));
  write_text(dir / "certificate.witness.json", to_witness_json(cert));
  std::cout << "id " << certificate_id(cert) << "\n"
            << "optimum " << cert.optimum << "\n"
            << "public " << (dir / "certificate.public.json").string() << "\n"
            << "witness " << (dir / "certificate.witness.json").string() << "\n";
  return kOk;
}

bool is_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  char c = 0;
  while (f.get(c) && std::isspace(static_cast<unsigned char>(c))) {
  }
  return c == '{';
}

int cmd_prove(const Options& o) {
  // A witness certificate may be given with --in instead of a matrix.
  const OptimalityCertificate cert = !o.in.empty() && is_json(o.in)
                                         ? parse_witness_certificate(read_text(o.in))
                                         : certificate_for(o);
  const zk::ProofBundle bundle = zk::prove_bundle(cert, o.width);
  const fs::path path = o.out.empty() ? out_dir() / "proof.lsapzk" : fs::path(o.out);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  zk::write_file_bytes(path.string(), zk::serialize(bundle));
  std::cout << zk::manifest(bundle) << "proof " << path.string() << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.in.empty()) throw Error(ErrorCode::kInvalidArgument, "verify needs --in");
  if (is_json(o.in)) {
    const Verdict v = verify_certificate_clear(parse_witness_certificate(read_text(o.in)));
    if (v.accepted) {
      std::cout << "accepted\n";
      return kOk;
    }
    std::cout << "rejected condition " << v.condition << ": " << v.message << "\n";
    return kRejected;
  }
  // A proof that does not parse is rejected like one that does not verify;
  // only an unreadable file is an I/O failure.
  const std::vector<std::uint8_t> bytes = zk::read_file_bytes(o.in);
  zk::ProofBundle bundle;
  zk::ZkVerdict v;
  try {
    bundle = zk::deserialize(bytes);
    v = zk::verify_bundle(bundle);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse) throw;
    v = {false, 0, std::string("malformed proof: ") + e.what()};
  }
  if (v.accepted) {
    std::cout << "accepted optimum " << bundle.statement.optimum << "\n";
    return kOk;
  }
  std::cout << "rejected condition " << v.condition << ": " << v.message << "\n";
  return kRejected;
}

int cmd_bench(const Options& o) {
  bench::BenchConfig config;
  config.algorithms = bench::parse_algorithms(o.algo);
  config.data = data_kind(o);
  config.width = o.width;
  config.latencies_ms = bench::parse_latencies(o.latency);
  config.seeds = bench::parse_seeds(o.seeds);
  if (o.countermeasure) config.countermeasure = {false, true};
  WeightMatrix file_instance;
  if (config.data == bench::DataKind::kFile) {
    file_instance = instance(o);
    config.instance = &file_instance;
  } else {
    if (o.n.empty()) throw Error(ErrorCode::kInvalidArgument, "--n is required for generated data");
    config.sizes = bench::parse_sizes(o.n);
  }
  const auto records = bench::run_bench(config);
  std::ostringstream csv;
  bench::write_csv(csv, records, o.timestamp);
  if (!o.out.empty()) {
    write_text(o.out, csv.str());
  } else if (std::getenv("LSAP_OUT_DIR")) {
    write_text(out_dir() / "bench.csv", csv.str());
  } else {
    std::cout << csv.str();
  }
  if (!o.report.empty()) {
    for (const auto& p : bench::write_reports(o.report, records)) std::cerr << "wrote " << p.string() << "\n";
  }
  return kOk;
}

int cmd_shuffle_demo(const Options& o) {
  Options opt = o;
  if (opt.n.empty() && opt.in.empty()) opt.n = "8";
  const WeightMatrix w = instance(opt);
  const Algorithm algo = parse_algorithm(o.algo);
  std::string plain[2], shuffled[2];
  std::int64_t cost = 0;
  for (int k = 0; k < 2; ++k) {
    mpc::EngineConfig config;
    config.seed = 100 + k;
    const auto a = mpc::run_oblivious(algo, w, {}, false, config);
    const auto b = mpc::run_oblivious(algo, w, {}, true, config);
    if (a.result.assignment.cost != b.result.assignment.cost) {
      throw Error(ErrorCode::kInternal, "countermeasure changed the cost");
    }
    cost = a.result.assignment.cost;
    plain[k] = digest(a.leakage.to_text());
    shuffled[k] = digest(b.leakage.to_text());
    if (k == 0) {
      std::cout << "events plain=" << a.leakage.size() << " shuffled=" << b.leakage.size() << "\n";
    }
  }
  std::cout << "algorithm " << to_string(algo) << "\n"
            << "cost " << cost << "\n"
            << "plain    run1 " << plain[0] << "\n"
            << "plain    run2 " << plain[1] << "\n"
            << "shuffled run1 " << shuffled[0] << "\n"
            << "shuffled run2 " << shuffled[1] << "\n"
            << "plain leakage repeats: " << (plain[0] == plain[1] ? "yes" : "no") << "\n"
            << "shuffled leakage repeats: " << (shuffled[0] == shuffled[1] ? "yes" : "no") << "\n";
  return kOk;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kParse:
    case ErrorCode::kIo:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kInstanceTooLarge:
    case ErrorCode::kWidthOverflow:
      return kUsage;
    default:
      return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear sum assignment: solvers, secure evaluation, certificates and proofs"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--algo", o.algo, "hungarian, sap_acm, sap_jv, auction, simplex (bench: list or all)");
    c->add_option("--n", o.n, "size, or for bench a list such as 10..50:10 or 4,8");
    c->add_option("--seeds", o.seeds, "seed, or for bench a list such as 1..5")->capture_default_str();
    c->add_option("--data", o.data, "random, structured or file")
        ->check(CLI::IsMember({"random", "structured", "file"}));
    c->add_option("--in", o.in, "input matrix, certificate or proof file");
    c->add_option("--out", o.out, "output file or directory");
    c->add_option("--width", o.width, "weight bit length")->capture_default_str();
  };

  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  common(solve_cmd);
  solve_cmd->add_flag("--mpc", o.mpc, "run on secret-shared weights");
  solve_cmd->add_option("--latency", o.latency, "network latency in ms for --mpc");
  solve_cmd->add_flag("--countermeasure", o.countermeasure, "shuffle rows and columns first");

  auto* certify_cmd = app.add_subcommand("certify", "write public and witness certificates");
  common(certify_cmd);

  auto* prove_cmd = app.add_subcommand("prove", "prove optimality in zero knowledge");
  common(prove_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a proof or a witness certificate");
  verify_cmd->add_option("--in", o.in, "proof or witness certificate")->required();

  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark grid and emit CSV");
  common(bench_cmd);
  bench_cmd->add_option("--latency", o.latency, "latencies in ms, e.g. 0,5,10")->capture_default_str();
  bench_cmd->add_flag("--countermeasure", o.countermeasure, "also run every cell shuffled");
  bench_cmd->add_option("--report", o.report, "directory for derived tables");
  bench_cmd->add_flag("--timestamp", o.timestamp, "prefix the CSV with a generation line");

  auto* demo_cmd = app.add_subcommand("shuffle-demo", "compare leakage with and without shuffling");
  common(demo_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(o);
    if (*certify_cmd) return cmd_certify(o);
    if (*prove_cmd) return cmd_prove(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*bench_cmd) return cmd_bench(o);
    if (demo_cmd->parsed()) {
      if (demo_cmd->count("--algo") == 0) o.algo = "sap_acm";
      return cmd_shuffle_demo(o);
    }
  } catch (const Error& e) {
    std::cerr << "lsap: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "lsap: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
