#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lsap_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run(const std::string& args, const std::string& env = "") {
    const std::string cmd = "cd '" + dir_.string() + "' && " + env + " '" LSAP_BIN "' " + args + " 2>&1";
    Outcome r;
    FILE* p = popen(cmd.c_str(), "r");
    char buf[4096];
    while (std::size_t k = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, k);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

TEST_F(Cli, SolveFileExample) {
  write("m.txt", "2 2 min\n1 2\n2 4\n");
  const Outcome r = run("solve --algo hungarian --data file --in m.txt");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\ncost 4\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("assignment 0:1 1:0"), std::string::npos) << r.out;
}

TEST_F(Cli, SolveEveryAlgorithmAgrees) {
  for (const char* algo : {"hungarian", "sap_acm", "sap_jv", "auction", "simplex"}) {
    const Outcome r = run(std::string("solve --algo ") + algo + " --n 7 --seeds 3");
    EXPECT_EQ(r.code, 0) << r.out;
    const Outcome ref = run("solve --algo hungarian --n 7 --seeds 3");
    const auto cost = [](const std::string& s) {
      const auto at = s.find("\ncost ");
      return s.substr(at, s.find('\n', at + 1) - at);
    };
    EXPECT_EQ(cost(r.out), cost(ref.out)) << algo;
  }
}

TEST_F(Cli, SolveMpc) {
  const Outcome r = run("solve --algo sap_acm --n 5 --mpc --latency 5");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("mpc rounds="), std::string::npos) << r.out;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("solve --algo nope --n 3").code, 1);
  EXPECT_EQ(run("solve --data file").code, 1);
  EXPECT_EQ(run("solve --data bogus --n 3").code, 1);
  write("bad.txt", "2 2 min\n1 x\n");
  EXPECT_EQ(run("solve --in bad.txt").code, 1);
}

TEST_F(Cli, CertifyWritesBothFiles) {
  write("m.txt", "2 2 min\n1 2\n2 4\n");
  const Outcome r = run("certify --in m.txt --out certs");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(dir_ / "certs/certificate.public.json"));
  EXPECT_TRUE(fs::exists(dir_ / "certs/certificate.witness.json"));
  EXPECT_EQ(run("verify --in certs/certificate.witness.json").code, 0);
}

TEST_F(Cli, OutputDirectoryFromEnvironment) {
  write("m.txt", "2 2 min\n1 2\n2 4\n");
  EXPECT_EQ(run("certify --in m.txt", "LSAP_OUT_DIR=envout").code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "envout/certificate.public.json"));
}

TEST_F(Cli, ProveVerifyAndTamper) {
  write("m.txt", "3 3 min\n4 1 3\n2 0 5\n3 2 2\n");
  const Outcome p = run("prove --in m.txt --out proof.bin");
  ASSERT_EQ(p.code, 0) << p.out;
  EXPECT_NE(p.out.find("size_law"), std::string::npos);
  EXPECT_EQ(run("verify --in proof.bin").code, 0);

  std::ifstream f(dir_ / "proof.bin", std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  // Flip a bit in the range proof's last scalar.
  bytes[bytes.size() - 40] ^= 1;
  std::ofstream(dir_ / "tampered.bin", std::ios::binary) << bytes;
  const Outcome t = run("verify --in tampered.bin");
  EXPECT_EQ(t.code, 2) << t.out;
  EXPECT_NE(t.out.find("rejected"), std::string::npos);

  // Truncated input is a malformed proof, hence also a rejection.
  std::ofstream(dir_ / "short.bin", std::ios::binary) << bytes.substr(0, 50);
  EXPECT_EQ(run("verify --in short.bin").code, 2);
  // An unreadable file is not.
  EXPECT_EQ(run("verify --in missing.bin").code, 1);
}

TEST_F(Cli, ProveFromWitness) {
  write("m.txt", "2 3 max\n1 5 2\n4 4 0\n");
  ASSERT_EQ(run("certify --in m.txt --out c").code, 0);
  const Outcome p = run("prove --in c/certificate.witness.json --out w.bin");
  ASSERT_EQ(p.code, 0) << p.out;
  EXPECT_EQ(run("verify --in w.bin").code, 0);
}

TEST_F(Cli, BenchCsvIsDeterministicAndAffine) {
  const std::string args = "bench --algo all --n 3..4 --seeds 1..2 --latency 0,5,10";
  const Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("algorithm,n,data,seed,runtime_s,rounds", 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 5 * 2 * 2 * 3);
}

TEST_F(Cli, BenchTimestampAndReport) {
  const Outcome r = run("bench --algo hungarian,sap_acm,simplex --n 3,5 --latency 0,20 --timestamp "
                    "--out b.csv --report tables");
  ASSERT_EQ(r.code, 0) << r.out;
  std::ifstream f(dir_ / "b.csv");
  std::string first;
  std::getline(f, first);
  EXPECT_EQ(first.rfind("# generated ", 0), 0u);
  for (const char* t : {"munkres", "simplex", "sap", "latency", "ordering"}) {
    EXPECT_TRUE(fs::exists(dir_ / "tables" / (std::string(t) + ".txt"))) << t;
  }
}

TEST_F(Cli, ShuffleDemo) {
  const Outcome r = run("shuffle-demo --n 6");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("plain leakage repeats: yes"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("shuffled leakage repeats: no"), std::string::npos) << r.out;
}

}  // namespace
