#include "lsap/bench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "lsap/error.hpp"

namespace lsap::bench {
namespace {

using Cell = std::tuple<std::string, std::size_t, std::string, std::uint64_t, double, bool>;

Cell cell_of(const BenchRecord& r) {
  return {r.algorithm, r.n, to_string(r.data), r.seed, r.latency_ms, r.countermeasure};
}

std::string cell_text(const Cell& c) {
  std::ostringstream out;
  out << std::get<0>(c) << " n=" << std::get<1>(c) << " data=" << std::get<2>(c)
      << " seed=" << std::get<3>(c) << " latency=" << std::get<4>(c)
      << " countermeasure=" << (std::get<5>(c) ? 1 : 0);
  return out.str();
}

void check_grid(const std::vector<BenchRecord>& records) {
  if (records.empty()) throw Error(ErrorCode::kInvalidArgument, "no benchmark records");
  std::set<std::string> algos, data;
  std::set<std::size_t> sizes;
  std::set<std::uint64_t> seeds;
  std::set<double> latencies;
  std::set<bool> cms;
  std::set<Cell> present;
  for (const auto& r : records) {
    algos.insert(r.algorithm);
    data.insert(to_string(r.data));
    sizes.insert(r.n);
    seeds.insert(r.seed);
    latencies.insert(r.latency_ms);
    cms.insert(r.countermeasure);
    present.insert(cell_of(r));
  }
  std::vector<std::string> missing;
  for (const auto& a : algos)
    for (std::size_t n : sizes)
      for (const auto& d : data)
        for (std::uint64_t s : seeds)
          for (double l : latencies)
            for (bool cm : cms) {
              // The simplex model has no countermeasure variant.
              if (cm && a == "simplex") continue;
              Cell c{a, n, d, s, l, cm};
              if (!present.count(c)) missing.push_back(cell_text(c));
            }
  if (missing.empty()) return;
  std::string msg = "incomplete benchmark grid, missing " + std::to_string(missing.size()) + " cell(s):";
  const std::size_t shown = std::min<std::size_t>(missing.size(), 20);
  for (std::size_t k = 0; k < shown; ++k) msg += "\n  " + missing[k];
  if (shown < missing.size()) msg += "\n  ...";
  throw Error(ErrorCode::kInvalidArgument, msg);
}

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string count(double v) { return fmt(v, v == static_cast<double>(static_cast<std::int64_t>(v)) ? 0 : 1); }
std::string seconds(double v) { return fmt(v, 4); }

struct Mean {
  double runtime = 0, rounds = 0, zero_tests = 0, min_finds = 0, steps = 0, iterations = 0, ops = 0;
  int k = 0;
  void add(const BenchRecord& r) {
    runtime += r.runtime_s;
    rounds += static_cast<double>(r.rounds);
    zero_tests += static_cast<double>(r.zero_tests);
    min_finds += static_cast<double>(r.min_finds);
    steps += static_cast<double>(r.steps);
    iterations += static_cast<double>(r.iterations);
    ops += static_cast<double>(r.secure_ops);
    ++k;
  }
  Mean done() const {
    Mean m = *this;
    const double d = k ? k : 1;
    m.runtime /= d, m.rounds /= d, m.zero_tests /= d, m.min_finds /= d;
    m.steps /= d, m.iterations /= d, m.ops /= d;
    return m;
  }
};

// Means over seeds keyed by (algorithm, data, n, latency, countermeasure).
class Means {
 public:
  explicit Means(const std::vector<BenchRecord>& records) {
    for (const auto& r : records) {
      acc_[{r.algorithm, to_string(r.data), r.n, r.latency_ms, r.countermeasure}].add(r);
      algos_.insert(r.algorithm);
      data_.insert(to_string(r.data));
      sizes_.insert(r.n);
      latencies_.insert(r.latency_ms);
      cms_.insert(r.countermeasure);
    }
  }
  bool has(const std::string& a) const { return algos_.count(a) > 0; }
  Mean get(const std::string& a, const std::string& d, std::size_t n, double l, bool cm = false) const {
    return acc_.at({a, d, n, l, cm}).done();
  }
  const std::set<std::string>& data() const { return data_; }
  const std::set<std::size_t>& sizes() const { return sizes_; }
  const std::set<double>& latencies() const { return latencies_; }
  double base_latency() const { return *latencies_.begin(); }
  bool has_cm(bool cm) const { return cms_.count(cm) > 0; }

 private:
  std::map<std::tuple<std::string, std::string, std::size_t, double, bool>, Mean> acc_;
  std::set<std::string> algos_, data_;
  std::set<std::size_t> sizes_;
  std::set<double> latencies_;
  std::set<bool> cms_;
};

}  // namespace

std::string ReportTable::csv() const {
  std::string out;
  for (std::size_t k = 0; k < columns.size(); ++k) out += (k ? "," : "") + columns[k];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + row[k];
    out += "\n";
  }
  return out;
}

std::string ReportTable::text() const {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) width[k] = columns[k].size();
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out += "  ";
      out += std::string(width[k] - cells[k].size(), ' ') + cells[k];
    }
    return out + "\n";
  };
  std::string out = line(columns);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
  for (const auto& row : rows) out += line(row);
  return out;
}

std::vector<ReportTable> report_tables(const std::vector<BenchRecord>& records) {
  check_grid(records);
  const Means m(records);
  const double l0 = m.base_latency();
  std::vector<ReportTable> out;

  if (m.has("hungarian") && m.has_cm(false)) {
    ReportTable t{"munkres", {"data", "size", "steps", "time_s", "iszero", "min"}, {}};
    for (const auto& d : m.data())
      for (std::size_t n : m.sizes()) {
        const Mean x = m.get("hungarian", d, n, l0);
        t.rows.push_back({d, std::to_string(n), count(x.steps), seconds(x.runtime),
                          count(x.zero_tests), count(x.min_finds)});
      }
    out.push_back(std::move(t));
  }

  if (m.has("simplex")) {
    ReportTable t{"simplex", {"data", "size", "pivots", "time_s"}, {}};
    for (const auto& d : m.data())
      for (std::size_t n : m.sizes()) {
        const Mean x = m.get("simplex", d, n, l0);
        t.rows.push_back({d, std::to_string(n), count(x.iterations), seconds(x.runtime)});
      }
    out.push_back(std::move(t));
  }

  std::vector<std::string> variants;
  for (const char* a : {"sap_jv", "sap_acm", "auction"})
    if (m.has(a)) variants.emplace_back(a);
  if (!variants.empty() && m.has_cm(false)) {
    ReportTable t{"sap", {"data", "n"}, {}};
    for (const auto& a : variants) {
      t.columns.push_back(a + "_time_s");
      t.columns.push_back(a + "_iszero");
      t.columns.push_back(a + "_min");
    }
    for (const auto& d : m.data())
      for (std::size_t n : m.sizes()) {
        std::vector<std::string> row{d, std::to_string(n)};
        for (const auto& a : variants) {
          const Mean x = m.get(a, d, n, l0);
          row.push_back(seconds(x.runtime));
          row.push_back(count(x.zero_tests));
          row.push_back(count(x.min_finds));
        }
        t.rows.push_back(std::move(row));
      }
    out.push_back(std::move(t));
  }

  if (m.has("sap_acm") && m.has_cm(false)) {
    // Rows are latencies; the sizes run across.
    ReportTable t{"latency", {"data", "latency_ms"}, {}};
    for (std::size_t n : m.sizes()) t.columns.push_back("n" + std::to_string(n) + "_time_s");
    for (const auto& d : m.data())
      for (double l : m.latencies()) {
        std::vector<std::string> row{d, fmt(l, 1)};
        for (std::size_t n : m.sizes()) row.push_back(seconds(m.get("sap_acm", d, n, l).runtime));
        t.rows.push_back(std::move(row));
      }
    out.push_back(std::move(t));
  }

  if (m.has_cm(true) && m.has_cm(false)) {
    ReportTable t{"shuffle", {"algorithm", "data", "n", "plain_s", "shuffled_s", "overhead_s"}, {}};
    for (const char* a : {"hungarian", "sap_acm", "sap_jv", "auction"}) {
      if (!m.has(a)) continue;
      for (const auto& d : m.data())
        for (std::size_t n : m.sizes()) {
          const double plain = m.get(a, d, n, l0, false).runtime;
          const double shuffled = m.get(a, d, n, l0, true).runtime;
          t.rows.push_back({a, d, std::to_string(n), seconds(plain), seconds(shuffled),
                            seconds(shuffled - plain)});
        }
    }
    out.push_back(std::move(t));
  }

  if (m.has("sap_acm") && m.has("hungarian") && m.has("simplex") && m.has_cm(false)) {
    ReportTable t{"ordering",
                  {"data", "n", "sap_acm_rounds", "hungarian_rounds", "simplex_rounds",
                   "sap_acm_ops", "hungarian_ops", "simplex_ops", "simplex_over_sap_acm"},
                  {}};
    for (const auto& d : m.data())
      for (std::size_t n : m.sizes()) {
        const Mean s = m.get("sap_acm", d, n, l0), h = m.get("hungarian", d, n, l0),
                   x = m.get("simplex", d, n, l0);
        t.rows.push_back({d, std::to_string(n), count(s.rounds), count(h.rounds), count(x.rounds),
                          count(s.ops), count(h.ops), count(x.ops),
                          fmt(s.runtime > 0 ? x.runtime / s.runtime : 0.0, 1)});
      }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::filesystem::path> write_reports(const std::filesystem::path& dir,
                                                 const std::vector<BenchRecord>& records) {
  const std::vector<ReportTable> tables = report_tables(records);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& t : tables) {
    for (const auto& [ext, body] : {std::pair{".csv", t.csv()}, std::pair{".txt", t.text()}}) {
      const auto path = dir / (t.name + ext);
      std::ofstream f(path, std::ios::binary);
      if (!(f << body)) throw Error(ErrorCode::kIo, "cannot write " + path.string());
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace lsap::bench
