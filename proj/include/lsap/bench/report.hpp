#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lsap/bench/harness.hpp"

namespace lsap::bench {

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const;
  std::string text() const;  // right-aligned columns
};

// Derived tables, each averaging over seeds and emitted only when its
// algorithms are present:
//   munkres   hungarian: size, steps, time, iszero, min
//   simplex   size, pivots, time
//   sap       per SAP/auction variant: time, iszero, min
//   latency   sap_acm time, one row per latency and one column per n
//   shuffle   time without and with the countermeasure and the overhead
//   ordering  rounds and secure ops of sap_acm, hungarian and simplex
// Times are at the lowest latency in the grid. Rows ascend in n. Throws
// kInvalidArgument on an empty record set or, listing the missing cells,
// when the (algorithm, n, data, seed, latency, countermeasure) grid is not
// complete.
std::vector<ReportTable> report_tables(const std::vector<BenchRecord>& records);

// Writes <name>.csv and <name>.txt for every table. Nothing is written when
// report_tables throws.
std::vector<std::filesystem::path> write_reports(const std::filesystem::path& dir,
                                                 const std::vector<BenchRecord>& records);

}  // namespace lsap::bench
