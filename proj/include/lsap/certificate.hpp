#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsap/core.hpp"
#include "lsap/solvers.hpp"

namespace lsap {

// Public part: assignment and optimum. Private witness: weights and duals.
struct OptimalityCertificate {
  Assignment assignment;
  std::int64_t optimum = 0;
  DualSolution dual;
  WeightMatrix weights;
};

// Conditions, numbered as reported:
//   1 optimum equals the weight of the assignment
//   2 assignment pairs are in range, row/column disjoint and complete
//   3 sum(u) + sum(v) equals the optimum
//   4 dual feasibility on every cell (and the sign of the long side's
//     potentials for unbalanced instances)
// They are evaluated in the order 2, 3, 4, 1 and the first failure is reported.
struct Verdict {
  bool accepted = true;
  int condition = 0;
  std::optional<Pair> where;
  std::string message;
};

/// Bundles the result with its witness; throws kInvalidCertificate when the
/// result does not verify (a solver bug).
OptimalityCertificate extract_certificate(const WeightMatrix& w, const SolverResult& result);

/// Throws kDimensionMismatch when the dual does not fit the weights.
Verdict verify_certificate_clear(const OptimalityCertificate& cert);

/// The assignment pairs, each checked for zero slack.
std::vector<Pair> tight_edge_set(const OptimalityCertificate& cert);

struct PublicCertificate {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Pair> assignment;
  std::int64_t optimum = 0;
};

// Canonical JSON with fixed key order. The public form never carries
// weights or duals.
std::string to_public_json(const OptimalityCertificate& cert);
std::string to_witness_json(const OptimalityCertificate& cert);
PublicCertificate parse_public_certificate(const std::string& text);
OptimalityCertificate parse_witness_certificate(const std::string& text);

/// Hex SHA-256 of the canonical public form.
std::string certificate_id(const OptimalityCertificate& cert);
std::string certificate_id(const PublicCertificate& cert);

}  // namespace lsap
