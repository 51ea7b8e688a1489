#include <string>

#include "lsap/certificate.hpp"

namespace lsap {
namespace {

Verdict reject(int condition, std::optional<Pair> where, std::string message) {
  return {false, condition, where, std::move(message)};
}

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Verdict verify_certificate_clear(const OptimalityCertificate& cert) {
  const WeightMatrix& w = cert.weights;
  const auto& u = cert.dual.u;
  const auto& v = cert.dual.v;
  if (u.size() != w.rows() || v.size() != w.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "dual length does not match the weight matrix");
  }
  const bool maximize = w.sense() == Sense::kMaximize;

  // 2: a complete matching.
  std::vector<char> row_used(w.rows(), 0), col_used(w.cols(), 0);
  for (const auto& p : cert.assignment.pairs) {
    if (p.row >= w.rows() || p.col >= w.cols()) {
      return reject(2, p, "pair " + cell(p.row, p.col) + " out of range");
    }
    if (row_used[p.row] || col_used[p.col]) {
      return reject(2, p, "pair " + cell(p.row, p.col) + " reuses a row or column");
    }
    row_used[p.row] = col_used[p.col] = 1;
  }
  if (cert.assignment.pairs.size() != std::min(w.rows(), w.cols())) {
    return reject(2, std::nullopt, "assignment is incomplete");
  }

  // 3: dual objective equals the claimed optimum.
  if (cert.dual.objective() != cert.optimum) {
    return reject(3, std::nullopt,
                  "dual sum " + std::to_string(cert.dual.objective()) + " != optimum " +
                      std::to_string(cert.optimum));
  }

  // 4: feasibility.
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      const std::int64_t s = u[i] + v[j];
      if (maximize ? s < w(i, j) : s > w(i, j)) {
        return reject(4, Pair{i, j}, "dual constraint violated at " + cell(i, j));
      }
    }
  }
  // Unmatched rows or columns must carry a potential of the right sign.
  if (w.rows() < w.cols()) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (maximize ? v[j] < 0 : v[j] > 0) {
        return reject(4, Pair{w.rows(), j}, "column potential has the wrong sign");
      }
    }
  } else if (w.cols() < w.rows()) {
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (maximize ? u[i] < 0 : u[i] > 0) {
        return reject(4, Pair{i, w.cols()}, "row potential has the wrong sign");
      }
    }
  }

  // 1: the optimum is the weight of the assignment.
  std::int64_t total = 0;
  for (const auto& p : cert.assignment.pairs) total += w(p.row, p.col);
  if (total != cert.optimum) {
    return reject(1, std::nullopt,
                  "assignment weighs " + std::to_string(total) + ", optimum claims " +
                      std::to_string(cert.optimum));
  }
  return {};
}

OptimalityCertificate extract_certificate(const WeightMatrix& w, const SolverResult& result) {
  OptimalityCertificate cert{result.assignment, result.assignment.cost, result.dual, w};
  const Verdict verdict = verify_certificate_clear(cert);
  if (!verdict.accepted) {
    throw Error(ErrorCode::kInvalidCertificate,
                "result does not certify (condition " + std::to_string(verdict.condition) +
                    "): " + verdict.message);
  }
  return cert;
}

std::vector<Pair> tight_edge_set(const OptimalityCertificate& cert) {
  const WeightMatrix& w = cert.weights;
  if (cert.dual.u.size() != w.rows() || cert.dual.v.size() != w.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "dual length does not match the weight matrix");
  }
  for (const auto& p : cert.assignment.pairs) {
    if (p.row >= w.rows() || p.col >= w.cols() ||
        cert.dual.u[p.row] + cert.dual.v[p.col] != w(p.row, p.col)) {
      throw Error(ErrorCode::kInvalidCertificate,
                  "assignment pair " + cell(p.row, p.col) + " has nonzero slack");
    }
  }
  return cert.assignment.pairs;
}

}  // namespace lsap
