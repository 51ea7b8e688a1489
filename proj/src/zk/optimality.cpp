#include "lsap/zk/optimality.hpp"

#include "lsap/error.hpp"

namespace lsap::zk {
namespace {

struct RangeItem {
  __int128 value;
  Scalar blind;
};

// Derived slack commitment for cell (i, j), oriented so that feasibility
// means a nonnegative value.
Point slack_commitment(const CommitmentSet& c, Sense sense, std::size_t i, std::size_t j) {
  const Point& w = c.w[i * c.cols + j];
  return sense == Sense::kMinimize ? w - c.u[i] - c.v[j] : c.u[i] + c.v[j] - w;
}

// The range statements in canonical order, as derived commitments.
std::vector<Point> derived_ranges(const CommitmentSet& c, Sense sense) {
  std::vector<Point> out;
  out.reserve(range_count(c.rows, c.cols));
  for (std::size_t i = 0; i < c.rows; ++i) {
    for (std::size_t j = 0; j < c.cols; ++j) out.push_back(slack_commitment(c, sense, i, j));
  }
  const bool minimize = sense == Sense::kMinimize;
  if (c.rows < c.cols) {
    for (const auto& p : c.v) out.push_back(minimize ? Point{} - p : p);
  } else if (c.cols < c.rows) {
    for (const auto& p : c.u) out.push_back(minimize ? Point{} - p : p);
  }
  return out;
}

void absorb(Transcript& t, const GroupContext& ctx, const CommitmentSet& c,
            const PublicStatement& s, const OptimalityProof& p) {
  t.append("label", std::span(reinterpret_cast<const std::uint8_t*>(ctx.label.data()),
                              ctx.label.size()));
  t.append_u64("rows", s.rows);
  t.append_u64("cols", s.cols);
  t.append_u64("sense", s.sense == Sense::kMaximize ? 1 : 0);
  t.append_u64("width", static_cast<std::uint64_t>(p.width));
  for (const auto& x : c.w) t.append("W", x);
  for (const auto& x : c.u) t.append("U", x);
  for (const auto& x : c.v) t.append("V", x);
  t.append_u64("pairs", s.assignment.size());
  for (const auto& q : s.assignment) {
    t.append_u64("row", q.row);
    t.append_u64("col", q.col);
  }
  t.append("optimum", Scalar::from_int(s.optimum));
  for (const auto& x : p.padding) t.append("pad", x);
  t.append("dual_blind", p.dual_blind);
  t.append("weight_blind", p.weight_blind);
  for (const auto& x : p.tight_blinds) t.append("tight", x);
}

ZkVerdict reject(int condition, std::string message) { return {false, condition, std::move(message)}; }

}  // namespace

Blinds Blinds::random(std::size_t rows, std::size_t cols) {
  Blinds b;
  b.w.resize(rows * cols);
  b.u.resize(rows);
  b.v.resize(cols);
  for (auto* vec : {&b.w, &b.u, &b.v}) {
    for (auto& s : *vec) s = Scalar::random();
  }
  return b;
}

CommitmentSet commit_instance(const GroupContext& ctx, const WeightMatrix& w,
                              const DualSolution& dual, const Blinds& blinds) {
  if (dual.u.size() != w.rows() || dual.v.size() != w.cols() ||
      blinds.w.size() != w.rows() * w.cols() || blinds.u.size() != w.rows() ||
      blinds.v.size() != w.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "witness and blinding sizes do not match");
  }
  CommitmentSet c;
  c.rows = w.rows();
  c.cols = w.cols();
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      c.w.push_back(pedersen(ctx, Scalar::from_int(w(i, j)), blinds.w[i * w.cols() + j]));
    }
  }
  for (std::size_t i = 0; i < w.rows(); ++i) c.u.push_back(pedersen(ctx, Scalar::from_int(dual.u[i]), blinds.u[i]));
  for (std::size_t j = 0; j < w.cols(); ++j) c.v.push_back(pedersen(ctx, Scalar::from_int(dual.v[j]), blinds.v[j]));
  return c;
}

PublicStatement statement_of(const OptimalityCertificate& cert) {
  return {cert.weights.rows(), cert.weights.cols(), cert.weights.sense(), cert.assignment.pairs,
          cert.optimum};
}

std::size_t range_count(std::size_t rows, std::size_t cols) {
  return rows * cols + (rows == cols ? 0 : std::max(rows, cols));
}

std::size_t required_capacity(std::size_t rows, std::size_t cols, int width) {
  return next_pow2(range_count(rows, cols)) * static_cast<std::size_t>(width);
}

OptimalityProof prove_optimality(const GroupContext& ctx, const OptimalityCertificate& cert,
                                 const Blinds& blinds, int width, ProveMode mode) {
  const WeightMatrix& w = cert.weights;
  const auto& u = cert.dual.u;
  const auto& v = cert.dual.v;
  if (mode == ProveMode::kChecked) {
    const Verdict verdict = verify_certificate_clear(cert);
    if (!verdict.accepted) {
      throw Error(ErrorCode::kInvalidCertificate,
                  "certificate fails condition " + std::to_string(verdict.condition) + ": " +
                      verdict.message);
    }
  }
  if (u.size() != w.rows() || v.size() != w.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "dual length does not match the weight matrix");
  }
  const std::size_t rows = w.rows(), cols = w.cols();
  const bool minimize = w.sense() == Sense::kMinimize;

  std::vector<RangeItem> items;
  items.reserve(range_count(rows, cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const __int128 s = static_cast<__int128>(w(i, j)) - u[i] - v[j];
      const Scalar r = blinds.w[i * cols + j] - blinds.u[i] - blinds.v[j];
      items.push_back(minimize ? RangeItem{s, r} : RangeItem{-s, -r});
    }
  }
  if (rows < cols) {
    for (std::size_t j = 0; j < cols; ++j) {
      items.push_back(minimize ? RangeItem{-static_cast<__int128>(v[j]), -blinds.v[j]}
                               : RangeItem{v[j], blinds.v[j]});
    }
  } else if (cols < rows) {
    for (std::size_t i = 0; i < rows; ++i) {
      items.push_back(minimize ? RangeItem{-static_cast<__int128>(u[i]), -blinds.u[i]}
                               : RangeItem{u[i], blinds.u[i]});
    }
  }

  const __int128 limit = static_cast<__int128>(1) << width;
  std::vector<std::uint64_t> values;
  std::vector<Scalar> range_blinds;
  for (const auto& it : items) {
    if (mode == ProveMode::kChecked && (it.value < 0 || it.value >= limit)) {
      throw Error(ErrorCode::kWidthOverflow,
                  "a slack does not fit in " + std::to_string(width) + " bits");
    }
    // A cheating prover can only ever commit to some in-range value.
    values.push_back(static_cast<std::uint64_t>(it.value) &
                     (width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1));
    range_blinds.push_back(it.blind);
  }

  OptimalityProof proof;
  proof.width = width;
  const std::size_t padded = next_pow2(items.size());
  for (std::size_t k = items.size(); k < padded; ++k) {
    const Scalar r = Scalar::random();
    values.push_back(0);
    range_blinds.push_back(r);
    proof.padding.push_back(r * ctx.h);
  }

  Scalar dual_blind;
  for (const auto& r : blinds.u) dual_blind += r;
  for (const auto& r : blinds.v) dual_blind += r;
  proof.dual_blind = dual_blind;
  for (const auto& p : cert.assignment.pairs) {
    if (p.row >= rows || p.col >= cols) {
      throw Error(ErrorCode::kInvalidCertificate, "assignment pair out of range");
    }
    proof.weight_blind += blinds.w[p.row * cols + p.col];
    const Scalar r = blinds.w[p.row * cols + p.col] - blinds.u[p.row] - blinds.v[p.col];
    proof.tight_blinds.push_back(minimize ? r : -r);
  }

  const CommitmentSet commitments = commit_instance(ctx, w, cert.dual, blinds);
  Transcript t("lsap-optimality");
  absorb(t, ctx, commitments, statement_of(cert), proof);
  proof.range = prove_range(ctx, t, values, range_blinds, width);
  return proof;
}

ZkVerdict verify_optimality(const GroupContext& ctx, const CommitmentSet& c,
                            const PublicStatement& s, const OptimalityProof& proof) {
  if (c.rows != s.rows || c.cols != s.cols || c.w.size() != s.rows * s.cols ||
      c.u.size() != s.rows || c.v.size() != s.cols) {
    throw Error(ErrorCode::kParse, "commitment set does not match the statement's shape");
  }
  const std::size_t count = range_count(s.rows, s.cols);
  if (proof.padding.size() != next_pow2(count) - count) {
    throw Error(ErrorCode::kParse, "wrong number of padding commitments");
  }
  if (proof.tight_blinds.size() != s.assignment.size()) {
    throw Error(ErrorCode::kParse, "one tight-edge opening per assignment pair expected");
  }

  // 2: in the clear.
  std::vector<char> row_used(s.rows, 0), col_used(s.cols, 0);
  for (const auto& p : s.assignment) {
    if (p.row >= s.rows || p.col >= s.cols) return reject(2, "pair out of range");
    if (row_used[p.row] || col_used[p.col]) return reject(2, "pair reuses a row or column");
    row_used[p.row] = col_used[p.col] = 1;
  }
  if (s.assignment.size() != std::min(s.rows, s.cols)) return reject(2, "assignment is incomplete");

  const Point opt = Scalar::from_int(s.optimum) * ctx.g;

  // 3: the committed duals sum to the optimum.
  Point dual_sum;
  for (const auto& p : c.u) dual_sum += p;
  for (const auto& p : c.v) dual_sum += p;
  if (dual_sum - opt != proof.dual_blind * ctx.h) return reject(3, "dual sum differs from optimum");

  // 4: every slack (and unbalanced sign) lies in range.
  std::vector<Point> ranges = derived_ranges(c, s.sense);
  ranges.insert(ranges.end(), proof.padding.begin(), proof.padding.end());
  if (required_capacity(s.rows, s.cols, proof.width) > ctx.capacity()) {
    throw Error(ErrorCode::kInstanceTooLarge, "generator capacity exceeded");
  }
  Transcript t("lsap-optimality");
  absorb(t, ctx, c, s, proof);
  if (!verify_range(ctx, t, ranges, proof.range, proof.width)) {
    return reject(4, "range proof for the dual constraints fails");
  }

  // 1: selected edges are tight and weigh the optimum.
  for (std::size_t k = 0; k < s.assignment.size(); ++k) {
    const auto& p = s.assignment[k];
    if (slack_commitment(c, s.sense, p.row, p.col) != proof.tight_blinds[k] * ctx.h) {
      return reject(1, "assignment pair (" + std::to_string(p.row) + "," +
                           std::to_string(p.col) + ") is not tight");
    }
  }
  Point weight_sum;
  for (const auto& p : s.assignment) weight_sum += c.w[p.row * s.cols + p.col];
  if (weight_sum - opt != proof.weight_blind * ctx.h) {
    return reject(1, "assignment weight differs from optimum");
  }
  return {};
}

}  // namespace lsap::zk
