#include "lsap/mpc/shuffle.hpp"

#include <numeric>

#include "lsap/error.hpp"

namespace lsap::mpc {

std::vector<SharedValue> transpose(std::span<const SharedValue> m, std::size_t n) {
  std::vector<SharedValue> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = m[i * n + j];
  }
  return t;
}

namespace {

// Several independent products in one round.
std::vector<std::vector<SharedValue>> matmul_batch(
    Engine& e, const std::vector<std::pair<std::span<const SharedValue>, std::span<const SharedValue>>>& jobs,
    std::size_t n) {
  std::vector<SharedValue> lhs, rhs;
  lhs.reserve(jobs.size() * n * n * n);
  rhs.reserve(jobs.size() * n * n * n);
  for (const auto& [a, b] : jobs) {
    if (a.size() != n * n || b.size() != n * n) {
      throw Error(ErrorCode::kDimensionMismatch, "matmul: not n x n");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          lhs.push_back(a[i * n + k]);
          rhs.push_back(b[k * n + j]);
        }
      }
    }
  }
  const auto flat = e.dot(lhs, rhs, n);
  std::vector<std::vector<SharedValue>> out(jobs.size());
  for (std::size_t q = 0; q < jobs.size(); ++q) {
    out[q].assign(flat.begin() + static_cast<long>(q * n * n),
                  flat.begin() + static_cast<long>((q + 1) * n * n));
  }
  return out;
}

std::vector<std::int64_t> permutation_matrix(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + perm[i]] = 1;
  return m;
}

}  // namespace

std::vector<SharedValue> secret_matmul(Engine& e, std::span<const SharedValue> a,
                                       std::span<const SharedValue> b, std::size_t n) {
  return matmul_batch(e, {{a, b}}, n).front();
}

ShuffleHandle identity_handle(std::size_t n) {
  ShuffleHandle h;
  h.n = n;
  h.rows.assign(n * n, SharedValue::from_public(0));
  for (std::size_t i = 0; i < n; ++i) h.rows[i * n + i] = SharedValue::from_public(1);
  h.cols = h.rows;
  return h;
}

std::vector<SharedValue> apply_shuffle(Engine& e, std::span<const SharedValue> m,
                                       const ShuffleHandle& h) {
  const std::size_t n = h.n;
  const auto rm = secret_matmul(e, h.rows, m, n);
  const auto ct = transpose(h.cols, n);
  return secret_matmul(e, rm, ct, n);
}

std::vector<SharedValue> unshuffle2d(Engine& e, std::span<const SharedValue> m,
                                     const ShuffleHandle& h) {
  const std::size_t n = h.n;
  const auto rt = transpose(h.rows, n);
  const auto rm = secret_matmul(e, rt, m, n);
  return secret_matmul(e, rm, h.cols, n);
}

Shuffled shuffle2d(Engine& e, std::span<const SharedValue> m, std::size_t n) {
  if (m.size() != n * n) throw Error(ErrorCode::kDimensionMismatch, "shuffle2d expects n x n");
  // Each party's private permutations (row, then column) from its own coins.
  std::array<std::vector<std::int64_t>, kParties> inputs;
  for (int p = 0; p < kParties; ++p) {
    auto& rng = e.party_rng(p);
    for (int which = 0; which < 2; ++which) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = n; i > 1; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::swap(perm[i - 1], perm[pick(rng)]);
      }
      const auto pm = permutation_matrix(perm);
      inputs[p].insert(inputs[p].end(), pm.begin(), pm.end());
    }
  }
  const auto shared = e.share_all(inputs);
  auto part = [&](int p, int which) {
    return std::span<const SharedValue>(shared[p]).subspan(which * n * n, n * n);
  };
  auto step1 = matmul_batch(e, {{part(0, 0), part(1, 0)}, {part(0, 1), part(1, 1)}}, n);
  auto step2 = matmul_batch(e, {{step1[0], part(2, 0)}, {step1[1], part(2, 1)}}, n);
  Shuffled out;
  out.handle.n = n;
  out.handle.rows = std::move(step2[0]);
  out.handle.cols = std::move(step2[1]);
  out.matrix = apply_shuffle(e, m, out.handle);
  return out;
}

}  // namespace lsap::mpc
