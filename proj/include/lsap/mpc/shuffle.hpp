#pragma once

#include <vector>

#include "lsap/mpc/engine.hpp"

namespace lsap::mpc {

// Secret n x n permutation matrices R (rows) and C (columns), row-major.
struct ShuffleHandle {
  std::size_t n = 0;
  std::vector<SharedValue> rows;
  std::vector<SharedValue> cols;
};

struct Shuffled {
  std::vector<SharedValue> matrix;  // R * M * C^T
  ShuffleHandle handle;
};

// A * B for secret n x n matrices; one round.
std::vector<SharedValue> secret_matmul(Engine& e, std::span<const SharedValue> a,
                                       std::span<const SharedValue> b, std::size_t n);
std::vector<SharedValue> transpose(std::span<const SharedValue> m, std::size_t n);

// Every party picks its own Fisher-Yates permutations and inputs them as
// permutation matrices; the product over the three parties is known to
// nobody. Then M' = R M C^T.
Shuffled shuffle2d(Engine& e, std::span<const SharedValue> m, std::size_t n);
// M' = R M C^T for a given handle.
std::vector<SharedValue> apply_shuffle(Engine& e, std::span<const SharedValue> m,
                                       const ShuffleHandle& h);
// M = R^T M' C.
std::vector<SharedValue> unshuffle2d(Engine& e, std::span<const SharedValue> m,
                                     const ShuffleHandle& h);
ShuffleHandle identity_handle(std::size_t n);

}  // namespace lsap::mpc
