#pragma once

#include <vector>

#include "lsap/algorithms/domain.hpp"
#include "lsap/core.hpp"

namespace lsap {

// Square minimisation view of an arbitrary instance: maximisation is negated
// and the short side is zero-padded.
struct Prepared {
  std::size_t n = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool maximize = false;
  std::vector<std::int64_t> costs;  // row-major n x n
};

Prepared prepare(const WeightMatrix& w);

// Maps a square solution back to w: strips padding, shifts the potentials so
// padded duals vanish (unmatched columns then carry v = 0) and undoes the
// negation of a maximisation instance.
SolverResult finish(const Prepared& prep, const WeightMatrix& w,
                    const std::vector<std::size_t>& col_of_row,
                    std::vector<std::int64_t> u, std::vector<std::int64_t> v,
                    const OpStats& stats);

}  // namespace lsap
