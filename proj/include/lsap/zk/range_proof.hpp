#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lsap/zk/group.hpp"
#include "lsap/zk/transcript.hpp"

namespace lsap::zk {

// Aggregated logarithmic range proof that each committed value lies in
// [0, 2^width). Commitments are value*g + blinding*h.
struct RangeProof {
  Point a_commit;   // A
  Point s_commit;   // S
  Point t1_commit;  // T1
  Point t2_commit;  // T2
  std::vector<Point> l_vec;
  std::vector<Point> r_vec;
  Scalar tau_x;
  Scalar mu;
  Scalar t_hat;
  Scalar a;
  Scalar b;

  std::size_t group_elements() const { return 4 + l_vec.size() + r_vec.size(); }
  static constexpr std::size_t kScalars = 5;
  friend bool operator==(const RangeProof&, const RangeProof&) = default;
};

struct ProofSize {
  std::size_t group_elements = 0;
  std::size_t scalars = 0;
  friend bool operator==(const ProofSize&, const ProofSize&) = default;
};

std::size_t next_pow2(std::size_t x);
bool is_pow2(std::size_t x);

// Size of the transcript for `batch` ranges of `width` bits, with the batch
// padded to a power of two.
ProofSize range_proof_size(std::size_t batch, int width);

// Size for an n x n instance: n^2 slack ranges.
ProofSize proof_size(std::size_t n, int width);

Point pedersen(const GroupContext& ctx, const Scalar& value, const Scalar& blinding);

// values.size() must be a power of two and width a power of two <= 64.
// Throws kWidthOverflow if a value does not fit.
RangeProof prove_range(const GroupContext& ctx, Transcript& t, std::span<const std::uint64_t> values,
                       std::span<const Scalar> blindings, int width);

// False for a valid transcript of a false statement; throws kParse when the
// proof has the wrong shape.
bool verify_range(const GroupContext& ctx, Transcript& t, std::span<const Point> commitments,
                  const RangeProof& proof, int width);

}  // namespace lsap::zk
