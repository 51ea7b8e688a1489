#pragma once

#include <string>
#include <vector>

#include "lsap/certificate.hpp"
#include "lsap/zk/range_proof.hpp"

namespace lsap::zk {

inline constexpr int kDefaultWidth = 16;
inline constexpr const char* kDefaultLabel = "lsap-optimality-v1";

struct Blinds {
  std::vector<Scalar> w;  // row-major
  std::vector<Scalar> u;
  std::vector<Scalar> v;

  static Blinds random(std::size_t rows, std::size_t cols);
};

// Pedersen commitments to every witness value: weights row-major, then u,
// then v.
struct CommitmentSet {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Point> w;
  std::vector<Point> u;
  std::vector<Point> v;

  std::size_t size() const { return w.size() + u.size() + v.size(); }
  friend bool operator==(const CommitmentSet&, const CommitmentSet&) = default;
};

CommitmentSet commit_instance(const GroupContext& ctx, const WeightMatrix& w,
                              const DualSolution& dual, const Blinds& blinds);

// Everything the verifier sees in the clear.
struct PublicStatement {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Sense sense = Sense::kMinimize;
  std::vector<Pair> assignment;
  std::int64_t optimum = 0;
  friend bool operator==(const PublicStatement&, const PublicStatement&) = default;
};

PublicStatement statement_of(const OptimalityCertificate& cert);

struct OptimalityProof {
  int width = kDefaultWidth;
  std::vector<Point> padding;        // zero-valued dummies filling the batch
  Scalar dual_blind;                 // opens sum(U) + sum(V) - optimum g
  Scalar weight_blind;               // opens sum of selected W - optimum g
  std::vector<Scalar> tight_blinds;  // opens each selected slack as zero
  RangeProof range;                  // slacks (and unbalanced signs) in [0, 2^width)
  friend bool operator==(const OptimalityProof&, const OptimalityProof&) = default;
};

// Number of range statements before padding: one slack per cell, plus the
// sign of every long-side potential for an unbalanced instance.
std::size_t range_count(std::size_t rows, std::size_t cols);

// Generator capacity needed for a proof over a rows x cols instance.
std::size_t required_capacity(std::size_t rows, std::size_t cols, int width);

enum class ProveMode {
  kChecked,    // refuse certificates that do not verify in the clear
  kUnchecked,  // prove whatever witness is given; lets tests act as a cheating prover
};

OptimalityProof prove_optimality(const GroupContext& ctx, const OptimalityCertificate& cert,
                                 const Blinds& blinds, int width = kDefaultWidth,
                                 ProveMode mode = ProveMode::kChecked);

struct ZkVerdict {
  bool accepted = true;
  int condition = 0;  // same numbering as the clear certificate check
  std::string message;
};

// Throws kParse if the proof's shape does not fit the statement.
ZkVerdict verify_optimality(const GroupContext& ctx, const CommitmentSet& commitments,
                            const PublicStatement& statement, const OptimalityProof& proof);

}  // namespace lsap::zk
