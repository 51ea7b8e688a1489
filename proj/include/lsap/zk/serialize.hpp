#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsap/zk/optimality.hpp"

namespace lsap::zk {

// Everything needed to check a proof, apart from the group context.
struct ProofBundle {
  std::string label = kDefaultLabel;
  CommitmentSet commitments;
  PublicStatement statement;
  OptimalityProof proof;
  friend bool operator==(const ProofBundle&, const ProofBundle&) = default;
};

// Binary layout: the magic "LSAPZKP1", then three sections, each a u64
// little-endian byte length followed by its body:
//   commitments: label, rows, cols, then rows*cols + rows + cols points
//   public:      sense, width, pairs, optimum
//   transcript:  padding points, openings, range proof
// Points are 32-byte compressed encodings, scalars 32-byte canonical.
std::vector<std::uint8_t> serialize(const ProofBundle& bundle);

// Throws kParse on any malformed input (bad magic, truncation, trailing
// bytes, invalid encodings).
ProofBundle deserialize(const std::vector<std::uint8_t>& bytes);

// Human-readable summary of counts, with the size-law check.
std::string manifest(const ProofBundle& bundle);

// Full prover pipeline for one certificate: context, blinds, commitments and
// proof.
ProofBundle prove_bundle(const OptimalityCertificate& cert, int width = kDefaultWidth,
                         const std::string& label = kDefaultLabel);
ZkVerdict verify_bundle(const ProofBundle& bundle);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace lsap::zk
