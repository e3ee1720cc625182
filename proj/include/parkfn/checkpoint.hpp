#ifndef PARKFN_CHECKPOINT_HPP
#define PARKFN_CHECKPOINT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parkfn/core.hpp"

namespace parkfn {

inline constexpr int kCheckpointFormatVersion = 1;

struct CompletedBlock {
  uint64_t start_rank = 0;
  uint64_t end_rank = 0;    // exclusive
  uint64_t digest = 0;      // fnv1a64 of the block polynomial's canonical JSON

  bool operator==(const CompletedBlock&) const = default;
};

struct CheckpointManifest {
  int n = 0;
  int format_version = kCheckpointFormatVersion;
  std::vector<CompletedBlock> completed_blocks;

  bool operator==(const CheckpointManifest&) const = default;
};

// Paths inside a checkpoint directory.
std::string manifest_path(const std::string& dir);
std::string block_path(const std::string& dir, uint64_t start_rank,
                       uint64_t end_rank);

// Missing manifest yields nullopt; unreadable or wrong-version manifests are
// treated as absent (reported on stderr).
std::optional<CheckpointManifest> load_manifest(const std::string& dir, int n);
void save_manifest(const std::string& dir, const CheckpointManifest& m);

void save_block(const std::string& dir, uint64_t start_rank, uint64_t end_rank,
                const BivariatePolynomial& poly);

// Returns the block polynomial when the file exists and its digest matches;
// otherwise nullopt (corruption is reported on stderr, caller recomputes).
std::optional<BivariatePolynomial> load_block(const std::string& dir,
                                              const CompletedBlock& block);

// Digest of a polynomial's canonical JSON bytes.
uint64_t polynomial_digest(const BivariatePolynomial& poly);

}  // namespace parkfn

#endif  // PARKFN_CHECKPOINT_HPP
