#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsforest/rng.hpp"

namespace tsforest {

enum class BootstrapKind { IID, MBB, NBB, CBB, SBB, ARSB };

std::string bootstrap_name(BootstrapKind kind);
BootstrapKind parse_bootstrap(const std::string& name);

/// How one tree's training sample is produced.
struct ResampleStrategy {
  BootstrapKind kind = BootstrapKind::IID;
  /// Block length (mean block length for SBB); 0 selects the per-run default
  /// ceil(T^(1/3)). Ignored for IID and ARSB.
  std::size_t block_length = 0;
  /// MBB only: append one extra truncated block so the output reaches
  /// exactly n instead of the floored k*l. Off by default.
  bool pad_to_n = false;
};

/// Default block length for a series of length T: ceil(T^(1/3)).
std::size_t default_block_length(std::size_t T);

// All resamplers below emit 1-based indices into {1..n} and are pure given
// their RngStream, making per-tree resampling trivially parallel. Each runs
// in O(n) time and O(n) space.

/// n uniform draws with replacement from {1..n}.
std::vector<std::size_t> iid_indices(std::size_t n, RngStream& rng);

/// Moving block bootstrap: B = n-l+1 overlapping candidate blocks
/// (i, i+1, ..., i+l-1); k = floor(n/l) of them drawn with replacement and
/// concatenated in draw order. Output length is k*l, which is below n when
/// l does not divide n; pad_to_n appends a truncated extra block.
std::vector<std::size_t> mbb_indices(std::size_t n, std::size_t block_length,
                                     RngStream& rng, bool pad_to_n = false);

/// Number of candidate start positions for the moving block bootstrap.
inline std::size_t mbb_candidate_count(std::size_t n, std::size_t block_length) {
  return n - block_length + 1;
}

/// Number of blocks drawn by MBB and NBB: floor(n/l).
inline std::size_t block_draw_count(std::size_t n, std::size_t block_length) {
  return n / block_length;
}

/// Non-overlapping block bootstrap: candidate blocks start at 1, l+1, 2l+1,
/// ...; only the floor(n/l) complete blocks are candidates (a ragged tail is
/// never drawn). k = floor(n/l) drawn with replacement; output length k*l.
std::vector<std::size_t> nbb_indices(std::size_t n, std::size_t block_length,
                                     RngStream& rng);

/// Circular block bootstrap: starts uniform on {1..n}, blocks wrap modulo n,
/// ceil(n/l) blocks drawn and the concatenation truncated to exactly n.
std::vector<std::size_t> cbb_indices(std::size_t n, std::size_t block_length,
                                     RngStream& rng);

/// Stationary block bootstrap: repeat { start uniform on {1..n}; length
/// geometric with mean mean_block_length; emit the circularly wrapped block }
/// until at least n indices were emitted, then truncate to exactly n.
std::vector<std::size_t> sbb_indices(std::size_t n,
                                     std::size_t mean_block_length,
                                     RngStream& rng);

/// Dispatch for the index-based kinds (everything except ARSB).
std::vector<std::size_t> draw_row_indices(const ResampleStrategy& strategy,
                                          std::size_t n, RngStream& rng);

}  // namespace tsforest
