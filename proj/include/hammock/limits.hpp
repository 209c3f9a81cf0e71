#pragma once

#include <stdexcept>
#include <string>

namespace hammock {

/// Thrown when a requested computation exceeds a configured ceiling
/// (subset scans that would be too large, frontier sweeps that are too wide).
/// The CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Ceilings for the exponential-cost operations. All are soft limits guarding
/// runtime, not correctness; raise them to trade time for range.
struct Limits {
  /// Max edge count for the 2^n subset-scan reliability engine.
  int brute_max_edges = 24;
  /// Max network width for the column-sweep reliability engine.
  int frontier_max_width = 8;
  /// Max edge count for exhaustive all-subsets verification sweeps.
  int exhaustive_max_edges = 16;
  /// Max edge count for direct (subset-filter) minimal-cutset enumeration.
  int mincut_direct_max_edges = 20;
};

}  // namespace hammock
