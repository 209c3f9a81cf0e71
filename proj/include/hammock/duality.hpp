#pragma once

#include <vector>

#include "hammock/lattice.hpp"
#include "hammock/limits.hpp"
#include "hammock/report.hpp"

namespace hammock {

inline int flip_kind(int kind) { return kind == 1 ? 2 : 1; }

/// The opposite diagonal of e's unit square. Flips parity; applying it twice
/// gives e back.
Edge complement_edge(const Edge& e);

/// A network, its dual, and the edge-index bijection e -> complement of e.
/// The dual lives on the same box with the opposite-parity vertices, its edges
/// are the complements of the base edges (in canonical order), and its
/// terminals sit on the sides adjacent to the base terminals: a column-terminal
/// network gets a dual with sources on row y=0 and termini on row y=width, and
/// vice versa (so that dualizing twice restores the original).
struct DualCorrespondence {
  HammockNetwork base;
  HammockNetwork dual;
  std::vector<int> edge_map;  // edge_map[i] = dual index of complement of base edge i
};

DualCorrespondence dual_network(const HammockNetwork& net);

/// All minimal pathsets: edge sets of source-terminus paths with no interior
/// terminal vertex. Deterministic ascending-bitmask order, no duplicates.
std::vector<EdgeSubset> enumerate_minpaths(const HammockNetwork& net);

enum class MincutStrategy {
  ViaDual,  // map the dual's minimal pathsets through the complement bijection
  Direct,   // filter all 2^n subsets; gated by limits.mincut_direct_max_edges
};

/// All minimal cutsets, ascending-bitmask order.
std::vector<EdgeSubset> enumerate_mincuts(const HammockNetwork& net,
                                          MincutStrategy strategy = MincutStrategy::ViaDual,
                                          const Limits& limits = {});

/// Checks, in both directions, that directly enumerated minimal cutsets equal
/// the complement-mapped minimal pathsets of the dual (and the mirrored
/// statement with the roles of the network and its dual swapped), including
/// per-size counts.
VerificationReport verify_theorem1(int length, int width, int kind, const Limits& limits = {});

/// Exhaustively checks over all 2^n subsets that s is a pathset iff its
/// complement-mapped subset is a cutset of the dual, and that s is a cutset
/// iff the mapped subset is a pathset of the dual.
VerificationReport verify_corollary1(int length, int width, int kind, const Limits& limits = {});

}  // namespace hammock
