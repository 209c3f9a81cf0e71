#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hammock/limits.hpp"

namespace hammock {

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Parity class of a lattice point: 0 if x+y is even, 1 if odd.
inline int point_parity(const LatticePoint& p) {
  return ((p.x + p.y) % 2 + 2) % 2;
}

/// Vertex parity used by networks of the given kind (kind 1 = even, kind 2 = odd).
inline int kind_parity(int kind) { return kind == 1 ? 0 : 1; }

/// A unit diagonal segment (|dx| = |dy| = 1), stored canonically with a.x < b.x.
struct Edge {
  LatticePoint a, b;

  Edge() = default;
  Edge(LatticePoint p, LatticePoint q);  // normalizes endpoint order, validates shape

  /// True for the +1-slope diagonal of its unit square.
  bool up() const { return b.y > a.y; }
  /// Bottom-left corner of the unit square this diagonal spans.
  LatticePoint square() const { return {a.x, up() ? a.y : b.y}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dense bitset over a network's edge indices. Carries the edge count n so
/// subsets of different networks don't silently mix; comparison is numeric on
/// the bit pattern, which gives the deterministic "sorted bitmask" order used
/// by the enumeration routines.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static EdgeSubset from_mask(int n, std::uint64_t mask);
  static EdgeSubset from_indices(int n, const std::vector<int>& indices);

  int size() const { return n_; }
  bool test(int i) const;
  void set(int i, bool value = true);
  int count() const;
  bool none() const;
  EdgeSubset complement() const;  // within the n tracked bits
  std::vector<int> indices() const;

  /// Low 64 bits; the full mask when n <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
  friend std::strong_ordering operator<=>(const EdgeSubset& lhs, const EdgeSubset& rhs);

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A two-terminal diagonal-lattice network on [0,l] x [0,w]. Vertices are all
/// lattice points of one parity inside the box; each unit square contributes
/// its one same-parity diagonal, so there are exactly l*w edges. Terminals sit
/// on two opposite sides: columns x=0/x=l for built hammocks, rows y=0/y=w for
/// their duals.
struct HammockNetwork {
  int length = 0;
  int width = 0;
  int kind = 1;
  std::vector<LatticePoint> vertices;  // ascending (x, y)
  std::vector<Edge> edges;             // canonical order: by unit square, x major then y
  std::vector<LatticePoint> sources;
  std::vector<LatticePoint> termini;
  // Which opposite sides the terminals occupy: columns x=0/x=length (false) or
  // rows y=0/y=width (true). Stored rather than inferred because the 1x1 box
  // admits both readings with identical terminal sets.
  bool row_terminals = false;

  // Lookup structures derived from the fields above; rebuilt by finalize(),
  // never serialized.
  std::vector<std::pair<int, int>> edge_endpoints;  // vertex ids per edge
  std::vector<int> source_ids;
  std::vector<int> terminus_ids;

  int vertex_index(const LatticePoint& p) const;  // -1 if absent
  int edge_index(const Edge& e) const;            // -1 if absent
  void finalize();

  /// True when terminals are the x=0 / x=length columns (built hammocks),
  /// false when they are the y=0 / y=width rows (dual networks). Validates
  /// that the terminal sets really are those complete sides.
  bool horizontal_terminals() const;

  /// Equality on the serialized fields; the orientation flag and the derived
  /// lookup tables are construction metadata and do not participate.
  friend bool operator==(const HammockNetwork& lhs, const HammockNetwork& rhs) {
    return lhs.length == rhs.length && lhs.width == rhs.width && lhs.kind == rhs.kind &&
           lhs.vertices == rhs.vertices && lhs.edges == rhs.edges && lhs.sources == rhs.sources &&
           lhs.termini == rhs.termini;
  }
};

/// Builds the hammock network of the given length, width and kind.
/// Throws std::invalid_argument unless length >= 1, width >= 1, kind in {1,2}.
HammockNetwork build_hammock(int length, int width, int kind);

/// True iff the points form a lattice path with unit-diagonal steps and
/// pairwise-distinct points. A single point counts, an empty sequence does not.
bool is_x_path(const std::vector<LatticePoint>& points);

/// True iff some source is connected to some terminus using only edges in s.
/// Throws std::invalid_argument when s.size() != number of edges.
bool is_pathset(const HammockNetwork& net, const EdgeSubset& s);

/// True iff removing the edges in s disconnects every source from every
/// terminus, i.e. NOT is_pathset(net, complement of s).
bool is_cutset(const HammockNetwork& net, const EdgeSubset& s);

/// Pathset indicator over all 2^n edge subsets, indexed by bitmask.
/// Throws ResourceLimitError when n > max_edges.
std::vector<char> pathset_table(const HammockNetwork& net, int max_edges);

nlohmann::ordered_json to_json(const HammockNetwork& net);
HammockNetwork network_from_json(const nlohmann::ordered_json& j);

}  // namespace hammock
