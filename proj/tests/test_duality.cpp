#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "hammock/duality.hpp"
#include "hammock/lattice.hpp"

using hammock::DualCorrespondence;
using hammock::Edge;
using hammock::EdgeSubset;
using hammock::HammockNetwork;
using hammock::LatticePoint;
using hammock::MincutStrategy;
using hammock::build_hammock;
using hammock::complement_edge;
using hammock::dual_network;
using hammock::enumerate_mincuts;
using hammock::enumerate_minpaths;
using hammock::flip_kind;

namespace {

// Reflection across the first bisectrix, re-canonicalized.
HammockNetwork reflected(const HammockNetwork& net) {
  HammockNetwork out;
  out.length = net.width;
  out.width = net.length;
  out.kind = net.kind;  // x+y is invariant under the swap
  for (const LatticePoint& p : net.vertices) out.vertices.push_back({p.y, p.x});
  std::sort(out.vertices.begin(), out.vertices.end());
  for (const Edge& e : net.edges) {
    out.edges.emplace_back(LatticePoint{e.a.y, e.a.x}, LatticePoint{e.b.y, e.b.x});
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const Edge& x, const Edge& y) {
    const LatticePoint sx = x.square(), sy = y.square();
    return std::pair(sx.x, sx.y) < std::pair(sy.x, sy.y);
  });
  for (const LatticePoint& p : net.sources) out.sources.push_back({p.y, p.x});
  std::sort(out.sources.begin(), out.sources.end());
  for (const LatticePoint& p : net.termini) out.termini.push_back({p.y, p.x});
  std::sort(out.termini.begin(), out.termini.end());
  out.finalize();
  return out;
}

// Subset filter over all 2^n subsets: minimal pathsets straight from the
// definition, as an oracle for the path enumerator.
std::vector<EdgeSubset> minpaths_bruteforce(const HammockNetwork& net) {
  const int n = static_cast<int>(net.edges.size());
  const auto table = hammock::pathset_table(net, 20);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<EdgeSubset> out;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (!table[mask]) continue;
    bool minimal = true;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const std::uint64_t bit = m & (~m + 1);
      if (table[mask ^ bit]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(EdgeSubset::from_mask(n, mask));
  }
  return out;
}

std::vector<std::uint64_t> masks_of(const std::vector<EdgeSubset>& subsets) {
  std::vector<std::uint64_t> out;
  for (const auto& s : subsets) out.push_back(s.low_word());
  return out;
}

}  // namespace

TEST_CASE("complement edge swaps the diagonal") {
  CHECK(complement_edge(Edge{{0, 0}, {1, 1}}) == Edge{{0, 1}, {1, 0}});
  CHECK(complement_edge(Edge{{3, 2}, {4, 1}}) == Edge{{3, 1}, {4, 2}});
  for (int l = 1; l <= 6; ++l) {
    for (int w = 1; w <= 6; ++w) {
      for (int kind : {1, 2}) {
        const HammockNetwork net = build_hammock(l, w, kind);
        for (const Edge& e : net.edges) {
          const Edge c = complement_edge(e);
          CHECK(complement_edge(c) == e);
          CHECK(c.square() == e.square());
          CHECK(hammock::point_parity(c.a) != hammock::point_parity(e.a));
        }
      }
    }
  }
}

TEST_CASE("dual of the unit square") {
  const DualCorrespondence dc = dual_network(build_hammock(1, 1, 1));
  CHECK(dc.dual.kind == 2);
  CHECK(dc.dual.edges.size() == 1);
  CHECK(dc.dual.edges[0] == Edge{{0, 1}, {1, 0}});
  CHECK(dc.dual.sources == std::vector<LatticePoint>{{1, 0}});
  CHECK(dc.dual.termini == std::vector<LatticePoint>{{0, 1}});
  CHECK(dc.edge_map == std::vector<int>{0});
}

TEST_CASE("dual terminals sit on the bottom and top rows") {
  for (int kind : {1, 2}) {
    const DualCorrespondence dc = dual_network(build_hammock(7, 3, kind));
    CHECK(dc.dual.sources.size() == 4);
    CHECK(dc.dual.termini.size() == 4);
    for (const LatticePoint& p : dc.dual.sources) CHECK(p.y == 0);
    for (const LatticePoint& p : dc.dual.termini) CHECK(p.y == 3);
    CHECK_FALSE(dc.dual.horizontal_terminals());
  }
}

TEST_CASE("dualizing twice restores the network") {
  for (int l = 1; l <= 4; ++l) {
    for (int w = 1; w <= 4; ++w) {
      for (int kind : {1, 2}) {
        const HammockNetwork net = build_hammock(l, w, kind);
        CHECK(dual_network(dual_network(net).dual).dual == net);
      }
    }
  }
}

TEST_CASE("edge map is the square-preserving bijection") {
  for (auto [l, w, kind] : {std::tuple{2, 3, 1}, {4, 4, 2}, {5, 2, 1}}) {
    const HammockNetwork net = build_hammock(l, w, kind);
    const DualCorrespondence dc = dual_network(net);
    for (int i = 0; i < static_cast<int>(net.edges.size()); ++i) {
      CHECK(dc.dual.edges[dc.edge_map[i]] == complement_edge(net.edges[i]));
      // complements stay in the same unit square, so the map is the identity
      CHECK(dc.edge_map[i] == i);
    }
  }
}

TEST_CASE("dual is the reflected opposite-kind network") {
  for (int l = 1; l <= 4; ++l) {
    for (int w = 1; w <= 4; ++w) {
      for (int kind : {1, 2}) {
        CAPTURE(l);
        CAPTURE(w);
        CAPTURE(kind);
        const DualCorrespondence dc = dual_network(build_hammock(l, w, kind));
        CHECK(reflected(dc.dual) == build_hammock(w, l, flip_kind(kind)));
      }
    }
  }
}

TEST_CASE("dual network JSON round trip keeps row terminals") {
  const HammockNetwork dual = dual_network(build_hammock(3, 4, 1)).dual;
  CHECK(hammock::network_from_json(hammock::to_json(dual)) == dual);
}

TEST_CASE("minimal pathsets of the reference networks") {
  const auto unit = enumerate_minpaths(build_hammock(1, 1, 1));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].low_word() == 1);

  const auto paths = enumerate_minpaths(build_hammock(2, 3, 1));
  CHECK(masks_of(paths) == std::vector<std::uint64_t>{9, 10, 17, 18, 36});
  for (const auto& p : paths) CHECK(p.count() == 2);

  const auto longer = enumerate_minpaths(build_hammock(3, 2, 1));
  REQUIRE(longer.size() == 4);
  for (const auto& p : longer) CHECK(p.count() == 3);
}

TEST_CASE("path enumeration matches the subset filter and the definition") {
  for (int l = 1; l <= 12; ++l) {
    for (int w = 1; l * w <= 12; ++w) {
      for (int kind : {1, 2}) {
        CAPTURE(l);
        CAPTURE(w);
        CAPTURE(kind);
        const HammockNetwork net = build_hammock(l, w, kind);
        const auto paths = enumerate_minpaths(net);
        CHECK(paths == minpaths_bruteforce(net));
        CHECK(std::is_sorted(paths.begin(), paths.end()));
        for (const auto& p : paths) {
          CHECK(hammock::is_pathset(net, p));
          for (int e : p.indices()) {
            EdgeSubset q = p;
            q.set(e, false);
            CHECK_FALSE(hammock::is_pathset(net, q));
          }
        }
      }
    }
  }
}

TEST_CASE("minimal cutsets of the reference networks") {
  const auto unit = enumerate_mincuts(build_hammock(1, 1, 1));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].low_word() == 1);

  for (MincutStrategy strategy : {MincutStrategy::ViaDual, MincutStrategy::Direct}) {
    const auto cuts = enumerate_mincuts(build_hammock(2, 3, 1), strategy);
    CHECK(masks_of(cuts) == std::vector<std::uint64_t>{7, 28, 35, 56});
    for (const auto& c : cuts) CHECK(c.count() == 3);
  }
}

TEST_CASE("cut enumeration strategies agree and satisfy the definition") {
  for (int l = 1; l <= 12; ++l) {
    for (int w = 1; l * w <= 12; ++w) {
      for (int kind : {1, 2}) {
        CAPTURE(l);
        CAPTURE(w);
        CAPTURE(kind);
        const HammockNetwork net = build_hammock(l, w, kind);
        const auto cuts = enumerate_mincuts(net, MincutStrategy::ViaDual);
        CHECK(cuts == enumerate_mincuts(net, MincutStrategy::Direct));
        for (const auto& c : cuts) {
          CHECK(hammock::is_cutset(net, c));
          for (int e : c.indices()) {
            EdgeSubset q = c;
            q.set(e, false);
            CHECK_FALSE(hammock::is_cutset(net, q));
          }
        }
      }
    }
  }
}

TEST_CASE("direct cut enumeration is gated by the ceiling") {
  CHECK_THROWS_AS(enumerate_mincuts(build_hammock(5, 5, 1), MincutStrategy::Direct),
                  hammock::ResourceLimitError);
  // the dual route has no subset scan and still works
  CHECK(enumerate_mincuts(build_hammock(5, 5, 1), MincutStrategy::ViaDual).size() > 0);
}

TEST_CASE("cut/path duality check") {
  const auto r = hammock::verify_theorem1(2, 3, 1);
  CHECK(r.pass);
  CHECK(r.counts["mincuts"] == 4);
  CHECK(r.counts["dual_minpaths"] == 4);
  CHECK(r.counts["mincuts_by_size"]["3"] == 4);
  CHECK(r.counts["minpaths"] == 5);
  CHECK(r.witness.is_null());
  CHECK(r.to_json()["check"] == "theorem1");

  CHECK(hammock::verify_theorem1(1, 1, 1).pass);
  CHECK(hammock::verify_theorem1(4, 4, 1).pass);
  CHECK(hammock::verify_theorem1(4, 4, 2).pass);
}

TEST_CASE("pathset/cutset complement duality check") {
  const auto r = hammock::verify_corollary1(2, 3, 1);
  CHECK(r.pass);
  CHECK(r.counts["subsets"] == 64);
  CHECK(r.counts["pathsets"] == 43);  // h(1/2) = 43/64
  CHECK(r.witness.is_null());

  const auto unit = hammock::verify_corollary1(1, 1, 1);
  CHECK(unit.pass);
  CHECK(unit.counts["subsets"] == 2);

  const auto other = hammock::verify_corollary1(2, 2, 2);
  CHECK(other.pass);
  CHECK(other.counts["subsets"] == 16);
  CHECK(other.counts["pathsets"] == 7);  // h(1/2) = 7/16

  CHECK_THROWS_AS(hammock::verify_corollary1(5, 5, 1), hammock::ResourceLimitError);
}
