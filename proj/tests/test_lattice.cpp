#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hammock/lattice.hpp"

using hammock::Edge;
using hammock::EdgeSubset;
using hammock::HammockNetwork;
using hammock::LatticePoint;
using hammock::build_hammock;
using hammock::is_cutset;
using hammock::is_pathset;
using hammock::is_x_path;

namespace {

// Literal oracle for the pathset test: searches for a vertex-distinct diagonal
// walk from a source to a terminus using only the edges present in the mask.
bool xpath_reachable(const HammockNetwork& net, std::uint64_t mask) {
  const int nverts = static_cast<int>(net.vertices.size());
  std::vector<std::vector<int>> adj(nverts);
  for (int e = 0; e < static_cast<int>(net.edges.size()); ++e) {
    if (!((mask >> e) & 1)) continue;
    const auto [u, v] = net.edge_endpoints[e];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> is_term(nverts, 0);
  for (int t : net.terminus_ids) is_term[t] = 1;
  std::vector<char> visited(nverts, 0);
  std::function<bool(int)> walk = [&](int v) -> bool {
    if (is_term[v]) return true;
    for (int u : adj[v]) {
      if (visited[u]) continue;
      visited[u] = 1;
      if (walk(u)) return true;
      visited[u] = 0;
    }
    return false;
  };
  for (int s : net.source_ids) {
    std::fill(visited.begin(), visited.end(), 0);
    visited[s] = 1;
    if (walk(s)) return true;
  }
  return false;
}

std::vector<LatticePoint> pts(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<LatticePoint> out;
  for (auto [x, y] : xs) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("single-square networks") {
  const HammockNetwork net = build_hammock(1, 1, 1);
  CHECK(net.edges.size() == 1);
  CHECK(net.edges[0] == Edge{{0, 0}, {1, 1}});
  CHECK(net.sources == pts({{0, 0}}));
  CHECK(net.termini == pts({{1, 1}}));
  CHECK(net.vertices == pts({{0, 0}, {1, 1}}));

  const HammockNetwork other = build_hammock(1, 1, 2);
  CHECK(other.edges[0] == Edge{{0, 1}, {1, 0}});
  CHECK(other.sources == pts({{0, 1}}));
  CHECK(other.termini == pts({{1, 0}}));
}

TEST_CASE("4x4 terminals depend on the kind") {
  const HammockNetwork even = build_hammock(4, 4, 1);
  CHECK(even.edges.size() == 16);
  CHECK(even.sources == pts({{0, 0}, {0, 2}, {0, 4}}));
  CHECK(even.termini == pts({{4, 0}, {4, 2}, {4, 4}}));

  const HammockNetwork odd = build_hammock(4, 4, 2);
  CHECK(odd.sources == pts({{0, 1}, {0, 3}}));
  CHECK(odd.termini == pts({{4, 1}, {4, 3}}));
}

TEST_CASE("7x3 layout") {
  for (int kind : {1, 2}) {
    const HammockNetwork net = build_hammock(7, 3, kind);
    CHECK(net.edges.size() == 21);
    CHECK(net.sources.size() == 2);
    CHECK(net.termini.size() == 2);
  }
}

TEST_CASE("construction rejects bad dimensions") {
  CHECK_THROWS_AS(build_hammock(0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_hammock(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_hammock(-1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_hammock(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_hammock(2, 2, 0), std::invalid_argument);
}

TEST_CASE("construction is deterministic") {
  CHECK(build_hammock(5, 4, 1) == build_hammock(5, 4, 1));
  CHECK(build_hammock(5, 4, 1) != build_hammock(5, 4, 2));
}

TEST_CASE("edges normalize and validate") {
  CHECK(Edge{{1, 1}, {0, 0}} == Edge{{0, 0}, {1, 1}});
  CHECK(Edge{{0, 0}, {1, 1}}.up());
  CHECK_FALSE(Edge{{1, 0}, {0, 1}}.up());
  CHECK(Edge{{3, 2}, {4, 1}}.square() == LatticePoint{3, 1});
  CHECK_THROWS_AS(Edge({0, 0}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Edge({0, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Edge({0, 0}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Edge({0, 0}, {1, 2}), std::invalid_argument);
}

TEST_CASE("structural invariants hold for all small networks") {
  for (int l = 1; l <= 6; ++l) {
    for (int w = 1; w <= 6; ++w) {
      for (int kind : {1, 2}) {
        CAPTURE(l);
        CAPTURE(w);
        CAPTURE(kind);
        const HammockNetwork net = build_hammock(l, w, kind);
        CHECK(static_cast<int>(net.edges.size()) == l * w);
        const int half = w / 2;
        CHECK(static_cast<int>(net.sources.size()) >= half);
        CHECK(static_cast<int>(net.sources.size()) <= half + 1);
        CHECK(static_cast<int>(net.termini.size()) >= half);
        CHECK(static_cast<int>(net.termini.size()) <= half + 1);
        const int par = hammock::kind_parity(kind);
        for (const LatticePoint& p : net.vertices) {
          CHECK(hammock::point_parity(p) == par);
          CHECK((p.x >= 0 && p.x <= l && p.y >= 0 && p.y <= w));
        }
        // canonical edge order: index = square.x * w + square.y
        for (int i = 0; i < static_cast<int>(net.edges.size()); ++i) {
          const LatticePoint sq = net.edges[i].square();
          CHECK(sq.x * w + sq.y == i);
          CHECK(net.edge_index(net.edges[i]) == i);
          CHECK(hammock::point_parity(net.edges[i].a) == par);
        }
        CHECK(net.horizontal_terminals());
      }
    }
  }
}

TEST_CASE("diagonal path recognition") {
  CHECK(is_x_path(pts({{1, 2}, {2, 1}, {3, 0}, {4, 1}, {3, 2}, {4, 3}})));
  CHECK(is_x_path(pts({{0, 0}})));
  CHECK_FALSE(is_x_path({}));
  CHECK_FALSE(is_x_path(pts({{0, 0}, {1, 1}, {0, 0}})));   // repeated point
  CHECK_FALSE(is_x_path(pts({{0, 0}, {0, 1}})));           // vertical step
  CHECK_FALSE(is_x_path(pts({{0, 0}, {2, 2}})));           // long step
  CHECK_FALSE(is_x_path(pts({{0, 0}, {1, 2}})));           // knight step
}

TEST_CASE("pathset and cutset basics") {
  const HammockNetwork unit = build_hammock(1, 1, 1);
  CHECK(is_pathset(unit, EdgeSubset::from_mask(1, 1)));
  CHECK_FALSE(is_pathset(unit, EdgeSubset(1)));
  CHECK(is_cutset(unit, EdgeSubset::from_mask(1, 1)));
  CHECK_FALSE(is_cutset(unit, EdgeSubset(1)));

  const HammockNetwork net = build_hammock(2, 3, 1);
  const int n = 6;
  // the two-edge path through (1,1)
  const int e1 = net.edge_index(Edge{{0, 0}, {1, 1}});
  const int e2 = net.edge_index(Edge{{1, 1}, {2, 0}});
  REQUIRE(e1 >= 0);
  REQUIRE(e2 >= 0);
  CHECK(is_pathset(net, EdgeSubset::from_indices(n, {e1, e2})));
  CHECK_FALSE(is_pathset(net, EdgeSubset::from_indices(n, {e1})));
  // all first-column edges disconnect the sources
  const int c1 = net.edge_index(Edge{{0, 0}, {1, 1}});
  const int c2 = net.edge_index(Edge{{0, 2}, {1, 1}});
  const int c3 = net.edge_index(Edge{{0, 2}, {1, 3}});
  REQUIRE((c1 >= 0 && c2 >= 0 && c3 >= 0));
  CHECK(is_cutset(net, EdgeSubset::from_indices(n, {c1, c2, c3})));
  CHECK_FALSE(is_cutset(net, EdgeSubset::from_indices(n, {c1, c2})));

  for (int l = 1; l <= 4; ++l) {
    for (int w = 1; w <= 4; ++w) {
      for (int kind : {1, 2}) {
        const HammockNetwork h = build_hammock(l, w, kind);
        const int edges = l * w;
        CHECK_FALSE(is_pathset(h, EdgeSubset(edges)));  // no empty pathset
        CHECK(is_pathset(h, EdgeSubset(edges).complement()));  // full set connects
      }
    }
  }

  CHECK_THROWS_AS(is_pathset(net, EdgeSubset(5)), std::invalid_argument);
}

TEST_CASE("cutset is the complement notion of pathset") {
  for (auto [l, w, kind] : {std::tuple{2, 3, 1}, {4, 2, 2}, {4, 4, 1}}) {
    const HammockNetwork net = build_hammock(l, w, kind);
    const int n = l * w;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const EdgeSubset s = EdgeSubset::from_mask(n, mask);
      if (is_cutset(net, s.complement()) == is_pathset(net, s)) {
        CAPTURE(mask);
        REQUIRE(false);
      }
    }
  }
}

TEST_CASE("pathsets are upward closed") {
  // exhaustive over all sub/superset pairs on small networks
  for (auto [l, w, kind] : {std::tuple{2, 2, 1}, {2, 2, 2}, {2, 3, 1}}) {
    const HammockNetwork net = build_hammock(l, w, kind);
    const int n = l * w;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
      const bool whole = is_pathset(net, EdgeSubset::from_mask(n, t));
      for (std::uint64_t s = t; s != 0; s = (s - 1) & t) {
        if (is_pathset(net, EdgeSubset::from_mask(n, s))) CHECK(whole);
      }
    }
  }
  // randomized pairs on a larger one
  const HammockNetwork net = build_hammock(4, 3, 1);
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t t = rng() & 0xFFF;
    const std::uint64_t s = rng() & t;
    if (is_pathset(net, EdgeSubset::from_mask(12, s))) {
      CHECK(is_pathset(net, EdgeSubset::from_mask(12, t)));
    }
  }
}

TEST_CASE("connectivity test agrees with the literal diagonal-walk search") {
  for (int l = 1; l <= 12; ++l) {
    for (int w = 1; l * w <= 12; ++w) {
      for (int kind : {1, 2}) {
        CAPTURE(l);
        CAPTURE(w);
        CAPTURE(kind);
        const HammockNetwork net = build_hammock(l, w, kind);
        const int n = l * w;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          if (is_pathset(net, EdgeSubset::from_mask(n, mask)) != xpath_reachable(net, mask)) {
            CAPTURE(mask);
            REQUIRE(false);
          }
        }
      }
    }
  }
}

TEST_CASE("edge subsets") {
  EdgeSubset s(70);
  s.set(0);
  s.set(69);
  CHECK(s.count() == 2);
  CHECK(s.test(69));
  CHECK_FALSE(s.test(1));
  CHECK(s.indices() == std::vector<int>{0, 69});
  CHECK(s.complement().count() == 68);
  CHECK_FALSE(s.none());
  CHECK(EdgeSubset(70).none());
  CHECK(EdgeSubset::from_indices(70, {0, 69}) == s);
  s.set(69, false);
  CHECK(s.count() == 1);

  CHECK(EdgeSubset::from_mask(6, 0b000011) < EdgeSubset::from_mask(6, 0b000100));
  CHECK(EdgeSubset::from_mask(6, 5).indices() == std::vector<int>{0, 2});
  CHECK_THROWS_AS(EdgeSubset::from_mask(3, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS(EdgeSubset(4).set(4), std::out_of_range);
  CHECK_THROWS_AS(EdgeSubset(4).test(-1), std::out_of_range);
}

TEST_CASE("network JSON round trip") {
  for (auto [l, w, kind] : {std::tuple{1, 1, 1}, {4, 4, 2}, {7, 3, 1}, {2, 5, 2}}) {
    const HammockNetwork net = build_hammock(l, w, kind);
    const auto j = hammock::to_json(net);
    CHECK(hammock::network_from_json(j) == net);
    // serialization is stable
    CHECK(j.dump() == hammock::to_json(net).dump());
  }
}

TEST_CASE("network JSON rejects malformed input") {
  const auto base = hammock::to_json(build_hammock(2, 3, 1));

  auto j = base;
  j.erase("sources");
  CHECK_THROWS_AS(hammock::network_from_json(j), std::invalid_argument);

  j = base;
  j["kind"] = 3;
  CHECK_THROWS_AS(hammock::network_from_json(j), std::invalid_argument);

  j = base;
  j["vertices"][0] = {1, 1};  // duplicate / wrong set
  CHECK_THROWS_AS(hammock::network_from_json(j), std::invalid_argument);

  j = base;
  std::swap(j["edges"][0], j["edges"][1]);  // canonical order violated
  CHECK_THROWS_AS(hammock::network_from_json(j), std::invalid_argument);

  j = base;
  j["edges"][0] = {{0, 0}, {0, 1}};  // not a diagonal
  CHECK_THROWS_AS(hammock::network_from_json(j), std::invalid_argument);

  j = base;
  j["termini"] = nlohmann::ordered_json::array({{2, 0}});  // incomplete side
  CHECK_THROWS_AS(hammock::network_from_json(j), std::invalid_argument);
}
