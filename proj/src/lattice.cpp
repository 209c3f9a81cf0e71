#include "hammock/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hammock {

namespace {

std::tuple<int, int, int> canonical_edge_key(const Edge& e) {
  const LatticePoint sq = e.square();
  return {sq.x, sq.y, e.up() ? 0 : 1};
}

std::string dims(int l, int w, int kind) {
  return "(" + std::to_string(l) + "," + std::to_string(w) + "," + std::to_string(kind) + ")";
}

}  // namespace

Edge::Edge(LatticePoint p, LatticePoint q) {
  if (q.x < p.x) std::swap(p, q);
  const int dx = q.x - p.x;
  const int dy = q.y - p.y;
  if (dx != 1 || (dy != 1 && dy != -1)) {
    throw std::invalid_argument("edge endpoints must span a unit diagonal");
  }
  a = p;
  b = q;
}

EdgeSubset EdgeSubset::from_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > 64) throw std::invalid_argument("from_mask needs 0 <= n <= 64");
  if (n < 64 && (mask >> n) != 0) {
    throw std::invalid_argument("mask has bits beyond the edge count");
  }
  EdgeSubset s(n);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

EdgeSubset EdgeSubset::from_indices(int n, const std::vector<int>& indices) {
  EdgeSubset s(n);
  for (int i : indices) s.set(i);
  return s;
}

bool EdgeSubset::test(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("edge index out of range");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void EdgeSubset::set(int i, bool value) {
  if (i < 0 || i >= n_) throw std::out_of_range("edge index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

int EdgeSubset::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool EdgeSubset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

EdgeSubset EdgeSubset::complement() const {
  EdgeSubset s(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
  if (n_ % 64 != 0 && !s.words_.empty()) {
    s.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
  return s;
}

std::vector<int> EdgeSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

std::strong_ordering operator<=>(const EdgeSubset& lhs, const EdgeSubset& rhs) {
  if (auto c = lhs.n_ <=> rhs.n_; c != 0) return c;
  for (auto i = lhs.words_.size(); i-- > 0;) {
    if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

int HammockNetwork::vertex_index(const LatticePoint& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) return -1;
  return static_cast<int>(it - vertices.begin());
}

int HammockNetwork::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e, [](const Edge& x, const Edge& y) {
    return canonical_edge_key(x) < canonical_edge_key(y);
  });
  if (it == edges.end() || *it != e) return -1;
  return static_cast<int>(it - edges.begin());
}

void HammockNetwork::finalize() {
  edge_endpoints.clear();
  edge_endpoints.reserve(edges.size());
  for (const Edge& e : edges) {
    const int u = vertex_index(e.a);
    const int v = vertex_index(e.b);
    if (u < 0 || v < 0) throw std::invalid_argument("edge endpoint is not a network vertex");
    edge_endpoints.emplace_back(u, v);
  }
  auto ids = [&](const std::vector<LatticePoint>& pts, const char* what) {
    std::vector<int> out;
    out.reserve(pts.size());
    for (const LatticePoint& p : pts) {
      const int id = vertex_index(p);
      if (id < 0) throw std::invalid_argument(std::string(what) + " is not a network vertex");
      out.push_back(id);
    }
    return out;
  };
  source_ids = ids(sources, "source");
  terminus_ids = ids(termini, "terminus");
}

bool HammockNetwork::horizontal_terminals() const {
  if (sources.empty() || termini.empty()) {
    throw std::invalid_argument("network has no terminals");
  }
  auto side = [&](auto get, int at) {
    std::vector<LatticePoint> out;
    for (const LatticePoint& p : vertices) {
      if (get(p) == at) out.push_back(p);
    }
    return out;  // sorted, since vertices are
  };
  const bool complete =
      row_terminals
          ? sources == side([](const LatticePoint& p) { return p.y; }, 0) &&
                termini == side([](const LatticePoint& p) { return p.y; }, width)
          : sources == side([](const LatticePoint& p) { return p.x; }, 0) &&
                termini == side([](const LatticePoint& p) { return p.x; }, length);
  if (!complete) {
    throw std::invalid_argument(std::string("terminals are not the complete ") +
                                (row_terminals ? "y=0 / y=width rows" : "x=0 / x=length columns"));
  }
  return !row_terminals;
}

HammockNetwork build_hammock(int length, int width, int kind) {
  if (length < 1 || width < 1) {
    throw std::invalid_argument("hammock dimensions must satisfy length >= 1 and width >= 1, got " +
                                dims(length, width, kind));
  }
  if (kind != 1 && kind != 2) {
    throw std::invalid_argument("hammock kind must be 1 or 2, got " + std::to_string(kind));
  }
  const int par = kind_parity(kind);
  HammockNetwork net;
  net.length = length;
  net.width = width;
  net.kind = kind;
  for (int x = 0; x <= length; ++x) {
    for (int y = 0; y <= width; ++y) {
      if ((x + y) % 2 == par) net.vertices.push_back({x, y});
    }
  }
  // One same-parity diagonal per unit square; x-major square order is the
  // canonical edge order, so edge index = x*width + y.
  for (int x = 0; x < length; ++x) {
    for (int y = 0; y < width; ++y) {
      if ((x + y) % 2 == par) {
        net.edges.emplace_back(LatticePoint{x, y}, LatticePoint{x + 1, y + 1});
      } else {
        net.edges.emplace_back(LatticePoint{x, y + 1}, LatticePoint{x + 1, y});
      }
    }
  }
  for (int y = 0; y <= width; ++y) {
    if (y % 2 == par) net.sources.push_back({0, y});
  }
  for (int y = 0; y <= width; ++y) {
    if ((length + y) % 2 == par) net.termini.push_back({length, y});
  }
  net.finalize();
  return net;
}

bool is_x_path(const std::vector<LatticePoint>& points) {
  if (points.empty()) return false;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const int dx = points[i].x - points[i - 1].x;
    const int dy = points[i].y - points[i - 1].y;
    if ((dx != 1 && dx != -1) || (dy != 1 && dy != -1)) return false;
  }
  std::vector<LatticePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

int uf_find(std::vector<std::int16_t>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];  // path halving
    v = parent[v];
  }
  return v;
}

}  // namespace

bool is_pathset(const HammockNetwork& net, const EdgeSubset& s) {
  if (s.size() != static_cast<int>(net.edges.size())) {
    throw std::invalid_argument("edge subset size does not match the network");
  }
  const int nverts = static_cast<int>(net.vertices.size());
  std::vector<std::int16_t> parent(nverts);
  std::iota(parent.begin(), parent.end(), std::int16_t{0});
  // Collapse all sources into one representative, likewise all termini.
  const int sroot = net.source_ids.front();
  for (int id : net.source_ids) parent[id] = static_cast<std::int16_t>(sroot);
  const int troot = net.terminus_ids.front();
  for (int id : net.terminus_ids) parent[id] = static_cast<std::int16_t>(troot);
  for (int i = 0; i < s.size(); ++i) {
    if (!s.test(i)) continue;
    const auto [u, v] = net.edge_endpoints[i];
    const int ru = uf_find(parent, u);
    const int rv = uf_find(parent, v);
    if (ru != rv) parent[ru] = static_cast<std::int16_t>(rv);
  }
  return uf_find(parent, sroot) == uf_find(parent, troot);
}

bool is_cutset(const HammockNetwork& net, const EdgeSubset& s) {
  return !is_pathset(net, s.complement());
}

std::vector<char> pathset_table(const HammockNetwork& net, int max_edges) {
  const int n = static_cast<int>(net.edges.size());
  if (n > max_edges) {
    throw ResourceLimitError("pathset table over " + std::to_string(n) +
                             " edges exceeds the ceiling of " + std::to_string(max_edges));
  }
  if (n > 30) {
    throw ResourceLimitError("pathset table over " + std::to_string(n) +
                             " edges is not supported (2^n entries)");
  }
  const int nverts = static_cast<int>(net.vertices.size());
  std::vector<std::int16_t> base(nverts);
  std::iota(base.begin(), base.end(), std::int16_t{0});
  const int sroot = net.source_ids.front();
  for (int id : net.source_ids) base[id] = static_cast<std::int16_t>(sroot);
  const int troot = net.terminus_ids.front();
  for (int id : net.terminus_ids) base[id] = static_cast<std::int16_t>(troot);

  std::vector<char> table(std::size_t{1} << n, 0);
  std::vector<std::int16_t> parent(nverts);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    if (mask != 0 && table[mask & (mask - 1)]) {
      table[mask] = 1;  // supersets of pathsets are pathsets
      continue;
    }
    std::copy(base.begin(), base.end(), parent.begin());
    std::uint64_t m = mask;
    while (m != 0) {
      const int e = std::countr_zero(m);
      m &= m - 1;
      const auto [u, v] = net.edge_endpoints[e];
      const int ru = uf_find(parent, u);
      const int rv = uf_find(parent, v);
      if (ru != rv) parent[ru] = static_cast<std::int16_t>(rv);
    }
    table[mask] = uf_find(parent, sroot) == uf_find(parent, troot) ? 1 : 0;
  }
  return table;
}

namespace {

nlohmann::ordered_json point_to_json(const LatticePoint& p) {
  return nlohmann::ordered_json::array({p.x, p.y});
}

LatticePoint point_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw std::invalid_argument("lattice point must be a two-int array");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

nlohmann::ordered_json to_json(const HammockNetwork& net) {
  nlohmann::ordered_json j;
  j["length"] = net.length;
  j["width"] = net.width;
  j["kind"] = net.kind;
  auto points = [](const std::vector<LatticePoint>& pts) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const LatticePoint& p : pts) arr.push_back(point_to_json(p));
    return arr;
  };
  j["vertices"] = points(net.vertices);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : net.edges) {
    edges.push_back(nlohmann::ordered_json::array({point_to_json(e.a), point_to_json(e.b)}));
  }
  j["edges"] = edges;
  j["sources"] = points(net.sources);
  j["termini"] = points(net.termini);
  return j;
}

HammockNetwork network_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("network JSON must be an object");
  for (const char* key : {"length", "width", "kind", "vertices", "edges", "sources", "termini"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("network JSON is missing key '") + key + "'");
    }
  }
  HammockNetwork net;
  net.length = j.at("length").get<int>();
  net.width = j.at("width").get<int>();
  net.kind = j.at("kind").get<int>();
  if (net.length < 1 || net.width < 1 || (net.kind != 1 && net.kind != 2)) {
    throw std::invalid_argument("network JSON has invalid dimensions or kind");
  }
  const int par = kind_parity(net.kind);

  for (const auto& p : j.at("vertices")) net.vertices.push_back(point_from_json(p));
  std::vector<LatticePoint> expected;
  for (int x = 0; x <= net.length; ++x) {
    for (int y = 0; y <= net.width; ++y) {
      if ((x + y) % 2 == par) expected.push_back({x, y});
    }
  }
  if (net.vertices != expected) {
    throw std::invalid_argument("vertices must be the sorted parity points of the box");
  }

  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("edge must be a two-point array");
    }
    net.edges.emplace_back(point_from_json(e[0]), point_from_json(e[1]));
  }
  if (static_cast<int>(net.edges.size()) != net.length * net.width) {
    throw std::invalid_argument("network must have exactly length*width edges");
  }
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const Edge& e = net.edges[i];
    const LatticePoint sq = e.square();
    if (sq.x < 0 || sq.x >= net.length || sq.y < 0 || sq.y >= net.width) {
      throw std::invalid_argument("edge lies outside the box");
    }
    if (point_parity(e.a) != par) {
      throw std::invalid_argument("edge parity does not match the network kind");
    }
    if (i > 0 && !(canonical_edge_key(net.edges[i - 1]) < canonical_edge_key(e))) {
      throw std::invalid_argument("edges must be in canonical order");
    }
  }

  for (const auto& p : j.at("sources")) net.sources.push_back(point_from_json(p));
  for (const auto& p : j.at("termini")) net.termini.push_back(point_from_json(p));
  auto side_points = [&](auto get, int at) {
    std::vector<LatticePoint> out;
    for (const LatticePoint& p : expected) {
      if (get(p) == at) out.push_back(p);
    }
    return out;
  };
  auto x_of = [](const LatticePoint& p) { return p.x; };
  auto y_of = [](const LatticePoint& p) { return p.y; };
  const bool horizontal = net.sources == side_points(x_of, 0) &&
                          net.termini == side_points(x_of, net.length);
  const bool vertical = net.sources == side_points(y_of, 0) &&
                        net.termini == side_points(y_of, net.width);
  if (!horizontal && !vertical) {
    throw std::invalid_argument("terminals must be complete opposite sides of the box");
  }
  // When the 1x1 box makes both readings true, the column reading wins, as in
  // build_hammock.
  net.row_terminals = !horizontal;
  net.finalize();
  return net;
}

}  // namespace hammock
