#include "hammock/duality.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace hammock {

Edge complement_edge(const Edge& e) {
  // Swap the y coordinates: the up-diagonal of a square becomes its
  // down-diagonal and vice versa.
  return Edge{{e.a.x, e.b.y}, {e.b.x, e.a.y}};
}

DualCorrespondence dual_network(const HammockNetwork& net) {
  const bool horizontal = net.horizontal_terminals();
  HammockNetwork d;
  d.length = net.length;
  d.width = net.width;
  d.kind = flip_kind(net.kind);
  d.row_terminals = horizontal;
  const int par = kind_parity(d.kind);
  for (int x = 0; x <= d.length; ++x) {
    for (int y = 0; y <= d.width; ++y) {
      if ((x + y) % 2 == par) d.vertices.push_back({x, y});
    }
  }
  for (int x = 0; x < d.length; ++x) {
    for (int y = 0; y < d.width; ++y) {
      if ((x + y) % 2 == par) {
        d.edges.emplace_back(LatticePoint{x, y}, LatticePoint{x + 1, y + 1});
      } else {
        d.edges.emplace_back(LatticePoint{x, y + 1}, LatticePoint{x + 1, y});
      }
    }
  }
  if (horizontal) {
    for (int x = 0; x <= d.length; ++x) {
      if (x % 2 == par) d.sources.push_back({x, 0});
    }
    for (int x = 0; x <= d.length; ++x) {
      if ((x + d.width) % 2 == par) d.termini.push_back({x, d.width});
    }
  } else {
    for (int y = 0; y <= d.width; ++y) {
      if (y % 2 == par) d.sources.push_back({0, y});
    }
    for (int y = 0; y <= d.width; ++y) {
      if ((d.length + y) % 2 == par) d.termini.push_back({d.length, y});
    }
  }
  d.finalize();

  DualCorrespondence dc;
  dc.edge_map.reserve(net.edges.size());
  for (const Edge& e : net.edges) {
    const int j = d.edge_index(complement_edge(e));
    if (j < 0) throw std::logic_error("complement edge missing from dual");
    dc.edge_map.push_back(j);
  }
  dc.base = net;
  dc.dual = std::move(d);
  return dc;
}

std::vector<EdgeSubset> enumerate_minpaths(const HammockNetwork& net) {
  const int n = static_cast<int>(net.edges.size());
  const int nverts = static_cast<int>(net.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adj(nverts);  // (edge, other vertex)
  for (int i = 0; i < n; ++i) {
    const auto [u, v] = net.edge_endpoints[i];
    adj[u].emplace_back(i, v);
    adj[v].emplace_back(i, u);
  }
  std::vector<char> is_source(nverts, 0), is_terminus(nverts, 0);
  for (int id : net.source_ids) is_source[id] = 1;
  for (int id : net.terminus_ids) is_terminus[id] = 1;

  std::vector<EdgeSubset> result;
  std::vector<char> visited(nverts, 0);
  EdgeSubset current(n);
  // A minimal pathset is exactly a simple source-terminus path whose interior
  // avoids terminals: entering another source leaves a shorter suffix path,
  // and continuing past a terminus leaves a shorter prefix, so both prune.
  std::function<void(int)> dfs = [&](int v) {
    for (const auto& [e, u] : adj[v]) {
      if (visited[u]) continue;
      if (is_terminus[u]) {
        current.set(e);
        result.push_back(current);
        current.set(e, false);
        continue;
      }
      if (is_source[u]) continue;
      visited[u] = 1;
      current.set(e);
      dfs(u);
      current.set(e, false);
      visited[u] = 0;
    }
  };
  for (int s : net.source_ids) {
    visited[s] = 1;
    dfs(s);
    visited[s] = 0;
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

namespace {

std::vector<EdgeSubset> mincuts_direct(const HammockNetwork& net, const Limits& limits) {
  const int n = static_cast<int>(net.edges.size());
  if (n > limits.mincut_direct_max_edges) {
    throw ResourceLimitError("direct mincut enumeration over " + std::to_string(n) +
                             " edges exceeds the ceiling of " +
                             std::to_string(limits.mincut_direct_max_edges));
  }
  const std::vector<char> table = pathset_table(net, limits.mincut_direct_max_edges);
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<EdgeSubset> result;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const std::uint64_t rest = full ^ mask;
    if (table[rest]) continue;  // complement still connects: not a cutset
    bool minimal = true;
    std::uint64_t m = mask;
    while (m != 0) {
      const std::uint64_t bit = m & (~m + 1);
      m ^= bit;
      if (!table[rest | bit]) {  // dropping this edge leaves a cutset
        minimal = false;
        break;
      }
    }
    if (minimal) result.push_back(EdgeSubset::from_mask(n, mask));
  }
  return result;
}

std::vector<EdgeSubset> map_subsets(const std::vector<EdgeSubset>& subsets,
                                    const std::vector<int>& index_map, int n_out) {
  std::vector<EdgeSubset> out;
  out.reserve(subsets.size());
  for (const EdgeSubset& s : subsets) {
    EdgeSubset t(n_out);
    for (int i : s.indices()) t.set(index_map[i]);
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> invert_map(const std::vector<int>& m) {
  std::vector<int> inv(m.size(), -1);
  for (std::size_t i = 0; i < m.size(); ++i) inv[m[i]] = static_cast<int>(i);
  return inv;
}

nlohmann::ordered_json size_histogram(const std::vector<EdgeSubset>& subsets) {
  std::map<int, long long> hist;
  for (const EdgeSubset& s : subsets) ++hist[s.count()];
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [size, count] : hist) j[std::to_string(size)] = count;
  return j;
}

nlohmann::ordered_json subset_witness(const EdgeSubset& s, const std::string& note) {
  nlohmann::ordered_json j;
  j["note"] = note;
  j["edges"] = s.indices();
  return j;
}

// First element of the symmetric difference of two ascending subset lists.
std::optional<EdgeSubset> first_difference(const std::vector<EdgeSubset>& a,
                                           const std::vector<EdgeSubset>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) return a[i];
    if (i == a.size() || b[j] < a[i]) return b[j];
    ++i, ++j;
  }
  return std::nullopt;
}

}  // namespace

std::vector<EdgeSubset> enumerate_mincuts(const HammockNetwork& net, MincutStrategy strategy,
                                          const Limits& limits) {
  if (strategy == MincutStrategy::Direct) return mincuts_direct(net, limits);
  const DualCorrespondence dc = dual_network(net);
  const auto dual_paths = enumerate_minpaths(dc.dual);
  return map_subsets(dual_paths, invert_map(dc.edge_map), static_cast<int>(net.edges.size()));
}

VerificationReport verify_theorem1(int length, int width, int kind, const Limits& limits) {
  const HammockNetwork net = build_hammock(length, width, kind);
  const DualCorrespondence dc = dual_network(net);
  const int n = static_cast<int>(net.edges.size());

  const auto cuts = mincuts_direct(net, limits);
  const auto mapped_dual_paths =
      map_subsets(enumerate_minpaths(dc.dual), invert_map(dc.edge_map), n);
  const auto paths = enumerate_minpaths(net);
  const auto mapped_dual_cuts = map_subsets(mincuts_direct(dc.dual, limits), invert_map(dc.edge_map), n);

  VerificationReport r;
  r.check = "theorem1";
  r.params = {{"l", length}, {"w", width}, {"kind", kind}};
  r.counts["mincuts"] = static_cast<long long>(cuts.size());
  r.counts["dual_minpaths"] = static_cast<long long>(mapped_dual_paths.size());
  r.counts["mincuts_by_size"] = size_histogram(cuts);
  r.counts["minpaths"] = static_cast<long long>(paths.size());
  r.counts["dual_mincuts"] = static_cast<long long>(mapped_dual_cuts.size());
  r.counts["minpaths_by_size"] = size_histogram(paths);
  const bool cut_side = cuts == mapped_dual_paths;
  const bool path_side = paths == mapped_dual_cuts;
  r.pass = cut_side && path_side;
  if (!cut_side) {
    if (auto w0 = first_difference(cuts, mapped_dual_paths)) {
      r.witness = subset_witness(*w0, "mincuts vs complement-mapped dual minpaths");
    }
  } else if (!path_side) {
    if (auto w0 = first_difference(paths, mapped_dual_cuts)) {
      r.witness = subset_witness(*w0, "minpaths vs complement-mapped dual mincuts");
    }
  }
  return r;
}

VerificationReport verify_corollary1(int length, int width, int kind, const Limits& limits) {
  const HammockNetwork net = build_hammock(length, width, kind);
  const int n = static_cast<int>(net.edges.size());
  if (n > limits.exhaustive_max_edges) {
    throw ResourceLimitError("exhaustive subset sweep over " + std::to_string(n) +
                             " edges exceeds the ceiling of " +
                             std::to_string(limits.exhaustive_max_edges));
  }
  const DualCorrespondence dc = dual_network(net);
  const auto table = pathset_table(net, limits.exhaustive_max_edges);
  const auto dual_table = pathset_table(dc.dual, limits.exhaustive_max_edges);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  VerificationReport r;
  r.check = "corollary1";
  r.params = {{"l", length}, {"w", width}, {"kind", kind}};
  long long pathsets = 0;
  r.pass = true;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    std::uint64_t mapped = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      mapped |= std::uint64_t{1} << dc.edge_map[std::countr_zero(m)];
    }
    const bool ps = table[mask];
    pathsets += ps ? 1 : 0;
    const bool dual_cut = !dual_table[full ^ mapped];
    const bool cut = !table[full ^ mask];
    const bool dual_ps = dual_table[mapped];
    if (ps != dual_cut || cut != dual_ps) {
      r.pass = false;
      r.witness = subset_witness(EdgeSubset::from_mask(n, mask),
                                 ps != dual_cut ? "pathset/dual-cutset mismatch"
                                                : "cutset/dual-pathset mismatch");
      break;
    }
  }
  r.counts["subsets"] = static_cast<long long>(full) + 1;
  r.counts["pathsets"] = pathsets;
  r.counts["cutsets"] = static_cast<long long>(full) + 1 - pathsets;
  return r;
}

}  // namespace hammock
