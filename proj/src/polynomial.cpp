#include "hammock/polynomial.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace hammock {

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

std::vector<BigInt> expand_pathset_basis(const std::vector<BigInt>& counts) {
  if (counts.empty()) throw std::invalid_argument("counts must have n+1 entries");
  const int n = static_cast<int>(counts.size()) - 1;
  std::vector<BigInt> b(counts.size(), 0);
  for (int k = 0; k <= n; ++k) {
    BigInt c = 1;  // C(n-k+j, j), starting at j = 0
    BigInt acc = 0;
    for (int j = 0; j <= k; ++j) {
      if (j > 0) {
        c *= n - k + j;
        c /= j;
      }
      if (j % 2 == 0) {
        acc += counts[k - j] * c;
      } else {
        acc -= counts[k - j] * c;
      }
    }
    b[k] = acc;
  }
  return b;
}

std::vector<BigInt> substitute_one_minus_p(const std::vector<BigInt>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("coefficient vector must not be empty");
  const int deg = static_cast<int>(coeffs.size()) - 1;
  std::vector<BigInt> out(coeffs.size(), 0);
  for (int k = 0; k <= deg; ++k) {
    BigInt c = 1;  // C(j, k), starting at j = k
    BigInt acc = 0;
    for (int j = k; j <= deg; ++j) {
      if (j > k) {
        c *= j;
        c /= j - k;
      }
      acc += coeffs[j] * c;
    }
    out[k] = (k % 2 == 0) ? acc : -acc;
  }
  return out;
}

std::vector<BigInt> derivative_coeffs(const std::vector<BigInt>& coeffs, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  if (order == 0) return coeffs;
  if (order >= static_cast<int>(coeffs.size())) return {BigInt(0)};
  const int m = static_cast<int>(coeffs.size()) - order;
  std::vector<BigInt> out(m, 0);
  BigInt fall = 1;  // (i+1)(i+2)...(i+order) at i = 0
  for (int t = 1; t <= order; ++t) fall *= t;
  for (int i = 0; i < m; ++i) {
    out[i] = coeffs[i + order] * fall;
    fall *= i + 1 + order;
    fall /= i + 1;
  }
  return out;
}

BigRational eval_coeffs(const std::vector<BigInt>& coeffs, const BigRational& p) {
  BigRational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * p + BigRational(*it);
  }
  return acc;
}

namespace {

ReliabilityPolynomial make_poly(const HammockNetwork& net, std::vector<BigInt> counts) {
  ReliabilityPolynomial poly;
  poly.length = net.length;
  poly.width = net.width;
  poly.kind = net.kind;
  poly.n = static_cast<int>(net.edges.size());
  poly.N = std::move(counts);
  poly.b = expand_pathset_basis(poly.N);
  return poly;
}

}  // namespace

ReliabilityPolynomial reliability_bruteforce(const HammockNetwork& net, const Limits& limits) {
  const int n = static_cast<int>(net.edges.size());
  if (n > limits.brute_max_edges) {
    throw ResourceLimitError("subset scan over " + std::to_string(n) +
                             " edges exceeds the ceiling of " +
                             std::to_string(limits.brute_max_edges));
  }
  const std::vector<char> table = pathset_table(net, limits.brute_max_edges);
  std::vector<long long> hist(n + 1, 0);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask]) ++hist[std::popcount(mask)];
  }
  std::vector<BigInt> counts(n + 1);
  for (int i = 0; i <= n; ++i) counts[i] = hist[i];
  return make_poly(net, std::move(counts));
}

// Column sweep. Processing columns left to right, the only vertices that can
// still matter are those of the current column, since every edge joins two
// adjacent columns. A state is the partition of the current column's vertices
// into connectivity blocks of the processed subgraph, with one block marked as
// containing the (collapsed) sources; states whose marked block dies can never
// reach a terminus and are dropped. Weights count partial edge subsets per
// state, split by subset size. Transitions per state and per-column edge mask
// depend only on the column parity, so they are computed once and cached.
ReliabilityPolynomial reliability_frontier(const HammockNetwork& net, const Limits& limits) {
  if (!net.horizontal_terminals()) {
    throw std::invalid_argument("frontier engine requires column-aligned terminals");
  }
  const int l = net.length;
  const int w = net.width;
  const int n = l * w;
  if (w > limits.frontier_max_width) {
    throw ResourceLimitError("frontier sweep of width " + std::to_string(w) +
                             " exceeds the ceiling of " +
                             std::to_string(limits.frontier_max_width));
  }
  if (w > 25) {
    throw ResourceLimitError("frontier sweep of width " + std::to_string(w) +
                             " is not supported (2^w column masks)");
  }
  const int par = kind_parity(net.kind);
  const auto col_size = [&](int x) { return (w - (par + x) % 2) / 2 + 1; };

  struct Layout {
    int a = 0;                              // vertices in the outgoing column
    int b = 0;                              // vertices in the incoming column
    std::vector<std::pair<int, int>> ends;  // per square y: (A position, B position)
  };
  Layout layouts[2];
  for (int xp = 0; xp < 2; ++xp) {
    Layout& L = layouts[xp];
    L.a = col_size(xp);
    L.b = col_size(xp + 1);
    for (int y = 0; y < w; ++y) {
      if ((xp + y) % 2 == par) {
        L.ends.emplace_back(y >> 1, (y + 1) >> 1);  // up-diagonal
      } else {
        L.ends.emplace_back((y + 1) >> 1, y >> 1);  // down-diagonal
      }
    }
  }

  // State key: one block id per column vertex in y order (restricted growth
  // numbering), plus the marked block's id as the final byte.
  using Weights = std::vector<BigInt>;
  std::unordered_map<std::string, Weights> states;
  states.emplace(std::string(static_cast<std::size_t>(col_size(0)) + 1, '\0'),
                 Weights{BigInt(1)});

  using Transition = std::tuple<std::string, int, std::uint64_t>;  // key, edges added, masks
  std::array<std::unordered_map<std::string, std::vector<Transition>>, 2> cache;

  for (int x = 0; x < l; ++x) {
    const Layout& L = layouts[x % 2];
    auto& tcache = cache[x % 2];
    const int elems = L.a + L.b + 1;  // column vertices on both sides + source mark
    const int sigma = L.a + L.b;
    std::vector<int> parent(elems), rep(elems, -1), new_id(elems, -1);
    const auto find = [&parent](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    const auto unite = [&parent, &find](int u, int v) {
      u = find(u);
      v = find(v);
      if (u != v) parent[u] = v;
    };

    std::unordered_map<std::string, Weights> next;
    for (auto& [key, weights] : states) {
      auto it = tcache.find(key);
      if (it == tcache.end()) {
        std::map<std::pair<std::string, int>, std::uint64_t> agg;
        std::string nkey(static_cast<std::size_t>(L.b) + 1, '\0');
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << w); ++mask) {
          for (int v = 0; v < elems; ++v) parent[v] = v;
          std::fill(rep.begin(), rep.end(), -1);
          for (int i = 0; i < L.a; ++i) {
            const int bid = key[i];
            if (rep[bid] < 0) {
              rep[bid] = i;
            } else {
              unite(i, rep[bid]);
            }
          }
          unite(sigma, rep[static_cast<int>(key[L.a])]);
          for (std::uint32_t m = mask; m != 0; m &= m - 1) {
            const auto& [ea, eb] = L.ends[std::countr_zero(m)];
            unite(ea, L.a + eb);
          }
          std::fill(new_id.begin(), new_id.end(), -1);
          int ids = 0;
          for (int k = 0; k < L.b; ++k) {
            const int r = find(L.a + k);
            if (new_id[r] < 0) new_id[r] = ids++;
            nkey[k] = static_cast<char>(new_id[r]);
          }
          const int rs = find(sigma);
          if (new_id[rs] < 0) continue;  // no source connection survives
          nkey[L.b] = static_cast<char>(new_id[rs]);
          ++agg[{nkey, std::popcount(mask)}];
        }
        std::vector<Transition> list;
        list.reserve(agg.size());
        for (auto& [state_add, mult] : agg) {
          list.emplace_back(state_add.first, state_add.second, mult);
        }
        it = tcache.emplace(key, std::move(list)).first;
      }
      for (const auto& [nkey, add, mult] : it->second) {
        Weights& nw = next[nkey];
        if (nw.size() < weights.size() + add) nw.resize(weights.size() + add);
        for (std::size_t c = 0; c < weights.size(); ++c) {
          if (weights[c] == 0) continue;
          if (mult == 1) {
            nw[c + add] += weights[c];
          } else {
            nw[c + add] += weights[c] * mult;
          }
        }
      }
    }
    states = std::move(next);
  }

  // Every surviving state has its marked block on the terminus column.
  std::vector<BigInt> counts(n + 1, 0);
  for (const auto& [key, weights] : states) {
    for (std::size_t c = 0; c < weights.size(); ++c) counts[c] += weights[c];
  }
  return make_poly(net, std::move(counts));
}

ReliabilityPolynomial reliability_auto(const HammockNetwork& net, const Limits& limits) {
  if (static_cast<int>(net.edges.size()) <= limits.brute_max_edges) {
    return reliability_bruteforce(net, limits);
  }
  return reliability_frontier(net, limits);
}

CutsetCounts cutset_counts(const ReliabilityPolynomial& poly) {
  const int n = poly.n;
  CutsetCounts cc;
  cc.C.assign(n + 1, 0);
  for (int i = 0; i <= n; ++i) cc.C[i] = binomial(n, n - i) - poly.N[n - i];
  // 1 - sum_i C[i] (1-p)^i p^(n-i) must reproduce the expanded coefficients.
  const std::vector<BigInt> u = substitute_one_minus_p(expand_pathset_basis(cc.C));
  for (int k = 0; k <= n; ++k) {
    const BigInt expect = (k == 0 ? BigInt(1) : BigInt(0)) - u[k];
    if (expect != poly.b[k]) {
      throw std::logic_error("cutset counts fail the complementary expansion identity");
    }
  }
  return cc;
}

BigRational evaluate_exact(const ReliabilityPolynomial& poly, const BigRational& p) {
  if (p < 0 || p > 1) throw std::domain_error("probability must lie in [0,1]");
  const BigRational q = BigRational(1) - p;
  // powers of p ascending and q descending, matched to N's indexing
  std::vector<BigRational> qpow(poly.n + 1);
  qpow[0] = 1;
  for (int i = 1; i <= poly.n; ++i) qpow[i] = qpow[i - 1] * q;
  BigRational acc = 0;
  BigRational ppow = 1;
  for (int i = 0; i <= poly.n; ++i) {
    if (poly.N[i] != 0) acc += BigRational(poly.N[i]) * ppow * qpow[poly.n - i];
    ppow *= p;
  }
  return acc;
}

double evaluate(const ReliabilityPolynomial& poly, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability must lie in [0,1]");
  return evaluate_exact(poly, BigRational(p)).convert_to<double>();
}

std::vector<BigInt> derivative(const ReliabilityPolynomial& poly, int order) {
  return derivative_coeffs(poly.b, order);
}

nlohmann::ordered_json to_json(const ReliabilityPolynomial& poly) {
  nlohmann::ordered_json j;
  j["l"] = poly.length;
  j["w"] = poly.width;
  j["kind"] = poly.kind;
  j["n"] = poly.n;
  auto strings = [](const std::vector<BigInt>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BigInt& x : v) arr.push_back(x.str());
    return arr;
  };
  j["N"] = strings(poly.N);
  j["b"] = strings(poly.b);
  return j;
}

ReliabilityPolynomial polynomial_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  for (const char* key : {"l", "w", "kind", "n", "N", "b"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("polynomial JSON is missing key '") + key + "'");
    }
  }
  ReliabilityPolynomial poly;
  poly.length = j.at("l").get<int>();
  poly.width = j.at("w").get<int>();
  poly.kind = j.at("kind").get<int>();
  poly.n = j.at("n").get<int>();
  if (poly.length < 1 || poly.width < 1 || (poly.kind != 1 && poly.kind != 2) ||
      poly.n != poly.length * poly.width) {
    throw std::invalid_argument("polynomial JSON has inconsistent dimensions");
  }
  auto integers = [&](const char* key) {
    const auto& arr = j.at(key);
    if (!arr.is_array() || static_cast<int>(arr.size()) != poly.n + 1) {
      throw std::invalid_argument(std::string("'") + key + "' must hold n+1 entries");
    }
    std::vector<BigInt> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
      if (!item.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
      const std::string& s = item.get_ref<const std::string&>();
      if (s.empty() || s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) != std::string::npos ||
          (s[0] == '-' && s.size() == 1)) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
      }
      out.emplace_back(s);
    }
    return out;
  };
  poly.N = integers("N");
  poly.b = integers("b");
  if (poly.b != expand_pathset_basis(poly.N)) {
    throw std::invalid_argument("b is not the expansion of the pathset counts");
  }
  return poly;
}

void write_csv(std::ostream& out, const ReliabilityPolynomial& poly) {
  const CutsetCounts cc = cutset_counts(poly);
  out << "i,N,C,b\n";
  for (int i = 0; i <= poly.n; ++i) {
    out << i << ',' << poly.N[i].str() << ',' << cc.C[i].str() << ',' << poly.b[i].str() << '\n';
  }
}

std::string decimal_string(const BigRational& value, int max_fraction_digits) {
  if (max_fraction_digits < 0) throw std::invalid_argument("fraction digits must be >= 0");
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);  // canonical, > 0
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt ip = num / den;
  const BigInt rem = num % den;
  std::string frac;
  if (rem != 0) {
    const BigInt scale = boost::multiprecision::pow(BigInt(10), max_fraction_digits);
    const BigInt t = rem * scale;
    BigInt digits = t / den;
    const BigInt r2 = (t % den) * 2;
    if (r2 > den || (r2 == den && digits % 2 == 1)) ++digits;  // half to even
    if (digits == scale) {
      ++ip;
    } else if (digits != 0) {
      frac = digits.str();
      frac.insert(frac.begin(), max_fraction_digits - frac.size(), '0');
      frac.erase(frac.find_last_not_of('0') + 1);
    }
  }
  std::string out = ip.str();
  if (!frac.empty()) out += "." + frac;
  if (negative && out != "0") out.insert(out.begin(), '-');
  return out;
}

BigRational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string ipart, fpart;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ipart += text[i++];
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') fpart += text[i++];
  }
  if (i != text.size() || (ipart.empty() && fpart.empty())) {
    throw std::invalid_argument("not a decimal literal: '" + text + "'");
  }
  BigInt num = ipart.empty() ? BigInt(0) : BigInt(ipart);
  for (char c : fpart) {
    num *= 10;
    num += c - '0';
  }
  const BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<int>(fpart.size()));
  BigRational r(num, den);
  return negative ? BigRational(-r) : r;
}

}  // namespace hammock
