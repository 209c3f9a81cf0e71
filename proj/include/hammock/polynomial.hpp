#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

#include "hammock/lattice.hpp"
#include "hammock/limits.hpp"

namespace hammock {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Two-terminal reliability polynomial of a network with n edges:
///   h(p) = sum_{i=0..n} N[i] p^i (1-p)^(n-i)  =  sum_{k=0..n} b[k] p^k
/// N[i] counts the pathsets with exactly i operational edges; both vectors
/// have n+1 entries of exact integers.
struct ReliabilityPolynomial {
  int length = 0;
  int width = 0;
  int kind = 1;
  int n = 0;
  std::vector<BigInt> N;
  std::vector<BigInt> b;

  friend bool operator==(const ReliabilityPolynomial&, const ReliabilityPolynomial&) = default;
};

/// C[i] counts the cutsets with exactly i failed edges.
struct CutsetCounts {
  std::vector<BigInt> C;

  friend bool operator==(const CutsetCounts&, const CutsetCounts&) = default;
};

BigInt binomial(int n, int k);

/// Expands sum_i counts[i] p^i (1-p)^(n-i), n = counts.size()-1, into plain
/// power-basis coefficients (n+1 entries).
std::vector<BigInt> expand_pathset_basis(const std::vector<BigInt>& counts);

/// Coefficients of f(1-p) given the coefficients of f(p). Involution.
std::vector<BigInt> substitute_one_minus_p(const std::vector<BigInt>& coeffs);

/// Coefficients of the order-th derivative (order 0 returns a copy; orders
/// past the degree give the zero polynomial).
std::vector<BigInt> derivative_coeffs(const std::vector<BigInt>& coeffs, int order);

/// Exact Horner evaluation of power-basis coefficients.
BigRational eval_coeffs(const std::vector<BigInt>& coeffs, const BigRational& p);

/// Exact 2^n subset scan. Throws ResourceLimitError when the edge count
/// exceeds limits.brute_max_edges. Works for any terminal orientation.
ReliabilityPolynomial reliability_bruteforce(const HammockNetwork& net, const Limits& limits = {});

/// Exact column-sweep dynamic program over connectivity states of one vertex
/// column; linear in length. Requires column-aligned terminals and
/// width <= limits.frontier_max_width (else ResourceLimitError).
ReliabilityPolynomial reliability_frontier(const HammockNetwork& net, const Limits& limits = {});

/// Subset scan when the edge count fits under limits.brute_max_edges, the
/// column sweep otherwise.
ReliabilityPolynomial reliability_auto(const HammockNetwork& net, const Limits& limits = {});

/// C[i] = binomial(n, n-i) - N[n-i]. Internally re-expands the cutset form
/// 1 - sum_i C[i] (1-p)^i p^(n-i) and asserts it reproduces b exactly.
CutsetCounts cutset_counts(const ReliabilityPolynomial& poly);

/// Exact evaluation of the pathset-basis form at rational p in [0,1].
/// Throws std::domain_error outside the unit interval.
BigRational evaluate_exact(const ReliabilityPolynomial& poly, const BigRational& p);

/// Double evaluation for plotting; computed exactly, rounded once at the end.
double evaluate(const ReliabilityPolynomial& poly, double p);

/// Power-basis coefficients of the order-th derivative of h.
std::vector<BigInt> derivative(const ReliabilityPolynomial& poly, int order);

/// JSON object {"l","w","kind","n","N":[...],"b":[...]} with the integer
/// vectors as decimal strings.
nlohmann::ordered_json to_json(const ReliabilityPolynomial& poly);

/// Inverse of to_json. Rejects malformed objects and any N/b pair where b is
/// not the exact expansion of the pathset basis.
ReliabilityPolynomial polynomial_from_json(const nlohmann::ordered_json& j);

/// CSV table "i,N,C,b" with one row per coefficient index.
void write_csv(std::ostream& out, const ReliabilityPolynomial& poly);

/// Exact decimal rendering of a rational, at most max_fraction_digits after
/// the point (round half to even beyond that), trailing zeros trimmed.
std::string decimal_string(const BigRational& value, int max_fraction_digits);

/// Parses a plain decimal literal ("0.01", "1", "-2.5") into an exact rational.
BigRational parse_decimal(const std::string& text);

}  // namespace hammock
