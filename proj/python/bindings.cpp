// Python bridge. Structured values cross as JSON strings; the hammock package
// decodes them into dicts/ints so this layer stays a thin forwarding shim.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "hammock/duality.hpp"
#include "hammock/lattice.hpp"
#include "hammock/polynomial.hpp"
#include "hammock/verification.hpp"

namespace py = pybind11;

namespace {

hammock::Limits make_limits(int brute_max_edges, int frontier_max_width) {
  hammock::Limits limits;
  limits.brute_max_edges = brute_max_edges;
  limits.frontier_max_width = frontier_max_width;
  return limits;
}

hammock::ReliabilityPolynomial compute(const hammock::HammockNetwork& net,
                                       const std::string& engine, const hammock::Limits& limits) {
  if (engine == "brute") return hammock::reliability_bruteforce(net, limits);
  if (engine == "frontier") return hammock::reliability_frontier(net, limits);
  if (engine == "auto") return hammock::reliability_auto(net, limits);
  throw std::invalid_argument("engine must be auto, brute or frontier");
}

std::string subsets_dump(const std::vector<hammock::EdgeSubset>& subsets) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : subsets) arr.push_back(s.indices());
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_hammock, m) {
  m.doc() = "Exact two-terminal reliability for hammock networks (JSON-string core API)";

  py::register_exception<hammock::ResourceLimitError>(m, "ResourceLimitError",
                                                      PyExc_RuntimeError);

  m.def(
      "build",
      [](int l, int w, int kind) { return hammock::to_json(hammock::build_hammock(l, w, kind)).dump(); },
      py::arg("length"), py::arg("width"), py::arg("kind") = 1,
      "Network JSON for the given dimensions and kind.");

  m.def(
      "poly",
      [](int l, int w, int kind, const std::string& engine, int brute_max_edges,
         int frontier_max_width) {
        const auto limits = make_limits(brute_max_edges, frontier_max_width);
        return hammock::to_json(compute(hammock::build_hammock(l, w, kind), engine, limits)).dump();
      },
      py::arg("length"), py::arg("width"), py::arg("kind") = 1, py::arg("engine") = "auto",
      py::arg("brute_max_edges") = hammock::Limits{}.brute_max_edges,
      py::arg("frontier_max_width") = hammock::Limits{}.frontier_max_width,
      "Reliability polynomial JSON (N and b as decimal strings).");

  m.def(
      "poly_of_network",
      [](const std::string& network_json, const std::string& engine, int brute_max_edges,
         int frontier_max_width) {
        const auto net = hammock::network_from_json(nlohmann::ordered_json::parse(network_json));
        const auto limits = make_limits(brute_max_edges, frontier_max_width);
        return hammock::to_json(compute(net, engine, limits)).dump();
      },
      py::arg("network_json"), py::arg("engine") = "auto",
      py::arg("brute_max_edges") = hammock::Limits{}.brute_max_edges,
      py::arg("frontier_max_width") = hammock::Limits{}.frontier_max_width,
      "Reliability polynomial JSON of a serialized network.");

  m.def(
      "dual",
      [](int l, int w, int kind) {
        const auto dc = hammock::dual_network(hammock::build_hammock(l, w, kind));
        nlohmann::ordered_json j;
        j["base"] = hammock::to_json(dc.base);
        j["dual"] = hammock::to_json(dc.dual);
        j["edge_map"] = dc.edge_map;
        return j.dump();
      },
      py::arg("length"), py::arg("width"), py::arg("kind") = 1,
      "Dual correspondence JSON: base, dual, edge_map.");

  m.def(
      "minpaths",
      [](int l, int w, int kind) {
        return subsets_dump(hammock::enumerate_minpaths(hammock::build_hammock(l, w, kind)));
      },
      py::arg("length"), py::arg("width"), py::arg("kind") = 1,
      "JSON array of minimal pathsets as edge-index lists.");

  m.def(
      "mincuts",
      [](int l, int w, int kind, const std::string& strategy) {
        const auto strat = [&] {
          if (strategy == "direct") return hammock::MincutStrategy::Direct;
          if (strategy == "dual") return hammock::MincutStrategy::ViaDual;
          throw std::invalid_argument("strategy must be dual or direct");
        }();
        return subsets_dump(hammock::enumerate_mincuts(hammock::build_hammock(l, w, kind), strat));
      },
      py::arg("length"), py::arg("width"), py::arg("kind") = 1, py::arg("strategy") = "dual",
      "JSON array of minimal cutsets as edge-index lists.");

  m.def(
      "evaluate",
      [](const std::string& poly_json, const std::string& p) {
        const auto poly = hammock::polynomial_from_json(nlohmann::ordered_json::parse(poly_json));
        return hammock::evaluate_exact(poly, hammock::parse_decimal(p)).str();
      },
      py::arg("poly_json"), py::arg("p"),
      "Exact rational h(p) as a 'num/den' (or integer) string; p is a decimal string.");

  m.def(
      "verify_theorem1",
      [](int l, int w, int kind) { return hammock::verify_theorem1(l, w, kind).to_json().dump(); },
      py::arg("length"), py::arg("width"), py::arg("kind") = 1);

  m.def(
      "verify_corollary1",
      [](int l, int w, int kind) { return hammock::verify_corollary1(l, w, kind).to_json().dump(); },
      py::arg("length"), py::arg("width"), py::arg("kind") = 1);

  m.def(
      "verify_suite",
      [](int max_l, int max_w) {
        return hammock::to_json(hammock::run_verification_suite(max_l, max_w)).dump();
      },
      py::arg("max_length"), py::arg("max_width"),
      "JSON array of verification reports over the full grid.");
}
