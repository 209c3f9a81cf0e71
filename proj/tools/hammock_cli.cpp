#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hammock/duality.hpp"
#include "hammock/lattice.hpp"
#include "hammock/polynomial.hpp"
#include "hammock/verification.hpp"

namespace {

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

std::string dumped(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

hammock::HammockNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  return hammock::network_from_json(nlohmann::ordered_json::parse(in));
}

std::vector<int> kinds_of(const std::string& kind) {
  if (kind == "both") return {1, 2};
  return {kind == "2" ? 2 : 1};
}

hammock::ReliabilityPolynomial compute(const hammock::HammockNetwork& net,
                                       const std::string& engine, const hammock::Limits& limits) {
  if (engine == "brute") return hammock::reliability_bruteforce(net, limits);
  if (engine == "frontier") return hammock::reliability_frontier(net, limits);
  return hammock::reliability_auto(net, limits);
}

nlohmann::ordered_json subsets_json(const std::vector<hammock::EdgeSubset>& subsets) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : subsets) arr.push_back(s.indices());
  return arr;
}

// single object for one kind, array when --kind both
std::string one_or_many(std::vector<nlohmann::ordered_json> items) {
  if (items.size() == 1) return dumped(items.front());
  return dumped(nlohmann::ordered_json(std::move(items)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-terminal reliability toolkit for hammock (brick-wall) networks"};
  app.require_subcommand(1);

  int l = 0, w = 0;
  int max_l = 4, max_w = 4;
  std::string kind = "1", engine = "auto", format = "json", strategy = "dual", step = "0.01";
  std::string output, input;
  std::vector<std::string> checks;
  hammock::Limits limits;

  auto add_dims = [&](CLI::App* cmd, bool required) {
    auto* lo = cmd->add_option("-l,--length", l, "Columns of unit squares (length)");
    auto* wo = cmd->add_option("-w,--width", w, "Rows of unit squares (width)");
    if (required) {
      lo->required();
      wo->required();
    }
    return std::pair(lo, wo);
  };
  auto add_kind = [&](CLI::App* cmd) {
    cmd->add_option("-k,--kind", kind, "Vertex parity class: 1, 2 or both")
        ->check(CLI::IsMember({"1", "2", "both"}))
        ->capture_default_str();
  };
  auto add_input = [&](CLI::App* cmd, CLI::Option* lo, CLI::Option* wo) {
    cmd->add_option("--input", input, "Load a network JSON file instead of building one")
        ->excludes(lo)
        ->excludes(wo);
  };
  auto add_engine = [&](CLI::App* cmd) {
    cmd->add_option("--engine", engine, "Polynomial engine: auto, brute or frontier")
        ->check(CLI::IsMember({"auto", "brute", "frontier"}))
        ->capture_default_str();
  };
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--brute-max-edges", limits.brute_max_edges,
                    "Edge ceiling for the subset-scan engine")
        ->envname("HAMMOCK_BRUTE_MAX")
        ->capture_default_str();
    cmd->add_option("--frontier-max-width", limits.frontier_max_width,
                    "Width ceiling for the column-sweep engine")
        ->envname("HAMMOCK_FRONTIER_MAXW")
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output, "Write to this file instead of stdout");
  };

  CLI::App* cmd_build = app.add_subcommand("build", "Construct a network and print its JSON");
  add_dims(cmd_build, true);
  add_kind(cmd_build);
  add_output(cmd_build);

  CLI::App* cmd_poly = app.add_subcommand("poly", "Compute the reliability polynomial");
  {
    auto [lo, wo] = add_dims(cmd_poly, false);
    add_kind(cmd_poly);
    add_input(cmd_poly, lo, wo);
    add_engine(cmd_poly);
    add_limits(cmd_poly);
    cmd_poly->add_option("--format", format, "json or csv (csv lists i,N,C,b rows)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    add_output(cmd_poly);
  }

  CLI::App* cmd_dual = app.add_subcommand("dual", "Dual network and the edge correspondence");
  add_dims(cmd_dual, true);
  add_kind(cmd_dual);
  add_output(cmd_dual);

  CLI::App* cmd_minpaths = app.add_subcommand("minpaths", "Enumerate minimal pathsets");
  {
    auto [lo, wo] = add_dims(cmd_minpaths, false);
    add_kind(cmd_minpaths);
    add_input(cmd_minpaths, lo, wo);
    add_output(cmd_minpaths);
  }

  CLI::App* cmd_mincuts = app.add_subcommand("mincuts", "Enumerate minimal cutsets");
  {
    auto [lo, wo] = add_dims(cmd_mincuts, false);
    add_kind(cmd_mincuts);
    add_input(cmd_mincuts, lo, wo);
    cmd_mincuts->add_option("--strategy", strategy, "dual (via minpaths of the dual) or direct")
        ->check(CLI::IsMember({"dual", "direct"}))
        ->capture_default_str();
    add_output(cmd_mincuts);
  }

  CLI::App* cmd_verify = app.add_subcommand("verify", "Run verification checks over a grid");
  cmd_verify->add_option("--max-l", max_l, "Largest length in the grid")->capture_default_str();
  cmd_verify->add_option("--max-w", max_w, "Largest width in the grid")->capture_default_str();
  cmd_verify
      ->add_option("--check", checks, "Restrict to named checks (repeatable)")
      ->check(CLI::IsMember({"theorem1", "corollary1", "duality_identity", "self_symmetry",
                             "derivative_orders", "remark1"}));
  add_limits(cmd_verify);
  add_output(cmd_verify);

  CLI::App* cmd_plot = app.add_subcommand("plot-data", "CSV rows p,h(p) on a step grid");
  {
    auto [lo, wo] = add_dims(cmd_plot, false);
    add_kind(cmd_plot);
    add_input(cmd_plot, lo, wo);
    add_engine(cmd_plot);
    add_limits(cmd_plot);
    cmd_plot->add_option("--step", step, "Grid spacing, an exact decimal")->capture_default_str();
    add_output(cmd_plot);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto built_nets = [&]() {
    std::vector<hammock::HammockNetwork> nets;
    if (!input.empty()) {
      nets.push_back(load_network(input));
    } else {
      if (l < 1 || w < 1) {
        throw std::invalid_argument("--length and --width are required (or pass --input)");
      }
      for (int k : kinds_of(kind)) nets.push_back(hammock::build_hammock(l, w, k));
    }
    return nets;
  };

  try {
    if (cmd_build->parsed()) {
      std::vector<nlohmann::ordered_json> items;
      for (int k : kinds_of(kind)) items.push_back(hammock::to_json(hammock::build_hammock(l, w, k)));
      emit(output, one_or_many(std::move(items)));
    } else if (cmd_poly->parsed()) {
      std::vector<hammock::ReliabilityPolynomial> polys;
      for (const auto& net : built_nets()) polys.push_back(compute(net, engine, limits));
      if (format == "csv") {
        if (polys.size() != 1) {
          throw std::invalid_argument("csv output supports a single kind, not --kind both");
        }
        std::ostringstream csv;
        hammock::write_csv(csv, polys.front());
        emit(output, csv.str());
      } else {
        std::vector<nlohmann::ordered_json> items;
        for (const auto& poly : polys) items.push_back(hammock::to_json(poly));
        emit(output, one_or_many(std::move(items)));
      }
    } else if (cmd_dual->parsed()) {
      std::vector<nlohmann::ordered_json> items;
      for (int k : kinds_of(kind)) {
        const hammock::DualCorrespondence dc = hammock::dual_network(hammock::build_hammock(l, w, k));
        nlohmann::ordered_json j;
        j["base"] = hammock::to_json(dc.base);
        j["dual"] = hammock::to_json(dc.dual);
        j["edge_map"] = dc.edge_map;
        items.push_back(std::move(j));
      }
      emit(output, one_or_many(std::move(items)));
    } else if (cmd_minpaths->parsed()) {
      std::vector<nlohmann::ordered_json> items;
      for (const auto& net : built_nets()) {
        const auto paths = hammock::enumerate_minpaths(net);
        nlohmann::ordered_json j;
        j["l"] = net.length;
        j["w"] = net.width;
        j["kind"] = net.kind;
        j["count"] = paths.size();
        j["minpaths"] = subsets_json(paths);
        items.push_back(std::move(j));
      }
      emit(output, one_or_many(std::move(items)));
    } else if (cmd_mincuts->parsed()) {
      const auto strat = strategy == "direct" ? hammock::MincutStrategy::Direct
                                              : hammock::MincutStrategy::ViaDual;
      std::vector<nlohmann::ordered_json> items;
      for (const auto& net : built_nets()) {
        const auto cuts = hammock::enumerate_mincuts(net, strat, limits);
        nlohmann::ordered_json j;
        j["l"] = net.length;
        j["w"] = net.width;
        j["kind"] = net.kind;
        j["strategy"] = strategy;
        j["count"] = cuts.size();
        j["mincuts"] = subsets_json(cuts);
        items.push_back(std::move(j));
      }
      emit(output, one_or_many(std::move(items)));
    } else if (cmd_verify->parsed()) {
      auto reports = hammock::run_verification_suite(max_l, max_w, limits);
      if (!checks.empty()) {
        const std::set<std::string> wanted(checks.begin(), checks.end());
        std::erase_if(reports, [&](const auto& r) { return !wanted.count(r.check); });
      }
      bool all_pass = true;
      for (const auto& r : reports) all_pass = all_pass && r.pass;
      emit(output, dumped(hammock::to_json(reports)));
      return all_pass ? 0 : 1;
    } else if (cmd_plot->parsed()) {
      if (kind == "both") {
        throw std::invalid_argument("plot-data supports a single kind, not --kind both");
      }
      const auto nets = built_nets();
      const hammock::ReliabilityPolynomial poly = compute(nets.front(), engine, limits);
      const hammock::BigRational dp = hammock::parse_decimal(step);
      if (dp <= 0 || dp > 1) throw std::invalid_argument("--step must lie in (0, 1]");
      std::ostringstream rows;
      for (int k = 0; hammock::BigRational(k) * dp <= 1; ++k) {
        const hammock::BigRational p = hammock::BigRational(k) * dp;
        rows << hammock::decimal_string(p, 17) << ","
             << hammock::decimal_string(hammock::evaluate_exact(poly, p), 17) << "\n";
      }
      emit(output, rows.str());
    }
  } catch (const hammock::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
