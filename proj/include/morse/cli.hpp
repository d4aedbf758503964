/**
 * Command-line front end. `run` is kept separate from main() so tests can
 * drive it with in-memory streams.
 *
 * Exit codes: 0 success, 1 input/usage error or failed check, 2 a solver
 * limit was hit (the incumbent is still printed).
 */
#ifndef MORSE_CLI_HPP
#define MORSE_CLI_HPP

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "complex.hpp"
#include "heuristic.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "solver.hpp"

namespace morse::cli {

struct RunConfig {
  std::string input;
  std::string output;  // empty: stdout
  std::string matching_path;
  std::string point_path;
  std::string debug_path;
  std::vector<std::string> fields{"q", "gf2"};
  std::string branching = "most-fractional";
  int max_rounds = 7;
  int heuristic_frequency = 10;
  int max_cuts = 20;
  int reliability = 4;
  bool gomory = false;
  bool no_separation = false;
  bool split = false;
  double time_limit = std::numeric_limits<double>::infinity();
  long node_limit = std::numeric_limits<long>::max();
  unsigned long seed = 0;  // accepted for scripted runs; the algorithms are deterministic
};

namespace detail {

inline std::vector<FieldSpec> fields_of(const RunConfig& rc) {
  std::vector<FieldSpec> out;
  for (const auto& f : rc.fields) out.push_back(parse_field(f));
  if (out.empty()) throw std::invalid_argument("at least one field is required");
  return out;
}

inline SolverConfig solver_config(const RunConfig& rc) {
  SolverConfig cfg;
  cfg.fields = fields_of(rc);
  cfg.max_rounds = rc.max_rounds;
  cfg.heuristic_frequency = rc.heuristic_frequency;
  cfg.max_cuts = rc.max_cuts;
  cfg.reliability = rc.reliability;
  cfg.gomory = rc.gomory;
  cfg.separation = !rc.no_separation;
  cfg.split_components = rc.split;
  cfg.time_limit = rc.time_limit;
  cfg.node_limit = rc.node_limit;
  if (rc.branching == "most-fractional")
    cfg.branching = Branching::MostFractional;
  else if (rc.branching == "pseudocost")
    cfg.branching = Branching::Pseudocost;
  else
    throw std::invalid_argument("unknown branching rule '" + rc.branching + "'");
  cfg.validate();
  return cfg;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

inline Json cycle_json(const HasseDiagram& h, const std::vector<ArcId>& cycle) {
  MorseMatching arcs;
  arcs.arcs = cycle;  // keep the walk order
  return matching_json(h, arcs);
}

}  // namespace detail

/// Runs one subcommand. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum Morse matchings of simplicial complexes by branch-and-cut", "morsematch"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("complex", rc.input, "facet list file")->required();
    sub->add_option("-o,--output", rc.output, "write JSON here instead of stdout");
    sub->add_option("--fields", rc.fields, "coefficient fields for Betti bounds (q, gf2, gf3, ...)")
        ->delimiter(',');
  };

  auto* solve_cmd = app.add_subcommand("solve", "maximum Morse matching");
  add_common(solve_cmd);
  solve_cmd->add_option("--max-rounds", rc.max_rounds, "separation rounds per node");
  solve_cmd->add_option("--heuristic-frequency", rc.heuristic_frequency,
                        "run the heuristic at depths divisible by this");
  solve_cmd->add_option("--max-cuts", rc.max_cuts, "cycle cuts per level and round");
  solve_cmd->add_option("--branching", rc.branching, "most-fractional or pseudocost");
  solve_cmd->add_option("--reliability", rc.reliability, "pseudocost observations before trusting");
  solve_cmd->add_flag("--gomory", rc.gomory, "add Gomory cuts at the root");
  solve_cmd->add_flag("--no-separation", rc.no_separation,
                      "only check integral points for cycles");
  solve_cmd->add_flag("--split", rc.split, "solve connected components separately");
  solve_cmd->add_option("--time-limit", rc.time_limit, "seconds");
  solve_cmd->add_option("--node-limit", rc.node_limit, "branch-and-bound nodes");
  solve_cmd->add_option("--debug-lp", rc.debug_path, "dump the root LP and transformed graphs");
  solve_cmd->add_option("--seed", rc.seed, "unused; accepted for scripted runs");

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers over the chosen fields");
  add_common(betti_cmd);

  auto* heur_cmd = app.add_subcommand("heuristic", "greedy matching followed by augmentation");
  add_common(heur_cmd);
  heur_cmd->add_option("--point", rc.point_path, "JSON array of arc values guiding the greedy");

  auto* check_cmd = app.add_subcommand("check", "validate a matching");
  add_common(check_cmd);
  check_cmd->add_option("matching", rc.matching_path, "matching JSON file")->required();

  auto* info_cmd = app.add_subcommand("info", "sizes and connectivity");
  add_common(info_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* dst = &out;
  auto emit = [&](const Json& j) {
    if (!rc.output.empty()) {
      file = std::make_unique<std::ofstream>(rc.output);
      if (!*file) throw std::runtime_error("cannot write '" + rc.output + "'");
      dst = file.get();
    }
    *dst << j.dump(2) << "\n";
  };

  try {
    SimplicialComplex c = read_facet_file(rc.input);
    HasseDiagram h(c);

    if (app.got_subcommand(info_cmd)) {
      emit(info_json(c));
      return 0;
    }

    if (app.got_subcommand(betti_cmd)) {
      Json per_field = Json::array();
      for (const auto& f : detail::fields_of(rc)) per_field.push_back(betti_json(betti_numbers(c, f)));
      auto best = best_betti_bounds(c, detail::fields_of(rc));
      int total = 0;
      for (int b : best) total += b;
      emit({{"schema_version", kSchemaVersion},
            {"fields", std::move(per_field)},
            {"best", best},
            {"beta", total},
            {"euler_characteristic", euler_characteristic(c)}});
      return 0;
    }

    if (app.got_subcommand(heur_cmd)) {
      std::vector<double> x(h.num_arcs(), 0.0);
      if (!rc.point_path.empty()) {
        Json p = detail::read_json_file(rc.point_path);
        if (!p.is_array() || static_cast<int>(p.size()) != h.num_arcs())
          throw ParseError(0, "point must be an array of " + std::to_string(h.num_arcs()) +
                                  " numbers");
        for (int a = 0; a < h.num_arcs(); ++a) x[a] = p[a].get<double>();
      }
      ImproveTrace trace;
      MorseMatching m = improve(h, greedy_from_lp(h, x), &trace);
      emit({{"schema_version", kSchemaVersion},
            {"critical", critical_report_json(h, critical_report(h, m))},
            {"trace", trace.critical_counts},
            {"matching", matching_json(h, m)}});
      return 0;
    }

    if (app.got_subcommand(check_cmd)) {
      MorseMatching m = matching_from_json(h, detail::read_json_file(rc.matching_path));
      auto check = is_morse_matching(h, m);
      Json j = {{"schema_version", kSchemaVersion}, {"valid", check.ok}};
      if (check.ok) {
        j["critical"] = critical_report_json(h, critical_report(h, m));
      } else if (check.overmatched) {
        j["reason"] = "face matched twice";
        j["face"] = face_json(c, *check.overmatched);
      } else {
        j["reason"] = "directed cycle";
        j["level"] = check.cycle_level;
        j["cycle"] = detail::cycle_json(h, check.cycle);
      }
      emit(j);
      return check.ok ? 0 : 1;
    }

    // solve
    SolverConfig cfg = detail::solver_config(rc);
    std::ofstream debug;
    if (!rc.debug_path.empty()) {
      debug.open(rc.debug_path);
      if (!debug) throw std::runtime_error("cannot write '" + rc.debug_path + "'");
      cfg.debug = &debug;
    }
    SolveResult r = solve(c, cfg);
    emit(solve_result_json(c, r));
    return r.status == SolveStatus::Optimal ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace morse::cli

#endif  // MORSE_CLI_HPP
