// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "poishare/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "poishare/error.hpp"
#include "poishare/instance_io.hpp"

namespace poishare {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::ordered_json;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

constexpr double kRatioSlack = 1e-9;

void check_ratio(const ReportRow& row) {
  if (row.ratio > 1.0 + kRatioSlack) {
    throw CrosscheckError(row.algorithm + " welfare " + format_number(row.welfare) +
                          " exceeds its upper bound " + format_number(row.upper_bound));
  }
}

std::vector<NodeId> all_users(const Problem& problem) {
  std::vector<NodeId> users(problem.user_count());
  std::iota(users.begin(), users.end(), NodeId{0});
  return users;
}

Instance strip_preferences(Instance instance, bool ignore) {
  if (ignore) instance.preferences.reset();
  return instance;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Edge> parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  for (const std::string& item : split(text, ',')) {
    const auto parts = split(item, '-');
    if (parts.size() != 2) throw InputError("edge '" + item + "' is not of the form u-v");
    try {
      edges.push_back({std::stoul(parts[0]), std::stoul(parts[1])});
    } catch (const std::exception&) {
      throw InputError("edge '" + item + "' has a non-numeric endpoint");
    }
  }
  return edges;
}

ordered_json walks_json(const WalkSet& walks) {
  ordered_json out = ordered_json::array();
  for (const Walk& w : walks.walks) out.push_back(w.nodes);
  return out;
}

}  // namespace

StaticOutcome cmd_solve_static(const Instance& instance, const StaticOptions& options) {
  const Problem problem(strip_preferences(instance, options.ignore_preferences));
  const auto start = Clock::now();
  StaticOutcome out;
  out.result = gus(problem, {options.k, TieBreak::LowestIndex, options.route});
  const double time = elapsed_ms(start);
  out.row.k = options.k;
  out.row.algorithm = "gus";
  out.row.welfare = out.result.welfare.average;
  out.row.upper_bound = ub1(problem, options.k);
  out.row.ratio = efficiency_ratio(out.row.welfare, out.row.upper_bound);
  out.row.bound = static_bound(options.k, problem.user_count());
  out.row.wall_time_ms = time;
  out.row.seed = options.seed;
  check_ratio(out.row);
  return out;
}

MobileOutcome cmd_solve_mobile(const Instance& instance, const MobileOptions& options) {
  const Problem problem(instance);
  const auto start = Clock::now();
  MobileOutcome out;
  const GpsOptions gps_options{options.mode, options.route};
  if (options.adjusted) {
    if (!problem.all_nodes_are_users()) {
      throw InputError("--adjusted needs a sensing graph made only of user nodes; this instance has " +
                       std::to_string(problem.node_count() - problem.user_count()) +
                       " non-user nodes");
    }
    const MobileResult unrestricted = gps(problem, options.hops, options.k, options.k, gps_options);
    out.result = adjust_to_distinct_starts(problem, unrestricted, options.hops);
    std::set<NodeId> starts;
    for (const Walk& w : out.result.walks.walks) starts.insert(w.start());
    if (starts.size() != out.result.walks.walks.size()) {
      throw CrosscheckError("adjusted walks share a start node");
    }
    if (!same_welfare(out.result.welfare, unrestricted.welfare, problem.uniform_weights())) {
      throw CrosscheckError("adjusted welfare " + format_number(out.result.welfare.average) +
                            " differs from the unrestricted welfare " +
                            format_number(unrestricted.welfare.average));
    }
  } else {
    out.result = gps(problem, options.hops, options.k, options.g, gps_options);
  }
  const double time = elapsed_ms(start);
  out.row.k = options.k;
  out.row.algorithm = options.adjusted ? "adjusted-gps" : "gps";
  out.row.welfare = out.result.welfare.average;
  out.row.upper_bound = ub2(problem, options.hops, options.k);
  out.row.ratio = efficiency_ratio(out.row.welfare, out.row.upper_bound);
  out.row.bound =
      mobile_bound(options.k, problem.node_count(), options.adjusted ? options.k : options.g);
  out.row.wall_time_ms = time;
  out.row.seed = options.seed;
  return out;
}

EvalReport cmd_sweep(const Instance* instance, const SweepOptions& options) {
  if (options.k_min < 1 || options.k_min > options.k_max) {
    throw InputError("k range must satisfy 1 <= k_min <= k_max");
  }
  static const std::set<std::string> known = {"gus", "gps", "adjusted-gps", "set-cover-baseline",
                                              "no-broadcast", "bound"};
  for (const std::string& a : options.algorithms) {
    if (!known.count(a)) throw InputError("unknown sweep algorithm '" + a + "'");
  }
  if (!instance && !options.generator) throw InputError("sweep needs an instance or a generator");
  if (options.seeds.empty()) throw InputError("sweep needs at least one seed");

  EvalReport report;
  for (std::uint64_t seed : options.seeds) {
    Instance inst;
    if (options.generator) {
      GenSpec spec = *options.generator;
      spec.seed = seed;
      inst = synth_instance(spec);
    } else {
      inst = *instance;
    }
    const Problem problem(inst);
    const double empty = CoverageState(problem).average();
    const auto users = all_users(problem);

    for (std::size_t k = options.k_min; k <= options.k_max; ++k) {
      const double upper1 = ub1(problem, k);
      const double sbound = static_bound(k, problem.user_count());
      for (const std::string& algo : options.algorithms) {
        ReportRow row;
        row.k = k;
        row.algorithm = algo;
        row.seed = seed;
        row.upper_bound = upper1;
        row.bound = sbound;
        const auto start = Clock::now();
        if (algo == "gus") {
          row.welfare = gus(problem, {k, TieBreak::LowestIndex, options.route}).welfare.average;
        } else if (algo == "set-cover-baseline") {
          const auto cover = max_coverage(problem, users, k, options.baseline_mode);
          row.welfare = phi_static(problem, Selection{cover.nodes}, Route::Set).average;
        } else if (algo == "no-broadcast") {
          row.welfare = empty;
        } else if (algo == "bound") {
          row.welfare = sbound * upper1;
        } else {
          MobileOptions mo;
          mo.hops = options.hops;
          mo.k = k;
          mo.g = algo == "adjusted-gps" ? k : std::min(options.g, k);
          mo.adjusted = algo == "adjusted-gps";
          mo.route = options.route;
          mo.seed = seed;
          row = cmd_solve_mobile(inst, mo).row;
        }
        if (row.wall_time_ms == 0.0) row.wall_time_ms = elapsed_ms(start);
        row.ratio = algo == "bound" ? sbound : efficiency_ratio(row.welfare, row.upper_bound);
        if (algo != "gps" && algo != "adjusted-gps") check_ratio(row);
        report.rows.push_back(std::move(row));
      }
    }
  }
  report.sort();
  return report;
}

Instance cmd_gen(const GenSpec& spec) { return synth_instance(spec); }

IngestOutcome cmd_ingest(std::istream& checkins, const IngestOptions& options) {
  options.box.check();
  CheckInLog log = parse_checkins(checkins);
  IngestOutcome out;
  out.issues = std::move(log.issues);
  out.parsed = log.records.size();
  const auto kept = filter_bbox(log.records, options.box);
  out.kept = kept.size();
  out.instance = instance_from_checkins(kept, options.cluster_target, options.knn,
                                        options.social_mean, options.social_sigma, options.seed);
  if (auto violations = validate(out.instance); !violations.empty()) {
    throw CrosscheckError("ingested instance is invalid: " + describe(violations));
  }
  return out;
}

std::vector<Violation> cmd_validate(const Instance& instance) { return validate(instance); }

namespace {

struct GlobalFlags {
  std::uint64_t seed = 1;
  std::string route = "set";
  std::string format = "csv";
};

void add_generator_flags(CLI::App* cmd, GenSpec& spec, std::string& mode, std::string& kind,
                         std::string& graph) {
  cmd->add_option("--mode", mode, "synthetic-random | gowalla-like | reduction");
  cmd->add_option("--nodes", spec.node_count, "Sensing nodes (synthetic-random)");
  cmd->add_option("--users", spec.user_count, "User nodes (synthetic-random)");
  cmd->add_option("--density", spec.edge_density, "Road probability per node pair");
  cmd->add_option("--social-mean", spec.social_mean, "Mean social degree");
  cmd->add_option("--social-sigma", spec.social_sigma, "Social degree deviation");
  cmd->add_option("--radius", spec.social_hop_radius, "Social sharing radius in hops");
  cmd->add_option("--checkins", spec.checkin_count, "Synthetic check-ins (gowalla-like)");
  cmd->add_option("--hotspots", spec.hotspot_count, "Check-in hotspots (gowalla-like)");
  cmd->add_option("--clusters", spec.cluster_target, "User nodes after clustering");
  cmd->add_option("--knn", spec.knn, "Nearest neighbours per location for roads");
  cmd->add_option("--kind", kind, "Reduction kind: vcp | mobile");
  cmd->add_option("--graph-nodes", spec.graph_nodes, "Reduction source graph node count");
  cmd->add_option("--graph-edges", graph, "Reduction source edges, e.g. 0-1,1-2,0-2");
  cmd->add_option("--hops", spec.hops, "Tail length for the mobile reduction");
}

void finish_generator(GenSpec& spec, const std::string& mode, const std::string& kind,
                      const std::string& graph) {
  spec.mode = parse_gen_mode(mode);
  spec.reduction = parse_reduction_kind(kind);
  if (!graph.empty()) spec.graph_edges = parse_edge_list(graph);
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (const std::string& s : split(text, ',')) {
    try {
      seeds.push_back(std::stoull(s));
    } catch (const std::exception&) {
      throw InputError("seed '" + s + "' is not a non-negative integer");
    }
  }
  return seeds;
}

void write_or_print(const Instance& inst, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << dump_instance(inst);
  } else {
    save_instance(inst, path);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Social-enhanced PoI sharing: solvers, generators and benchmarks", "poishare"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags global;
  app.add_option("--seed", global.seed, "Seed for generators and report rows");
  app.add_option("--route", global.route, "Welfare route: matrix | set | both")
      ->check(CLI::IsMember({"matrix", "set", "both"}));
  app.add_option("--format", global.format, "Output format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string instance_path;
  std::string output_path;
  bool no_time = false;

  auto* solve_static = app.add_subcommand("solve-static", "Greedy user selection");
  StaticOptions so;
  solve_static->add_option("-i,--instance", instance_path, "Instance file")->required();
  solve_static->add_option("-k", so.k, "Budget")->required();
  solve_static->add_flag("--ignore-preferences", so.ignore_preferences,
                         "Evaluate as if every user wants every road");

  auto* solve_mobile = app.add_subcommand("solve-mobile", "Greedy path selection");
  MobileOptions mo;
  bool simple_paths = false;
  solve_mobile->add_option("-i,--instance", instance_path, "Instance file")->required();
  solve_mobile->add_option("-n,--hops", mo.hops, "Walk length in edges")->required();
  solve_mobile->add_option("-k", mo.k, "Budget")->required();
  solve_mobile->add_option("-g", mo.g, "Walks allowed per start node");
  solve_mobile->add_flag("--adjusted", mo.adjusted, "Distinct start nodes (all-user graphs)");
  solve_mobile->add_flag("--simple-paths", simple_paths, "Candidates without node revisits");

  auto* sweep = app.add_subcommand("sweep", "Ratio sweep over a budget range, CSV rows");
  SweepOptions sw;
  std::string k_range = "1..1";
  std::string algorithms = "gus,set-cover-baseline,no-broadcast,bound";
  std::string seeds;
  std::string baseline = "greedy";
  GenSpec sweep_spec;
  std::string sweep_mode;
  std::string sweep_kind = "vcp";
  std::string sweep_graph;
  sweep->add_option("-i,--instance", instance_path, "Instance file");
  sweep->add_option("--k-range", k_range, "Budgets as lo..hi");
  sweep->add_option("--algorithms", algorithms, "Comma-separated algorithm names");
  sweep->add_option("--seeds", seeds, "Comma-separated seeds (default: --seed)");
  sweep->add_option("-n,--walk-hops", sw.hops, "Walk length for gps rows");
  sweep->add_option("-g", sw.g, "Augmentation factor for gps rows");
  sweep->add_option("--baseline", baseline, "Set-cover baseline: greedy | exact");
  sweep->add_flag("--no-time", no_time, "Write wall_time_ms as 0");
  add_generator_flags(sweep, sweep_spec, sweep_mode, sweep_kind, sweep_graph);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  GenSpec spec;
  std::string gen_mode = "synthetic-random";
  std::string gen_kind = "vcp";
  std::string gen_graph;
  add_generator_flags(gen, spec, gen_mode, gen_kind, gen_graph);
  gen->add_option("-o,--output", output_path, "Output file (default stdout)");

  auto* ingest = app.add_subcommand("ingest", "Build an instance from a check-in TSV");
  IngestOptions io;
  std::string checkin_path;
  ingest->add_option("--checkins", checkin_path, "Check-in TSV file")->required();
  ingest->add_option("--lat-min", io.box.lat_min);
  ingest->add_option("--lat-max", io.box.lat_max);
  ingest->add_option("--lon-min", io.box.lon_min);
  ingest->add_option("--lon-max", io.box.lon_max);
  ingest->add_option("--clusters", io.cluster_target, "User nodes after clustering");
  ingest->add_option("--knn", io.knn, "Nearest neighbours per location for roads");
  ingest->add_option("--social-mean", io.social_mean);
  ingest->add_option("--social-sigma", io.social_sigma);
  ingest->add_option("-o,--output", output_path, "Output file (default stdout)");

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("-i,--instance", instance_path, "Instance file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const Route route = parse_route(global.route);
    const bool json = global.format == "json";

    if (*solve_static) {
      so.route = route;
      so.seed = global.seed;
      const auto outcome = cmd_solve_static(load_instance(instance_path), so);
      if (json) {
        ordered_json doc;
        doc["selection"] = outcome.result.selection.users;
        doc["welfare"] = outcome.result.welfare.average;
        doc["per_user"] = outcome.result.welfare.per_user;
        doc["upper_bound"] = outcome.row.upper_bound;
        doc["ratio"] = outcome.row.ratio;
        doc["bound"] = outcome.row.bound;
        doc["route"] = std::string(route_name(route));
        out << doc.dump(2) << '\n';
      } else {
        out << "# selection: " << ordered_json(outcome.result.selection.users).dump() << '\n';
        out << EvalReport{{outcome.row}}.to_csv();
      }
    } else if (*solve_mobile) {
      mo.route = route;
      mo.seed = global.seed;
      mo.mode = simple_paths ? WalkMode::SimplePaths : WalkMode::Walks;
      if (mo.adjusted && !solve_mobile->get_option("-g")->empty() && mo.g != mo.k) {
        err << "note: --adjusted always runs with g = k; ignoring -g " << mo.g << '\n';
      }
      const auto outcome = cmd_solve_mobile(load_instance(instance_path), mo);
      if (outcome.row.ratio > 1.0 + kRatioSlack) {
        err << "warning: welfare exceeds the coverage upper bound for " << mo.hops * mo.k
            << " nodes on this instance\n";
      }
      if (json) {
        ordered_json doc;
        doc["walks"] = walks_json(outcome.result.walks);
        doc["welfare"] = outcome.result.welfare.average;
        doc["per_user"] = outcome.result.welfare.per_user;
        doc["upper_bound"] = outcome.row.upper_bound;
        doc["ratio"] = outcome.row.ratio;
        doc["bound"] = outcome.row.bound;
        doc["pruned_starts"] = outcome.result.pruned_starts;
        out << doc.dump(2) << '\n';
      } else {
        out << "# walks: " << walks_json(outcome.result.walks).dump() << '\n';
        out << EvalReport{{outcome.row}}.to_csv();
      }
    } else if (*sweep) {
      const auto dots = k_range.find("..");
      try {
        if (dots == std::string::npos) {
          sw.k_min = sw.k_max = std::stoul(k_range);
        } else {
          sw.k_min = std::stoul(k_range.substr(0, dots));
          sw.k_max = std::stoul(k_range.substr(dots + 2));
        }
      } catch (const std::exception&) {
        throw InputError("--k-range must look like 1..30");
      }
      sw.algorithms = split(algorithms, ',');
      sw.seeds = seeds.empty() ? std::vector<std::uint64_t>{global.seed} : parse_seeds(seeds);
      sw.route = route;
      sw.baseline_mode = parse_coverage_mode(baseline);
      std::optional<Instance> inst;
      if (!instance_path.empty()) {
        if (!sweep_mode.empty()) throw InputError("give either --instance or --mode, not both");
        inst = load_instance(instance_path);
      } else if (!sweep_mode.empty()) {
        finish_generator(sweep_spec, sweep_mode, sweep_kind, sweep_graph);
        sw.generator = sweep_spec;
      }
      const EvalReport report = cmd_sweep(inst ? &*inst : nullptr, sw);
      out << (json ? report.to_json(!no_time) : report.to_csv(!no_time));
    } else if (*gen) {
      finish_generator(spec, gen_mode, gen_kind, gen_graph);
      spec.seed = global.seed;
      write_or_print(cmd_gen(spec), output_path, out);
    } else if (*ingest) {
      io.seed = global.seed;
      std::ifstream in(checkin_path);
      if (!in) throw InputError("cannot open check-in file '" + checkin_path + "'");
      const auto outcome = cmd_ingest(in, io);
      for (const ParseIssue& issue : outcome.issues) {
        err << checkin_path << ":" << issue.line << ": " << issue.message << '\n';
      }
      err << "parsed " << outcome.parsed << " check-ins, " << outcome.kept << " inside the box\n";
      write_or_print(outcome.instance, output_path, out);
    } else if (*validate_cmd) {
      const auto violations = cmd_validate(load_instance(instance_path));
      if (json) {
        ordered_json doc = ordered_json::array();
        for (const Violation& v : violations) {
          doc.push_back({{"invariant", v.invariant}, {"detail", v.detail}});
        }
        out << doc.dump(2) << '\n';
      } else if (violations.empty()) {
        out << "valid\n";
      } else {
        out << describe(violations) << '\n';
      }
      return violations.empty() ? kExitOk : kExitInputError;
    }
  } catch (const CrosscheckError& e) {
    err << "crosscheck failure: " << e.what() << '\n';
    return kExitCrosscheck;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCrosscheck;
  }
  return kExitOk;
}

}  // namespace poishare
