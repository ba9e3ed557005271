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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "poishare/commands.hpp"
#include "poishare/error.hpp"
#include "poishare/instance_io.hpp"

namespace py = pybind11;
using namespace poishare;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return edges;
}

std::vector<std::pair<std::size_t, std::size_t>> from_edges(const std::vector<Edge>& edges) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

WalkSet to_walks(const std::vector<std::vector<NodeId>>& walks, std::size_t g) {
  WalkSet set;
  set.augmentation = g;
  for (const auto& w : walks) set.walks.push_back(Walk{w});
  return set;
}

std::vector<std::vector<NodeId>> from_walks(const WalkSet& set) {
  std::vector<std::vector<NodeId>> out;
  for (const Walk& w : set.walks) out.push_back(w.nodes);
  return out;
}

py::dict row_dict(const ReportRow& row) {
  py::dict d;
  d["k"] = row.k;
  d["algorithm"] = row.algorithm;
  d["welfare"] = row.welfare;
  d["upper_bound"] = row.upper_bound;
  d["ratio"] = row.ratio;
  d["bound"] = row.bound;
  d["wall_time_ms"] = row.wall_time_ms;
  d["seed"] = row.seed;
  return d;
}

py::tuple breakdown(const WelfareBreakdown& w) { return py::make_tuple(w.average, w.per_user); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Social-enhanced PoI sharing solvers";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  auto infeasible = py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<CapExceededError>(m, "CapExceededError", infeasible.ptr());
  py::register_exception<CrosscheckError>(m, "CrosscheckError", PyExc_AssertionError);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](std::size_t node_count, std::size_t user_count,
                       const std::vector<std::pair<std::size_t, std::size_t>>& sensing_edges,
                       const std::vector<std::pair<std::size_t, std::size_t>>& social_edges,
                       unsigned social_hop_radius, std::vector<double> edge_weights,
                       std::optional<std::vector<std::vector<EdgeIndex>>> preferences) {
             Instance inst;
             inst.sensing.node_count = node_count;
             inst.sensing.user_count = user_count;
             inst.sensing.edges = to_edges(sensing_edges);
             inst.sensing.edge_weights = std::move(edge_weights);
             inst.social.user_count = user_count;
             inst.social.edges = to_edges(social_edges);
             inst.social_hop_radius = social_hop_radius;
             if (preferences) inst.preferences = PreferenceProfile{std::move(*preferences)};
             return inst;
           }),
           py::arg("node_count"), py::arg("user_count"), py::arg("sensing_edges"),
           py::arg("social_edges") = std::vector<std::pair<std::size_t, std::size_t>>{},
           py::arg("social_hop_radius") = 1u, py::arg("edge_weights") = std::vector<double>{},
           py::arg("preferences") = py::none())
      .def_static("from_json", &parse_instance, py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_instance(path); },
                  py::arg("path"))
      .def("to_json", &dump_instance)
      .def("save", [](const Instance& inst, const std::string& path) { save_instance(inst, path); },
           py::arg("path"))
      .def_property_readonly("node_count", [](const Instance& i) { return i.sensing.node_count; })
      .def_property_readonly("user_count", [](const Instance& i) { return i.sensing.user_count; })
      .def_property_readonly("sensing_edges",
                             [](const Instance& i) { return from_edges(i.sensing.edges); })
      .def_property_readonly("social_edges",
                             [](const Instance& i) { return from_edges(i.social.edges); })
      .def_readonly("social_hop_radius", &Instance::social_hop_radius)
      .def("__repr__", [](const Instance& i) {
        std::ostringstream s;
        s << "Instance(nodes=" << i.sensing.node_count << ", users=" << i.sensing.user_count
          << ", roads=" << i.sensing.edges.size() << ", friendships=" << i.social.edges.size()
          << ")";
        return s.str();
      });

  m.def("validate", [](const Instance& inst) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Violation& v : validate(inst)) out.emplace_back(v.invariant, v.detail);
    return out;
  });

  m.def(
      "welfare",
      [](const Instance& inst, const std::vector<NodeId>& selection, const std::string& route) {
        return breakdown(phi_static(Problem(inst), Selection{selection}, parse_route(route)));
      },
      py::arg("instance"), py::arg("selection"), py::arg("route") = "set",
      "Average welfare and per-user values of a user selection.");
  m.def(
      "walk_welfare",
      [](const Instance& inst, const std::vector<std::vector<NodeId>>& walks, std::size_t g,
         const std::string& route) {
        return breakdown(phi_walks(Problem(inst), to_walks(walks, g), parse_route(route)));
      },
      py::arg("instance"), py::arg("walks"), py::arg("g") = 1, py::arg("route") = "both");

  m.def(
      "solve_static",
      [](const Instance& inst, std::size_t k, const std::string& route, bool ignore_preferences) {
        StaticOptions o;
        o.k = k;
        o.route = parse_route(route);
        o.ignore_preferences = ignore_preferences;
        StaticOutcome out;
        {
          py::gil_scoped_release release;
          out = cmd_solve_static(inst, o);
        }
        py::dict d = row_dict(out.row);
        d["selection"] = out.result.selection.users;
        d["per_user"] = out.result.welfare.per_user;
        return d;
      },
      py::arg("instance"), py::arg("k"), py::arg("route") = "set",
      py::arg("ignore_preferences") = false);

  m.def(
      "solve_mobile",
      [](const Instance& inst, std::size_t hops, std::size_t k, std::size_t g, bool adjusted,
         bool simple_paths, const std::string& route) {
        MobileOptions o;
        o.hops = hops;
        o.k = k;
        o.g = g;
        o.adjusted = adjusted;
        o.mode = simple_paths ? WalkMode::SimplePaths : WalkMode::Walks;
        o.route = parse_route(route);
        MobileOutcome out;
        {
          py::gil_scoped_release release;
          out = cmd_solve_mobile(inst, o);
        }
        py::dict d = row_dict(out.row);
        d["walks"] = from_walks(out.result.walks);
        d["per_user"] = out.result.welfare.per_user;
        d["pruned_starts"] = out.result.pruned_starts;
        return d;
      },
      py::arg("instance"), py::arg("hops"), py::arg("k"), py::arg("g") = 1,
      py::arg("adjusted") = false, py::arg("simple_paths") = false, py::arg("route") = "set");

  m.def(
      "sweep",
      [](const Instance& inst, std::size_t k_min, std::size_t k_max,
         std::vector<std::string> algorithms, std::vector<std::uint64_t> seeds, std::size_t hops,
         std::size_t g) {
        SweepOptions o;
        o.k_min = k_min;
        o.k_max = k_max;
        if (!algorithms.empty()) o.algorithms = std::move(algorithms);
        o.seeds = std::move(seeds);
        o.hops = hops;
        o.g = g;
        EvalReport report;
        {
          py::gil_scoped_release release;
          report = cmd_sweep(&inst, o);
        }
        py::list rows;
        for (const ReportRow& row : report.rows) rows.append(row_dict(row));
        return rows;
      },
      py::arg("instance"), py::arg("k_min"), py::arg("k_max"),
      py::arg("algorithms") = std::vector<std::string>{},
      py::arg("seeds") = std::vector<std::uint64_t>{1}, py::arg("hops") = 2, py::arg("g") = 1);

  m.def(
      "generate",
      [](const std::string& mode, std::uint64_t seed, std::size_t node_count,
         std::size_t user_count, double edge_density, double social_mean, double social_sigma,
         unsigned social_hop_radius) {
        GenSpec spec;
        spec.mode = parse_gen_mode(mode);
        spec.seed = seed;
        spec.node_count = node_count;
        spec.user_count = user_count;
        spec.edge_density = edge_density;
        spec.social_mean = social_mean;
        spec.social_sigma = social_sigma;
        spec.social_hop_radius = social_hop_radius;
        return cmd_gen(spec);
      },
      py::arg("mode") = "synthetic-random", py::arg("seed") = 1, py::arg("node_count") = 10,
      py::arg("user_count") = 10, py::arg("edge_density") = 0.3, py::arg("social_mean") = 24.0,
      py::arg("social_sigma") = 8.0, py::arg("social_hop_radius") = 1u);

  m.def("static_bound", &static_bound, py::arg("k"), py::arg("m"));
  m.def("mobile_bound", &mobile_bound, py::arg("k"), py::arg("sensing_nodes"), py::arg("g"));
}
