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

// Command layer shared by the CLI and the Python module.

#ifndef POISHARE_COMMANDS_HPP_
#define POISHARE_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "poishare/coverage.hpp"
#include "poishare/mobile_solver.hpp"
#include "poishare/model.hpp"
#include "poishare/pipeline.hpp"
#include "poishare/report.hpp"
#include "poishare/static_solver.hpp"
#include "poishare/welfare.hpp"

namespace poishare {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitInfeasible = 2,
  kExitCrosscheck = 3,
};

struct StaticOutcome {
  StaticResult result;
  ReportRow row;
};

struct StaticOptions {
  std::size_t k = 1;
  Route route = Route::Set;
  bool ignore_preferences = false;
  std::uint64_t seed = 0;
};

// GUS plus UB1 and the closed-form bound.
StaticOutcome cmd_solve_static(const Instance& instance, const StaticOptions& options);

struct MobileOptions {
  std::size_t hops = 1;
  std::size_t k = 1;
  std::size_t g = 1;
  bool adjusted = false;
  Route route = Route::Set;
  WalkMode mode = WalkMode::Walks;
  std::uint64_t seed = 0;
};

struct MobileOutcome {
  MobileResult result;
  ReportRow row;
};

// GPS (or Adjusted-GPS) plus UB2 and the closed-form bound. With `adjusted`
// the output is checked for distinct starts and equal welfare to the g = k
// run; a mismatch raises CrosscheckError.
MobileOutcome cmd_solve_mobile(const Instance& instance, const MobileOptions& options);

struct SweepOptions {
  std::size_t k_min = 1;
  std::size_t k_max = 1;
  std::vector<std::string> algorithms = {"gus", "set-cover-baseline", "no-broadcast", "bound"};
  std::vector<std::uint64_t> seeds = {1};
  std::size_t hops = 2;
  std::size_t g = 1;
  Route route = Route::Set;
  CoverageMode baseline_mode = CoverageMode::Greedy;
  // When set, every seed regenerates the instance from this spec.
  std::optional<GenSpec> generator;
};

// One row per (k, algorithm, seed), sorted. Algorithms: gus, gps,
// adjusted-gps, set-cover-baseline, no-broadcast, bound.
EvalReport cmd_sweep(const Instance* instance, const SweepOptions& options);

Instance cmd_gen(const GenSpec& spec);

struct IngestOptions {
  BoundingBox box = BoundingBox::sf_sensing_area();
  std::size_t cluster_target = 92;
  std::size_t knn = 4;
  double social_mean = 24.0;
  double social_sigma = 8.0;
  std::uint64_t seed = 1;
};

struct IngestOutcome {
  Instance instance;
  std::vector<ParseIssue> issues;
  std::size_t parsed = 0;
  std::size_t kept = 0;
};

IngestOutcome cmd_ingest(std::istream& checkins, const IngestOptions& options);

// Violations of the instance, empty when valid.
std::vector<Violation> cmd_validate(const Instance& instance);

// Full command line entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poishare

#endif  // POISHARE_COMMANDS_HPP_
