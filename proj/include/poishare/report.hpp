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

#ifndef POISHARE_REPORT_HPP_
#define POISHARE_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace poishare {

inline constexpr char kReportHeader[] =
    "k,algorithm,welfare,upper_bound,ratio,bound,wall_time_ms,seed";

struct ReportRow {
  std::size_t k = 0;
  std::string algorithm;
  double welfare = 0.0;
  double upper_bound = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  double wall_time_ms = 0.0;
  std::uint64_t seed = 0;
};

// welfare / upper_bound, or 1 when the bound is 0 (nothing to cover).
double efficiency_ratio(double welfare, double upper_bound);

struct EvalReport {
  std::vector<ReportRow> rows;

  // Orders rows by (k, algorithm, seed).
  void sort();
  // With include_time = false the wall_time_ms column is written as 0 so that
  // output can be compared byte for byte.
  std::string to_csv(bool include_time = true) const;
  std::string to_json(bool include_time = true) const;
};

std::string format_number(double value);

}  // namespace poishare

#endif  // POISHARE_REPORT_HPP_
