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

#include "poishare/report.hpp"

#include <algorithm>
#include <cstdio>
#include <tuple>

#include "json.hpp"

namespace poishare {

double efficiency_ratio(double welfare, double upper_bound) {
  return upper_bound == 0.0 ? 1.0 : welfare / upper_bound;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void EvalReport::sort() {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.k, a.algorithm, a.seed) < std::tie(b.k, b.algorithm, b.seed);
  });
}

std::string EvalReport::to_csv(bool include_time) const {
  std::string out = kReportHeader;
  out += '\n';
  for (const ReportRow& r : rows) {
    char time[32];
    std::snprintf(time, sizeof time, "%.3f", include_time ? r.wall_time_ms : 0.0);
    out += std::to_string(r.k) + ',' + r.algorithm + ',' + format_number(r.welfare) + ',' +
           format_number(r.upper_bound) + ',' + format_number(r.ratio) + ',' +
           format_number(r.bound) + ',' + time + ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

std::string EvalReport::to_json(bool include_time) const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    doc.push_back({{"k", r.k},
                   {"algorithm", r.algorithm},
                   {"welfare", r.welfare},
                   {"upper_bound", r.upper_bound},
                   {"ratio", r.ratio},
                   {"bound", r.bound},
                   {"wall_time_ms", include_time ? r.wall_time_ms : 0.0},
                   {"seed", r.seed}});
  }
  return doc.dump(2) + '\n';
}

}  // namespace poishare
