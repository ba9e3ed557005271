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

#include "poishare/static_solver.hpp"

#include <cmath>
#include <numeric>

#include "poishare/error.hpp"

namespace poishare {
namespace {

void check_budget(const Problem& problem, std::size_t k) {
  if (k < 1) throw InputError("budget k must be >= 1");
  if (k > problem.user_count()) {
    throw InputError("budget k=" + std::to_string(k) + " exceeds the " +
                     std::to_string(problem.user_count()) + " users");
  }
}

// Binomial coefficient saturating at `limit + 1`.
std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1.0L;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(limit)) return limit + 1;
  }
  return static_cast<std::uint64_t>(std::llround(acc));
}

std::vector<NodeId> all_users(const Problem& problem) {
  std::vector<NodeId> users(problem.user_count());
  std::iota(users.begin(), users.end(), NodeId{0});
  return users;
}

StaticResult gus_matrix(const Problem& problem, const SolveConfig& config) {
  const double m = static_cast<double>(problem.user_count());
  StaticResult out;
  std::vector<char> chosen(problem.user_count(), 0);
  double current = phi_static(problem, out.selection, Route::Matrix).total();
  for (std::size_t step = 0; step < config.k; ++step) {
    NodeId best = problem.user_count();
    double best_total = -1.0;
    for (NodeId v = 0; v < problem.user_count(); ++v) {
      if (chosen[v]) continue;
      Selection trial = out.selection;
      trial.users.push_back(v);
      const double total = phi_static(problem, trial, Route::Matrix).total();
      if (total > best_total) {
        best_total = total;
        best = v;
      }
    }
    chosen[best] = 1;
    out.selection.users.push_back(best);
    out.trace.push_back({best, (best_total - current) / m});
    current = best_total;
  }
  out.welfare = phi_static(problem, out.selection, Route::Matrix);
  return out;
}

}  // namespace

StaticResult gus(const Problem& problem, const SolveConfig& config) {
  check_budget(problem, config.k);
  if (config.route == Route::Matrix) return gus_matrix(problem, config);

  const double m = static_cast<double>(problem.user_count());
  CoverageState state(problem);
  StaticResult out;
  std::vector<char> chosen(problem.user_count(), 0);
  for (std::size_t step = 0; step < config.k; ++step) {
    NodeId best = problem.user_count();
    double best_gain = -1.0;
    for (NodeId v = 0; v < problem.user_count(); ++v) {
      if (chosen[v]) continue;
      const NodeId one[] = {v};
      const double g = state.gain_total(one);
      if (g > best_gain) {
        best_gain = g;
        best = v;
      }
    }
    chosen[best] = 1;
    const NodeId one[] = {best};
    state.add(one);
    out.selection.users.push_back(best);
    out.trace.push_back({best, best_gain / m});
    if (config.route == Route::Both) {
      const auto by_matrix = phi_static(problem, out.selection, Route::Matrix);
      if (!same_welfare(by_matrix, state.breakdown(), problem.uniform_weights())) {
        throw CrosscheckError("matrix and set routes disagree after selecting user " +
                              std::to_string(best));
      }
    }
  }
  out.welfare = state.breakdown();
  return out;
}

StaticResult brute_force_static(const Problem& problem, std::size_t k, std::uint64_t cap) {
  check_budget(problem, k);
  const std::size_t m = problem.user_count();
  if (binomial_capped(m, k, cap) > cap) {
    throw CapExceededError("C(" + std::to_string(m) + "," + std::to_string(k) + ") subsets", cap);
  }
  const CoverageState empty(problem);
  std::vector<NodeId> combo(k);
  std::iota(combo.begin(), combo.end(), NodeId{0});
  std::vector<NodeId> best_combo = combo;
  double best_total = -1.0;
  while (true) {
    const double total = empty.empty_total() + empty.gain_total(combo);
    if (total > best_total) {
      best_total = total;
      best_combo = combo;
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  StaticResult out;
  out.selection.users = best_combo;
  CoverageState state(problem);
  state.add(best_combo);
  out.welfare = state.breakdown();
  return out;
}

CoverageResult max_coverage_baseline(const Problem& problem, std::size_t k, CoverageMode mode,
                                     std::uint64_t cap) {
  if (k > problem.user_count()) {
    throw InputError("budget k=" + std::to_string(k) + " exceeds the user count");
  }
  const auto users = all_users(problem);
  return max_coverage(problem, users, k, mode, cap);
}

double ub1(const Problem& problem, std::size_t k, std::uint64_t cap) {
  const CoverageState empty(problem);
  const auto users = all_users(problem);
  return empty.average() + coverage_upper_bound(problem, users, k, cap).value;
}

double static_bound(std::size_t k, std::size_t m) {
  if (k < 1 || m < 1) throw InputError("static_bound requires k >= 1 and m >= 1");
  const double kd = static_cast<double>(k);
  const double md = static_cast<double>(m);
  return 1.0 - (md - 2.0) / md * std::pow((kd - 1.0) / kd, kd);
}

Instance vcp_reduction_instance(std::size_t node_count, const std::vector<Edge>& edges) {
  Instance inst;
  inst.sensing.node_count = node_count;
  inst.sensing.user_count = node_count;
  inst.sensing.edges = edges;
  inst.social.user_count = node_count;
  if (auto violations = validate(inst); !violations.empty()) {
    throw InputError("vertex cover graph is not simple: " + describe(violations));
  }
  return inst;
}

}  // namespace poishare
