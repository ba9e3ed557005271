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

#ifndef POISHARE_STATIC_SOLVER_HPP_
#define POISHARE_STATIC_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "poishare/coverage.hpp"
#include "poishare/model.hpp"
#include "poishare/welfare.hpp"

namespace poishare {

enum class TieBreak { LowestIndex };

struct SolveConfig {
  std::size_t k = 1;
  TieBreak tie_break = TieBreak::LowestIndex;
  // Route used to score candidates. Route::Both scores with the set
  // bookkeeping and cross-checks every committed step against the matrix route.
  Route route = Route::Set;
};

struct GreedyStep {
  NodeId user = 0;
  double gain = 0.0;  // increase of the average welfare
};

struct StaticResult {
  Selection selection;
  WelfareBreakdown welfare;
  std::vector<GreedyStep> trace;
};

// Greedy user selection: k rounds, each adding the user with the largest
// marginal welfare. Throws InputError if k is 0 or exceeds the user count.
StaticResult gus(const Problem& problem, const SolveConfig& config);

inline constexpr std::uint64_t kDefaultSubsetCap = 2'000'000;

// Exact optimum over all k-subsets of users; the lexicographically least
// optimal subset is returned. Throws CapExceededError if C(m,k) > cap.
StaticResult brute_force_static(const Problem& problem, std::size_t k,
                                std::uint64_t cap = kDefaultSubsetCap);

// Set-cover conversion baseline: the k users whose incident edges cover the
// most edges, ignoring the social graph.
CoverageResult max_coverage_baseline(const Problem& problem, std::size_t k, CoverageMode mode,
                                     std::uint64_t cap = kDefaultCoverageCap);

// Phi(empty) plus a k-user coverage bound. Always >= the static optimum.
double ub1(const Problem& problem, std::size_t k, std::uint64_t cap = kDefaultCoverageCap);

// 1 - ((m-2)/m) * ((k-1)/k)^k. Throws InputError unless k >= 1 and m >= 1.
double static_bound(std::size_t k, std::size_t m);

// Instance whose sensing graph is `graph` (every node a user) with an empty
// social graph. Its optimum reaches |E| iff `graph` has a vertex cover of size k.
Instance vcp_reduction_instance(std::size_t node_count, const std::vector<Edge>& edges);

}  // namespace poishare

#endif  // POISHARE_STATIC_SOLVER_HPP_
