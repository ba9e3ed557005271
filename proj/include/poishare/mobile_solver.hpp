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

// Mobile sensing: each selected user walks n edges from its node and
// broadcasts the PoI on every road touching a visited node. Selecting k users
// becomes selecting k walks out of the space of all n-edge walks that start at
// user nodes, with at most g walks per start node.

#ifndef POISHARE_MOBILE_SOLVER_HPP_
#define POISHARE_MOBILE_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "poishare/coverage.hpp"
#include "poishare/model.hpp"
#include "poishare/welfare.hpp"

namespace poishare {

// Walks may revisit nodes; SimplePaths restricts candidates to paths.
enum class WalkMode { Walks, SimplePaths };

struct WalkSpace {
  std::size_t hops = 0;
  std::vector<Walk> candidates;                      // lexicographic by node sequence
  std::vector<std::vector<std::size_t>> by_start;    // user node -> candidate indices
};

inline constexpr std::uint64_t kDefaultWalkCap = 20'000'000;

// All n-edge walks from every user node. Throws InputError for n == 0 and
// CapExceededError if more than `cap` candidates would be produced.
WalkSpace enumerate_walks(const Problem& problem, std::size_t hops,
                          WalkMode mode = WalkMode::Walks, std::uint64_t cap = kDefaultWalkCap);

struct WalkStep {
  Walk walk;
  double gain = 0.0;  // increase of the average welfare
};

struct MobileResult {
  WalkSet walks;
  WelfareBreakdown welfare;
  std::vector<WalkStep> trace;
  std::vector<NodeId> pruned_starts;  // start nodes removed after reaching g walks
};

struct GpsOptions {
  WalkMode mode = WalkMode::Walks;
  // Route::Both cross-checks every committed step against the matrix route.
  Route route = Route::Set;
};

// Greedy path selection with augmentation factor g: k rounds, each adding the
// candidate walk with the largest marginal welfare; once a start node holds g
// selected walks its remaining candidates are dropped. Ties go to the earliest
// candidate. Throws InputError unless 1 <= g <= k, InfeasibleError if fewer
// than k walks can be selected.
MobileResult gps(const Problem& problem, std::size_t hops, std::size_t k, std::size_t g,
                 const GpsOptions& options = {});
MobileResult gps_on_space(const Problem& problem, const WalkSpace& space, std::size_t k,
                          std::size_t g, const GpsOptions& options = {});

// From a run with g = k: per start node, the first g walks in selection order.
WalkSet intermediate_solution(const MobileResult& unrestricted, std::size_t g);

// Rewrites a g = k result into k walks with pairwise-distinct starts that
// visit exactly the same node set (hence the same welfare). Requires every
// sensing node to be a user node.
MobileResult adjust_to_distinct_starts(const Problem& problem, const MobileResult& unrestricted,
                                       std::size_t hops);

// gps with g = k followed by adjust_to_distinct_starts. Throws InputError when
// the sensing graph has non-user nodes.
MobileResult adjusted_gps(const Problem& problem, std::size_t hops, std::size_t k,
                          const GpsOptions& options = {});

// Exact optimum over k-subsets of the walk space with at most g walks per
// start node. Lexicographically least optimum by candidate index.
// Throws CapExceededError once more than `cap` subsets are evaluated.
MobileResult brute_force_mobile(const Problem& problem, std::size_t hops, std::size_t k,
                                std::size_t g, std::uint64_t cap = 5'000'000,
                                WalkMode mode = WalkMode::Walks);
MobileResult brute_force_mobile_on_space(const Problem& problem, const WalkSpace& space,
                                         std::size_t k, std::size_t g,
                                         std::uint64_t cap = 5'000'000);

// Phi(empty) plus a coverage bound for n*k nodes chosen among all sensing nodes.
double ub2(const Problem& problem, std::size_t hops, std::size_t k,
           std::uint64_t cap = kDefaultCoverageCap);

// (g/k) * [1 - ((w-2)/w) * ((k-1)/k)^k] where w is the sensing node count.
double mobile_bound(std::size_t k, std::size_t sensing_nodes, std::size_t g);

// Appends to every user a dummy tail of n nodes ending in a fan of |E| leaves.
// Dummy nodes are non-users. Throws InputError on preferences.
Instance mobile_reduction_instance(const Instance& static_instance, std::size_t hops);

// In a reduced instance, the walks that follow the dummy tails of `users`.
WalkSet reduction_tail_walks(const Instance& static_instance, std::size_t hops,
                             const Selection& users);

}  // namespace poishare

#endif  // POISHARE_MOBILE_SOLVER_HPP_
