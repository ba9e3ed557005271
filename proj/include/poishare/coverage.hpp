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

// Budgeted maximum coverage over sensing edges: pick k candidate nodes whose
// incident edges have the largest total weight.

#ifndef POISHARE_COVERAGE_HPP_
#define POISHARE_COVERAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "poishare/model.hpp"

namespace poishare {

enum class CoverageMode { Greedy, Exact };

CoverageMode parse_coverage_mode(std::string_view name);

struct CoverageResult {
  std::vector<NodeId> nodes;  // in pick order (greedy) or increasing (exact)
  double covered = 0.0;
  std::uint64_t search_nodes = 0;  // branch-and-bound nodes visited, exact mode
};

inline constexpr std::uint64_t kDefaultCoverageCap = 2'000'000;

// Greedy picks the largest marginal coverage, ties to the lowest node id.
// Exact runs branch-and-bound seeded with the greedy value and throws
// CapExceededError once more than `cap` search nodes are visited.
CoverageResult max_coverage(const Problem& problem, std::span<const NodeId> candidates,
                            std::size_t k, CoverageMode mode,
                            std::uint64_t cap = kDefaultCoverageCap);

// An upper bound on the best k-node coverage: the exact value when the search
// fits in `cap`, otherwise greedy / (1 - 1/e) clipped to the total edge weight.
struct CoverageBound {
  double value = 0.0;
  bool exact = false;
};

CoverageBound coverage_upper_bound(const Problem& problem, std::span<const NodeId> candidates,
                                   std::size_t k, std::uint64_t cap = kDefaultCoverageCap);

}  // namespace poishare

#endif  // POISHARE_COVERAGE_HPP_
