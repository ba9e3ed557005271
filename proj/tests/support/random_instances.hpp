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

#ifndef POISHARE_TESTS_RANDOM_INSTANCES_HPP_
#define POISHARE_TESTS_RANDOM_INSTANCES_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "poishare/model.hpp"

namespace testgen {

using Rng = std::mt19937_64;

struct Shape {
  std::size_t min_users = 1;
  std::size_t max_users = 6;
  std::size_t max_extra_nodes = 0;  // non-user sensing nodes
  double edge_prob = 0.4;
  double social_prob = 0.3;
  bool preferences = false;
  unsigned max_radius = 1;
  // Every user gets at least one sensing edge.
  bool no_isolated_users = false;
};

poishare::Instance random_instance(Rng& rng, const Shape& shape);

// Random subset of {0..n-1} with exactly k members, sorted.
std::vector<std::size_t> random_subset(Rng& rng, std::size_t n, std::size_t k);

// Uniformly chosen edges of the complete graph on n nodes, kept with
// probability p, resampled until connected.
std::vector<poishare::Edge> random_connected_graph(Rng& rng, std::size_t n, double p);

bool is_connected(std::size_t n, const std::vector<poishare::Edge>& edges);

}  // namespace testgen

#endif  // POISHARE_TESTS_RANDOM_INSTANCES_HPP_
