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

#ifndef POISHARE_TESTS_FIXTURES_HPP_
#define POISHARE_TESTS_FIXTURES_HPP_

#include <vector>

#include "poishare/model.hpp"

namespace fixtures {

using poishare::Edge;
using poishare::Instance;

inline Instance make(std::size_t nodes, std::size_t users, std::vector<Edge> sensing,
                     std::vector<Edge> social = {}) {
  Instance inst;
  inst.sensing.node_count = nodes;
  inst.sensing.user_count = users;
  inst.sensing.edges = std::move(sensing);
  inst.social.user_count = users;
  inst.social.edges = std::move(social);
  return inst;
}

// v0 - v1 - v2, every node a user, no friendships.
inline Instance path3() { return make(3, 3, {{0, 1}, {1, 2}}); }

}  // namespace fixtures

#endif  // POISHARE_TESTS_FIXTURES_HPP_
