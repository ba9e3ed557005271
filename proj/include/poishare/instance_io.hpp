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

// JSON instance files:
//   {"node_count": 3, "user_count": 3, "sensing_edges": [[0,1],[1,2]],
//    "edge_weights": [...], "social_edges": [[0,2]],
//    "preferences": [[0],[0,1],[1]], "social_hop_radius": 1}
// edge_weights and preferences are optional; "self_loops": true permits
// loop edges in sensing_edges.

#ifndef POISHARE_INSTANCE_IO_HPP_
#define POISHARE_INSTANCE_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "poishare/model.hpp"

namespace poishare {

// Throws InputError on malformed JSON or missing/ill-typed fields. The result
// is not validated; wrap it in a Problem or call validate().
Instance parse_instance(std::string_view text);
Instance read_instance(std::istream& in);
Instance load_instance(const std::filesystem::path& path);

// Deterministic serialization: fixed key order, one line per section.
std::string dump_instance(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

}  // namespace poishare

#endif  // POISHARE_INSTANCE_IO_HPP_
