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

// Instance model: a sensing graph of locations and roads whose first
// `user_count` nodes host users, paired with a social graph over those users.
//
// The raw types are plain aggregates so that malformed data can be described
// (see validate()). Solvers work on a Problem, which is only constructible from
// an instance that validates cleanly and carries the derived adjacency.

#ifndef POISHARE_MODEL_HPP_
#define POISHARE_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poishare/edge_set.hpp"

namespace poishare {

using NodeId = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct SensingGraph {
  std::size_t node_count = 0;
  std::size_t user_count = 0;
  std::vector<Edge> edges;
  // Empty means every edge carries weight 1.
  std::vector<double> edge_weights;
  bool allow_self_loops = false;

  bool weighted() const { return !edge_weights.empty(); }
  double weight(EdgeIndex e) const { return weighted() ? edge_weights[e] : 1.0; }
  bool is_user(NodeId v) const { return v < user_count; }
};

struct SocialGraph {
  std::size_t user_count = 0;
  std::vector<Edge> edges;
};

// Per-user subset of sensing edges the user is interested in.
struct PreferenceProfile {
  std::vector<std::vector<EdgeIndex>> per_user_edges;
};

struct Instance {
  SensingGraph sensing;
  SocialGraph social;
  std::optional<PreferenceProfile> preferences;
  unsigned social_hop_radius = 1;
};

// Ordered list of distinct selected users; order is the selection sequence.
struct Selection {
  std::vector<NodeId> users;
};

// Node sequence of an n-edge walk starting at a user node.
struct Walk {
  std::vector<NodeId> nodes;

  NodeId start() const { return nodes.front(); }
  std::size_t hops() const { return nodes.empty() ? 0 : nodes.size() - 1; }

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

struct WalkSet {
  std::vector<Walk> walks;
  // Maximum number of walks allowed to share a start node.
  std::size_t augmentation = 1;
};

struct Violation {
  std::string invariant;
  std::string detail;
};

// Every broken invariant of the instance; empty iff the instance is well formed.
std::vector<Violation> validate(const Instance& instance);

std::string describe(const std::vector<Violation>& violations);

// Edges with at least one endpoint in `nodes`. Throws InputError on a bad index.
EdgeSet incident_edges(const SensingGraph& graph, std::span<const NodeId> nodes);

// Users within `social_hop_radius` hops of `user` in the social graph,
// excluding `user`, in increasing order.
std::vector<NodeId> social_neighborhood(const Instance& instance, NodeId user);

// A validated instance with derived adjacency. Immutable.
class Problem {
 public:
  // Throws InputError listing every violation when the instance is malformed.
  explicit Problem(Instance instance);

  const Instance& instance() const { return instance_; }
  const SensingGraph& sensing() const { return instance_.sensing; }

  std::size_t node_count() const { return instance_.sensing.node_count; }
  std::size_t user_count() const { return instance_.sensing.user_count; }
  std::size_t edge_count() const { return instance_.sensing.edges.size(); }
  bool all_nodes_are_users() const { return node_count() == user_count(); }

  bool uniform_weights() const { return !instance_.sensing.weighted(); }
  double edge_weight(EdgeIndex e) const { return instance_.sensing.weight(e); }
  // Empty when weights are uniform.
  std::span<const double> weights() const { return instance_.sensing.edge_weights; }
  double total_weight() const { return total_weight_; }

  std::span<const EdgeIndex> incident(NodeId v) const { return incident_[v]; }
  std::span<const NodeId> neighbors(NodeId v) const { return neighbors_[v]; }

  // {user} plus its social neighborhood, increasing order.
  std::span<const NodeId> social_closed(NodeId user) const { return social_closed_[user]; }

  bool has_preferences() const { return instance_.preferences.has_value(); }
  // Edges of interest to `user`; every edge when no preferences are set.
  const EdgeSet& interest(NodeId user) const {
    return has_preferences() ? interest_[user] : all_edges_;
  }

  // Throws InputError for invalid or duplicate indices.
  void check_selection(const Selection& selection) const;
  // Throws InputError if a walk is not a sensing-graph walk from a user node,
  // has the wrong length, or the augmentation cap is exceeded.
  void check_walks(const WalkSet& walks, std::optional<std::size_t> hops = std::nullopt) const;
  void check_walk(const Walk& walk, std::optional<std::size_t> hops = std::nullopt) const;

 private:
  Instance instance_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::vector<std::vector<NodeId>> neighbors_;
  std::vector<std::vector<NodeId>> social_closed_;
  std::vector<EdgeSet> interest_;
  EdgeSet all_edges_;
  double total_weight_ = 0.0;
};

}  // namespace poishare

#endif  // POISHARE_MODEL_HPP_
