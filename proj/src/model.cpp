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

#include "poishare/model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "poishare/error.hpp"

namespace poishare {
namespace {

std::pair<NodeId, NodeId> ordered(const Edge& e) { return std::minmax(e.u, e.v); }

std::string edge_str(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.u << "," << e.v << ")";
  return os.str();
}

void validate_sensing(const SensingGraph& g, std::vector<Violation>& out) {
  if (g.user_count < 1 || g.user_count > g.node_count) {
    out.push_back({"1 <= user_count <= node_count",
                   "user_count " + std::to_string(g.user_count) + ", node_count " +
                       std::to_string(g.node_count)});
  }
  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.u >= g.node_count || e.v >= g.node_count) {
      out.push_back({"sensing edge endpoint < node_count",
                     "edge " + std::to_string(i) + " " + edge_str(e)});
      continue;
    }
    if (e.u == e.v && !g.allow_self_loops) {
      out.push_back({"no sensing self-loops", "edge " + std::to_string(i) + " " + edge_str(e)});
    }
    if (!seen.insert(ordered(e)).second) {
      out.push_back({"no duplicate sensing edges",
                     "edge " + std::to_string(i) + " " + edge_str(e)});
    }
  }
  if (g.weighted()) {
    if (g.edge_weights.size() != g.edges.size()) {
      out.push_back({"one weight per sensing edge",
                     std::to_string(g.edge_weights.size()) + " weights for " +
                         std::to_string(g.edges.size()) + " edges"});
    } else {
      for (std::size_t i = 0; i < g.edge_weights.size(); ++i) {
        const double w = g.edge_weights[i];
        if (!(w > 0.0) || !std::isfinite(w)) {
          out.push_back({"edge weights are positive", "edge " + std::to_string(i)});
        }
      }
    }
  }
}

void validate_social(const Instance& inst, std::vector<Violation>& out) {
  const SocialGraph& s = inst.social;
  if (s.user_count != inst.sensing.user_count) {
    out.push_back({"user_count mismatch", "social " + std::to_string(s.user_count) +
                                              " vs sensing " +
                                              std::to_string(inst.sensing.user_count)});
  }
  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const Edge& e = s.edges[i];
    if (e.u >= s.user_count || e.v >= s.user_count) {
      out.push_back({"social edge endpoint < user_count",
                     "edge " + std::to_string(i) + " " + edge_str(e)});
      continue;
    }
    if (e.u == e.v) {
      out.push_back({"no social self-loops", "edge " + std::to_string(i) + " " + edge_str(e)});
    }
    if (!seen.insert(ordered(e)).second) {
      out.push_back({"no duplicate social edges",
                     "edge " + std::to_string(i) + " " + edge_str(e)});
    }
  }
}

void validate_preferences(const Instance& inst, std::vector<Violation>& out) {
  if (!inst.preferences) return;
  const auto& per_user = inst.preferences->per_user_edges;
  const SensingGraph& g = inst.sensing;
  if (per_user.size() != g.user_count) {
    out.push_back({"one preference set per user", std::to_string(per_user.size()) +
                                                      " sets for " +
                                                      std::to_string(g.user_count) + " users"});
    return;
  }
  for (std::size_t user = 0; user < per_user.size(); ++user) {
    std::set<EdgeIndex> interest;
    for (EdgeIndex e : per_user[user]) {
      if (e >= g.edges.size()) {
        out.push_back({"preference edge index valid",
                       "user " + std::to_string(user) + " edge " + std::to_string(e)});
      } else {
        interest.insert(e);
      }
    }
    for (EdgeIndex e = 0; e < g.edges.size(); ++e) {
      const Edge& edge = g.edges[e];
      if ((edge.u == user || edge.v == user) && !interest.contains(e)) {
        out.push_back({"incident edges are of interest",
                       "user v_" + std::to_string(user) + " misses incident edge " +
                           std::to_string(e) + " " + edge_str(edge)});
      }
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  validate_sensing(instance.sensing, out);
  validate_social(instance, out);
  validate_preferences(instance, out);
  if (instance.social_hop_radius < 1) {
    out.push_back({"social_hop_radius >= 1", "got 0"});
  }
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].invariant << ": " << violations[i].detail;
  }
  return os.str();
}

EdgeSet incident_edges(const SensingGraph& graph, std::span<const NodeId> nodes) {
  std::vector<char> member(graph.node_count, 0);
  for (NodeId v : nodes) {
    if (v >= graph.node_count) {
      throw InputError("node index " + std::to_string(v) + " out of range");
    }
    member[v] = 1;
  }
  EdgeSet out(graph.edges.size());
  for (EdgeIndex e = 0; e < graph.edges.size(); ++e) {
    const Edge& edge = graph.edges[e];
    if (member[edge.u] || member[edge.v]) out.insert(e);
  }
  return out;
}

std::vector<NodeId> social_neighborhood(const Instance& instance, NodeId user) {
  const std::size_t m = instance.social.user_count;
  if (user >= m) throw InputError("user index " + std::to_string(user) + " out of range");
  std::vector<std::vector<NodeId>> adj(m);
  for (const Edge& e : instance.social.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<unsigned> depth(m, ~0U);
  std::deque<NodeId> queue{user};
  depth[user] = 0;
  std::vector<NodeId> out;
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    if (depth[x] == instance.social_hop_radius) continue;
    for (NodeId y : adj[x]) {
      if (depth[y] != ~0U) continue;
      depth[y] = depth[x] + 1;
      out.push_back(y);
      queue.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Problem::Problem(Instance instance) : instance_(std::move(instance)) {
  if (auto violations = validate(instance_); !violations.empty()) {
    throw InputError("invalid instance: " + describe(violations));
  }
  const SensingGraph& g = instance_.sensing;
  incident_.resize(g.node_count);
  neighbors_.resize(g.node_count);
  for (EdgeIndex e = 0; e < g.edges.size(); ++e) {
    const Edge& edge = g.edges[e];
    incident_[edge.u].push_back(e);
    neighbors_[edge.u].push_back(edge.v);
    if (edge.v != edge.u) {
      incident_[edge.v].push_back(e);
      neighbors_[edge.v].push_back(edge.u);
    }
    total_weight_ += g.weight(e);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());

  social_closed_.resize(g.user_count);
  for (NodeId x = 0; x < g.user_count; ++x) {
    auto nb = social_neighborhood(instance_, x);
    nb.push_back(x);
    std::sort(nb.begin(), nb.end());
    social_closed_[x] = std::move(nb);
  }

  all_edges_ = EdgeSet(g.edges.size());
  for (EdgeIndex e = 0; e < g.edges.size(); ++e) all_edges_.insert(e);
  if (instance_.preferences) {
    interest_.reserve(g.user_count);
    for (const auto& edges : instance_.preferences->per_user_edges) {
      EdgeSet s(g.edges.size());
      for (EdgeIndex e : edges) s.insert(e);
      interest_.push_back(std::move(s));
    }
  }
}

void Problem::check_selection(const Selection& selection) const {
  std::vector<char> seen(user_count(), 0);
  for (NodeId u : selection.users) {
    if (u >= user_count()) {
      throw InputError("selected user " + std::to_string(u) + " is not a user node");
    }
    if (seen[u]) throw InputError("user " + std::to_string(u) + " selected twice");
    seen[u] = 1;
  }
}

void Problem::check_walk(const Walk& walk, std::optional<std::size_t> hops) const {
  if (walk.nodes.empty()) throw InputError("empty walk");
  for (NodeId v : walk.nodes) {
    if (v >= node_count()) throw InputError("walk node " + std::to_string(v) + " out of range");
  }
  if (walk.start() >= user_count()) {
    throw InputError("walk starts at non-user node " + std::to_string(walk.start()));
  }
  if (hops && walk.hops() != *hops) {
    throw InputError("walk has " + std::to_string(walk.hops()) + " edges, expected " +
                     std::to_string(*hops));
  }
  for (std::size_t i = 0; i + 1 < walk.nodes.size(); ++i) {
    const auto nb = neighbors(walk.nodes[i]);
    if (!std::binary_search(nb.begin(), nb.end(), walk.nodes[i + 1])) {
      throw InputError("walk steps along a non-edge (" + std::to_string(walk.nodes[i]) + "," +
                       std::to_string(walk.nodes[i + 1]) + ")");
    }
  }
}

void Problem::check_walks(const WalkSet& walks, std::optional<std::size_t> hops) const {
  if (walks.augmentation < 1) throw InputError("augmentation factor must be >= 1");
  std::vector<std::size_t> per_start(user_count(), 0);
  for (const Walk& w : walks.walks) {
    check_walk(w, hops);
    if (++per_start[w.start()] > walks.augmentation) {
      throw InputError("start node " + std::to_string(w.start()) + " used by more than " +
                       std::to_string(walks.augmentation) + " walks");
    }
  }
}

}  // namespace poishare
