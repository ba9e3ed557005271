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

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oracle {

std::vector<bool> closed_social_ball(const Instance& inst, NodeId user) {
  const std::size_t m = inst.sensing.user_count;
  std::vector<bool> in(m, false);
  in[user] = true;
  for (unsigned r = 0; r < inst.social_hop_radius; ++r) {
    std::vector<bool> next = in;
    for (const Edge& e : inst.social.edges) {
      if (in[e.u]) next[e.v] = true;
      if (in[e.v]) next[e.u] = true;
    }
    in = next;
  }
  return in;
}

std::vector<double> phi_per_user(const Instance& inst, const std::vector<NodeId>& broadcasting) {
  const auto& g = inst.sensing;
  const std::size_t m = g.user_count;
  std::vector<bool> broadcast(g.node_count, false);
  for (NodeId v : broadcasting) broadcast[v] = true;
  std::vector<double> out(m, 0.0);
  for (NodeId x = 0; x < m; ++x) {
    const auto ball = closed_social_ball(inst, x);
    auto sees_node = [&](NodeId v) { return broadcast[v] || (v < m && ball[v]); };
    std::set<std::size_t> wanted;
    if (inst.preferences) {
      wanted.insert(inst.preferences->per_user_edges[x].begin(),
                    inst.preferences->per_user_edges[x].end());
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (inst.preferences && !wanted.count(e)) continue;
      if (sees_node(g.edges[e].u) || sees_node(g.edges[e].v)) {
        out[x] += g.edge_weights.empty() ? 1.0 : g.edge_weights[e];
      }
    }
  }
  return out;
}

double phi(const Instance& inst, const std::vector<NodeId>& broadcasting) {
  const auto per_user = phi_per_user(inst, broadcasting);
  double total = 0.0;
  for (double v : per_user) total += v;
  return total / static_cast<double>(per_user.size());
}

std::vector<NodeId> visited(const std::vector<std::vector<NodeId>>& walks) {
  std::set<NodeId> nodes;
  for (const auto& w : walks) nodes.insert(w.begin(), w.end());
  return {nodes.begin(), nodes.end()};
}

std::vector<std::vector<NodeId>> all_walks(const Instance& inst, std::size_t hops) {
  const auto& g = inst.sensing;
  std::vector<std::set<NodeId>> adjacent(g.node_count);
  for (const Edge& e : g.edges) {
    adjacent[e.u].insert(e.v);
    adjacent[e.v].insert(e.u);
  }
  std::vector<std::vector<NodeId>> layer;
  for (NodeId u = 0; u < g.user_count; ++u) layer.push_back({u});
  for (std::size_t h = 0; h < hops; ++h) {
    std::vector<std::vector<NodeId>> next;
    for (const auto& prefix : layer) {
      for (NodeId v : adjacent[prefix.back()]) {
        auto w = prefix;
        w.push_back(v);
        next.push_back(std::move(w));
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

double best_walk_subset(const Instance& inst, const std::vector<std::vector<NodeId>>& walks,
                        std::size_t k, std::size_t g) {
  double best = -1.0;
  for_each_subset(walks.size(), k, [&](const std::vector<NodeId>& pick) {
    std::map<NodeId, std::size_t> per_start;
    std::vector<std::vector<NodeId>> chosen;
    for (NodeId i : pick) {
      if (++per_start[walks[i].front()] > g) return;
      chosen.push_back(walks[i]);
    }
    best = std::max(best, phi(inst, visited(chosen)));
  });
  return best;
}

double best_user_subset(const Instance& inst, std::size_t k) {
  double best = -1.0;
  for_each_subset(inst.sensing.user_count, k,
                  [&](const std::vector<NodeId>& pick) { best = std::max(best, phi(inst, pick)); });
  return best;
}

double best_coverage(const Instance& inst, const std::vector<NodeId>& candidates, std::size_t k) {
  const auto& g = inst.sensing;
  k = std::min(k, candidates.size());
  double best = 0.0;
  for_each_subset(candidates.size(), k, [&](const std::vector<NodeId>& pick) {
    std::set<NodeId> nodes;
    for (NodeId i : pick) nodes.insert(candidates[i]);
    double covered = 0.0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (nodes.count(g.edges[e].u) || nodes.count(g.edges[e].v)) {
        covered += g.edge_weights.empty() ? 1.0 : g.edge_weights[e];
      }
    }
    best = std::max(best, covered);
  });
  return best;
}

bool has_vertex_cover(std::size_t node_count, const std::vector<Edge>& edges, std::size_t k) {
  for (unsigned mask = 0; mask < (1U << node_count); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
    bool covers = true;
    for (const Edge& e : edges) {
      if (!((mask >> e.u) & 1U) && !((mask >> e.v) & 1U)) {
        covers = false;
        break;
      }
    }
    if (covers) return true;
  }
  return false;
}

}  // namespace oracle
