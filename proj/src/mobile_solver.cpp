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

#include "poishare/mobile_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "poishare/error.hpp"

namespace poishare {
namespace {

void dfs_walks(const Problem& problem, WalkMode mode, std::size_t hops, std::vector<NodeId>& path,
               std::vector<char>& on_path, std::vector<Walk>& out, std::uint64_t cap) {
  if (path.size() == hops + 1) {
    if (out.size() >= cap) throw CapExceededError("walk space", cap);
    out.push_back(Walk{path});
    return;
  }
  for (NodeId next : problem.neighbors(path.back())) {
    if (mode == WalkMode::SimplePaths && on_path[next]) continue;
    path.push_back(next);
    on_path[next] = 1;
    dfs_walks(problem, mode, hops, path, on_path, out, cap);
    on_path[next] = 0;
    path.pop_back();
  }
}

std::vector<NodeId> distinct_nodes(const Walk& w) {
  std::vector<NodeId> nodes = w.nodes;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

void check_augmentation(std::size_t k, std::size_t g) {
  if (k < 1) throw InputError("budget k must be >= 1");
  if (g < 1 || g > k) {
    throw InputError("augmentation factor g=" + std::to_string(g) + " must satisfy 1 <= g <= k=" +
                     std::to_string(k));
  }
}

}  // namespace

WalkSpace enumerate_walks(const Problem& problem, std::size_t hops, WalkMode mode,
                          std::uint64_t cap) {
  if (hops == 0) throw InputError("walk length n must be >= 1");
  WalkSpace space;
  space.hops = hops;
  space.by_start.resize(problem.user_count());
  std::vector<char> on_path(problem.node_count(), 0);
  for (NodeId start = 0; start < problem.user_count(); ++start) {
    const std::size_t first = space.candidates.size();
    std::vector<NodeId> path{start};
    on_path[start] = 1;
    dfs_walks(problem, mode, hops, path, on_path, space.candidates, cap);
    on_path[start] = 0;
    for (std::size_t i = first; i < space.candidates.size(); ++i) space.by_start[start].push_back(i);
  }
  return space;
}

MobileResult gps_on_space(const Problem& problem, const WalkSpace& space, std::size_t k,
                          std::size_t g, const GpsOptions& options) {
  check_augmentation(k, g);
  const double m = static_cast<double>(problem.user_count());
  const std::size_t count = space.candidates.size();
  std::vector<std::vector<NodeId>> nodes(count);
  for (std::size_t i = 0; i < count; ++i) nodes[i] = distinct_nodes(space.candidates[i]);

  std::vector<char> active(count, 1);
  std::vector<std::size_t> per_start(problem.user_count(), 0);
  CoverageState state(problem);
  MobileResult out;
  out.walks.augmentation = g;
  double current_total = state.total();

  auto matrix_total = [&](const WalkSet& ws) { return phi_walks(problem, ws, Route::Matrix).total(); };

  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best = count;
    double best_gain = -1.0;
    for (std::size_t i = 0; i < count; ++i) {
      if (!active[i]) continue;
      double gain;
      if (options.route == Route::Matrix) {
        WalkSet trial = out.walks;
        trial.walks.push_back(space.candidates[i]);
        gain = matrix_total(trial) - current_total;
      } else {
        gain = state.gain_total(nodes[i]);
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == count) {
      throw InfeasibleError("only " + std::to_string(step) + " of k=" + std::to_string(k) +
                            " walks could be selected under augmentation g=" + std::to_string(g));
    }
    const Walk& chosen = space.candidates[best];
    active[best] = 0;
    state.add(nodes[best]);
    out.walks.walks.push_back(chosen);
    out.trace.push_back({chosen, best_gain / m});
    current_total += best_gain;

    if (options.route == Route::Both) {
      const auto by_matrix = phi_walks(problem, out.walks, Route::Matrix);
      if (!same_welfare(by_matrix, state.breakdown(), problem.uniform_weights())) {
        throw CrosscheckError("matrix and set routes disagree after selecting a walk from node " +
                              std::to_string(chosen.start()));
      }
    }

    const NodeId start = chosen.start();
    if (++per_start[start] == g && step + 1 < k) {
      for (std::size_t i : space.by_start[start]) active[i] = 0;
      out.pruned_starts.push_back(start);
    }
  }
  out.welfare = options.route == Route::Matrix ? phi_walks(problem, out.walks, Route::Matrix)
                                               : state.breakdown();
  return out;
}

MobileResult gps(const Problem& problem, std::size_t hops, std::size_t k, std::size_t g,
                 const GpsOptions& options) {
  check_augmentation(k, g);
  return gps_on_space(problem, enumerate_walks(problem, hops, options.mode), k, g, options);
}

WalkSet intermediate_solution(const MobileResult& unrestricted, std::size_t g) {
  WalkSet out;
  out.augmentation = g;
  std::unordered_map<NodeId, std::size_t> taken;
  for (const Walk& w : unrestricted.walks.walks) {
    if (taken[w.start()]++ < g) out.walks.push_back(w);
  }
  return out;
}

namespace {

// Extends `prefix` to `hops` edges, stepping each time to the smallest
// neighbor inside `allowed`, or the smallest neighbor at all if none is.
bool extend_walk(const Problem& problem, std::vector<NodeId>& nodes, std::size_t hops,
                 const std::vector<char>& allowed) {
  while (nodes.size() < hops + 1) {
    const auto nb = problem.neighbors(nodes.back());
    if (nb.empty()) return false;
    auto inside = std::find_if(nb.begin(), nb.end(), [&](NodeId v) { return allowed[v] != 0; });
    nodes.push_back(inside != nb.end() ? *inside : nb.front());
  }
  return true;
}

}  // namespace

MobileResult adjust_to_distinct_starts(const Problem& problem, const MobileResult& unrestricted,
                                       std::size_t hops) {
  if (!problem.all_nodes_are_users()) {
    throw InputError("distinct-start adjustment requires every sensing node to be a user node (" +
                     std::to_string(problem.node_count() - problem.user_count()) +
                     " non-user nodes present)");
  }
  const auto& selected = unrestricted.walks.walks;
  const std::size_t k = selected.size();

  std::vector<char> visited(problem.node_count(), 0);
  for (NodeId v : visited_nodes(unrestricted.walks)) visited[v] = 1;

  // Classes by start node, ordered by their first selection.
  std::vector<NodeId> class_order;
  std::unordered_map<NodeId, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < k; ++i) {
    auto& members = classes[selected[i].start()];
    if (members.empty()) class_order.push_back(selected[i].start());
    members.push_back(i);
  }

  MobileResult out;
  out.walks.augmentation = 1;
  out.trace = unrestricted.trace;
  std::vector<char> is_start(problem.node_count(), 0);
  for (NodeId s : class_order) {
    out.walks.walks.push_back(selected[classes[s].front()]);
    is_start[s] = 1;
  }
  for (NodeId s : class_order) {
    const auto& members = classes[s];
    for (std::size_t j = 1; j < members.size(); ++j) {
      const Walk& p = selected[members[j]];
      auto fresh = std::find_if(p.nodes.begin(), p.nodes.end(),
                                [&](NodeId v) { return is_start[v] == 0; });
      if (fresh == p.nodes.end()) continue;
      std::vector<NodeId> nodes(fresh, p.nodes.end());
      extend_walk(problem, nodes, hops, visited);
      is_start[nodes.front()] = 1;
      out.walks.walks.push_back(Walk{std::move(nodes)});
    }
  }

  // Every node of a skipped walk was already a start, so fewer than k walks
  // may remain. Fill from unused nodes, preferring ones already visited so the
  // visited set is unchanged.
  for (int pass = 0; pass < 2 && out.walks.walks.size() < k; ++pass) {
    for (NodeId u = 0; u < problem.user_count() && out.walks.walks.size() < k; ++u) {
      if (is_start[u] || (pass == 0 && !visited[u])) continue;
      std::vector<NodeId> nodes{u};
      if (!extend_walk(problem, nodes, hops, visited)) continue;
      is_start[u] = 1;
      out.walks.walks.push_back(Walk{std::move(nodes)});
    }
  }
  if (out.walks.walks.size() < k) {
    throw InfeasibleError("cannot place " + std::to_string(k) +
                          " walks on pairwise-distinct start nodes");
  }
  out.welfare = phi_walks(problem, out.walks, Route::Set);
  return out;
}

MobileResult adjusted_gps(const Problem& problem, std::size_t hops, std::size_t k,
                          const GpsOptions& options) {
  if (!problem.all_nodes_are_users()) {
    throw InputError("adjusted GPS requires a sensing graph of user nodes only (" +
                     std::to_string(problem.node_count() - problem.user_count()) +
                     " non-user nodes present)");
  }
  const MobileResult unrestricted = gps(problem, hops, k, k, options);
  return adjust_to_distinct_starts(problem, unrestricted, hops);
}

namespace {

class MobileEnumerator {
 public:
  MobileEnumerator(const Problem& problem, const WalkSpace& space, std::size_t k, std::size_t g,
                   std::uint64_t cap)
      : problem_(problem), space_(space), k_(k), g_(g), cap_(cap), empty_(problem),
        per_start_(problem.user_count(), 0) {
    const std::size_t count = space.candidates.size();
    nodes_.resize(count);
    for (std::size_t i = 0; i < count; ++i) nodes_[i] = distinct_nodes(space.candidates[i]);
    use_masks_ = problem.node_count() <= 64;
    if (use_masks_) {
      masks_.resize(count, 0);
      for (std::size_t i = 0; i < count; ++i)
        for (NodeId v : nodes_[i]) masks_[i] |= std::uint64_t{1} << v;
    }
  }

  std::vector<std::size_t> run() {
    search(0, 0);
    if (best_.empty() && k_ > 0) {
      throw InfeasibleError("no " + std::to_string(k_) + " walks satisfy augmentation g=" +
                            std::to_string(g_));
    }
    return best_;
  }

 private:
  double value(std::uint64_t mask) {
    if (use_masks_) {
      auto it = memo_.find(mask);
      if (it != memo_.end()) return it->second;
      std::vector<NodeId> nodes;
      for (NodeId v = 0; v < problem_.node_count(); ++v)
        if ((mask >> v) & 1U) nodes.push_back(v);
      const double total = empty_.empty_total() + empty_.gain_total(nodes);
      memo_.emplace(mask, total);
      return total;
    }
    std::vector<NodeId> nodes;
    for (std::size_t i : chosen_) nodes.insert(nodes.end(), nodes_[i].begin(), nodes_[i].end());
    return empty_.empty_total() + empty_.gain_total(nodes);
  }

  void search(std::size_t from, std::uint64_t mask) {
    if (chosen_.size() == k_) {
      if (++evaluated_ > cap_) throw CapExceededError("walk subsets", cap_);
      const double total = value(mask);
      if (total > best_total_) {
        best_total_ = total;
        best_ = chosen_;
      }
      return;
    }
    const std::size_t count = space_.candidates.size();
    for (std::size_t i = from; i + (k_ - chosen_.size()) <= count; ++i) {
      const NodeId s = space_.candidates[i].start();
      if (per_start_[s] == g_) continue;
      ++per_start_[s];
      chosen_.push_back(i);
      search(i + 1, use_masks_ ? (mask | masks_[i]) : 0);
      chosen_.pop_back();
      --per_start_[s];
    }
  }

  const Problem& problem_;
  const WalkSpace& space_;
  std::size_t k_;
  std::size_t g_;
  std::uint64_t cap_;
  CoverageState empty_;
  std::vector<std::size_t> per_start_;
  std::vector<std::vector<NodeId>> nodes_;
  std::vector<std::uint64_t> masks_;
  bool use_masks_ = false;
  std::unordered_map<std::uint64_t, double> memo_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  double best_total_ = -1.0;
  std::uint64_t evaluated_ = 0;
};

}  // namespace

MobileResult brute_force_mobile_on_space(const Problem& problem, const WalkSpace& space,
                                         std::size_t k, std::size_t g, std::uint64_t cap) {
  check_augmentation(k, g);
  const auto best = MobileEnumerator(problem, space, k, g, cap).run();
  MobileResult out;
  out.walks.augmentation = g;
  for (std::size_t i : best) out.walks.walks.push_back(space.candidates[i]);
  out.welfare = phi_walks(problem, out.walks, Route::Set);
  return out;
}

MobileResult brute_force_mobile(const Problem& problem, std::size_t hops, std::size_t k,
                                std::size_t g, std::uint64_t cap, WalkMode mode) {
  check_augmentation(k, g);
  return brute_force_mobile_on_space(problem, enumerate_walks(problem, hops, mode), k, g, cap);
}

double ub2(const Problem& problem, std::size_t hops, std::size_t k, std::uint64_t cap) {
  const CoverageState empty(problem);
  std::vector<NodeId> all(problem.node_count());
  std::iota(all.begin(), all.end(), NodeId{0});
  const std::size_t picks = std::min(hops * k, problem.node_count());
  return empty.average() + coverage_upper_bound(problem, all, picks, cap).value;
}

double mobile_bound(std::size_t k, std::size_t sensing_nodes, std::size_t g) {
  check_augmentation(k, g);
  if (sensing_nodes < 1) throw InputError("mobile_bound requires at least one sensing node");
  const double kd = static_cast<double>(k);
  const double w = static_cast<double>(sensing_nodes);
  return static_cast<double>(g) / kd * (1.0 - (w - 2.0) / w * std::pow((kd - 1.0) / kd, kd));
}

Instance mobile_reduction_instance(const Instance& static_instance, std::size_t hops) {
  if (hops == 0) throw InputError("walk length n must be >= 1");
  if (static_instance.preferences) {
    throw InputError("the mobile reduction is defined for instances without preferences");
  }
  if (auto violations = validate(static_instance); !violations.empty()) {
    throw InputError("invalid static instance: " + describe(violations));
  }
  const SensingGraph& g = static_instance.sensing;
  const std::size_t fan = g.edges.size();
  const std::size_t block = hops + fan;

  Instance out = static_instance;
  SensingGraph& s = out.sensing;
  s.node_count = g.node_count + g.user_count * block;
  for (NodeId user = 0; user < g.user_count; ++user) {
    const NodeId base = g.node_count + user * block;
    NodeId prev = user;
    for (std::size_t j = 0; j < hops; ++j) {
      s.edges.push_back({prev, base + j});
      prev = base + j;
    }
    for (std::size_t j = 0; j < fan; ++j) s.edges.push_back({prev, base + hops + j});
  }
  if (g.weighted()) s.edge_weights.resize(s.edges.size(), 1.0);
  return out;
}

WalkSet reduction_tail_walks(const Instance& static_instance, std::size_t hops,
                             const Selection& users) {
  const SensingGraph& g = static_instance.sensing;
  const std::size_t block = hops + g.edges.size();
  WalkSet out;
  for (NodeId user : users.users) {
    if (user >= g.user_count) throw InputError("user " + std::to_string(user) + " out of range");
    Walk w;
    w.nodes.push_back(user);
    const NodeId base = g.node_count + user * block;
    for (std::size_t j = 0; j < hops; ++j) w.nodes.push_back(base + j);
    out.walks.push_back(std::move(w));
  }
  return out;
}

}  // namespace poishare
