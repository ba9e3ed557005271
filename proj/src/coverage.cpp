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

#include "poishare/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "poishare/error.hpp"

namespace poishare {

CoverageMode parse_coverage_mode(std::string_view name) {
  if (name == "greedy") return CoverageMode::Greedy;
  if (name == "exact") return CoverageMode::Exact;
  throw InputError("unknown coverage mode '" + std::string(name) + "' (expected greedy|exact)");
}

namespace {

// Edge cover multiplicities so that nodes can be added and removed.
class CoverCounter {
 public:
  explicit CoverCounter(const Problem& problem)
      : problem_(problem), hits_(problem.edge_count(), 0) {}

  double gain(NodeId v) const {
    double g = 0.0;
    for (EdgeIndex e : problem_.incident(v)) {
      if (hits_[e] == 0) g += problem_.edge_weight(e);
    }
    return g;
  }

  double add(NodeId v) {
    double g = 0.0;
    for (EdgeIndex e : problem_.incident(v)) {
      if (hits_[e]++ == 0) g += problem_.edge_weight(e);
    }
    return g;
  }

  void remove(NodeId v) {
    for (EdgeIndex e : problem_.incident(v)) --hits_[e];
  }

 private:
  const Problem& problem_;
  std::vector<unsigned> hits_;
};

std::vector<NodeId> sorted_unique(std::span<const NodeId> candidates, const Problem& problem) {
  std::vector<NodeId> c(candidates.begin(), candidates.end());
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (NodeId v : c) {
    if (v >= problem.node_count()) {
      throw InputError("coverage candidate " + std::to_string(v) + " out of range");
    }
  }
  return c;
}

CoverageResult greedy(const Problem& problem, const std::vector<NodeId>& cands, std::size_t k) {
  CoverCounter counter(problem);
  std::vector<char> used(cands.size(), 0);
  CoverageResult out;
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best = cands.size();
    double best_gain = -1.0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (used[i]) continue;
      const double g = counter.gain(cands[i]);
      if (g > best_gain) {
        best_gain = g;
        best = i;
      }
    }
    if (best == cands.size()) break;
    used[best] = 1;
    out.covered += counter.add(cands[best]);
    out.nodes.push_back(cands[best]);
  }
  return out;
}

class BranchAndBound {
 public:
  BranchAndBound(const Problem& problem, std::vector<NodeId> order, std::size_t k,
                 std::uint64_t cap)
      : problem_(problem), order_(std::move(order)), k_(k), cap_(cap), counter_(problem) {}

  CoverageResult run(const CoverageResult& incumbent) {
    best_ = incumbent.covered;
    best_nodes_ = incumbent.nodes;
    search(0, 0.0);
    CoverageResult out;
    out.nodes = best_nodes_;
    std::sort(out.nodes.begin(), out.nodes.end());
    out.covered = best_;
    out.search_nodes = visited_;
    return out;
  }

 private:
  void search(std::size_t idx, double value) {
    if (++visited_ > cap_) throw CapExceededError("exact maximum coverage search", cap_);
    if (value > best_) {
      best_ = value;
      best_nodes_ = chosen_;
    }
    if (chosen_.size() == k_ || idx == order_.size()) return;

    // Coverage-sum bound: the remaining picks can add at most the sum of the
    // largest individual marginal gains among the remaining candidates.
    gains_.clear();
    for (std::size_t i = idx; i < order_.size(); ++i) gains_.push_back(counter_.gain(order_[i]));
    const std::size_t need = std::min(k_ - chosen_.size(), gains_.size());
    std::partial_sort(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(need),
                      gains_.end(), std::greater<>());
    double bound = value;
    for (std::size_t i = 0; i < need; ++i) bound += gains_[i];
    if (bound <= best_) return;

    const NodeId v = order_[idx];
    const double g = counter_.add(v);
    chosen_.push_back(v);
    search(idx + 1, value + g);
    chosen_.pop_back();
    counter_.remove(v);
    search(idx + 1, value);
  }

  const Problem& problem_;
  std::vector<NodeId> order_;
  std::size_t k_;
  std::uint64_t cap_;
  CoverCounter counter_;
  std::vector<NodeId> chosen_;
  std::vector<NodeId> best_nodes_;
  std::vector<double> gains_;
  double best_ = 0.0;
  std::uint64_t visited_ = 0;
};

}  // namespace

CoverageResult max_coverage(const Problem& problem, std::span<const NodeId> candidates,
                            std::size_t k, CoverageMode mode, std::uint64_t cap) {
  const auto cands = sorted_unique(candidates, problem);
  k = std::min(k, cands.size());
  CoverageResult incumbent = greedy(problem, cands, k);
  if (mode == CoverageMode::Greedy) return incumbent;

  std::vector<NodeId> order = cands;
  std::vector<double> degree_weight(problem.node_count(), 0.0);
  for (NodeId v : order) {
    for (EdgeIndex e : problem.incident(v)) degree_weight[v] += problem.edge_weight(e);
  }
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return degree_weight[a] > degree_weight[b];
  });
  return BranchAndBound(problem, std::move(order), k, cap).run(incumbent);
}

CoverageBound coverage_upper_bound(const Problem& problem, std::span<const NodeId> candidates,
                                   std::size_t k, std::uint64_t cap) {
  if (k == 0) return {0.0, true};
  try {
    return {max_coverage(problem, candidates, k, CoverageMode::Exact, cap).covered, true};
  } catch (const CapExceededError&) {
    const double greedy_value = max_coverage(problem, candidates, k, CoverageMode::Greedy).covered;
    const double inflated = greedy_value / (1.0 - 1.0 / std::numbers::e);
    return {std::min(inflated, problem.total_weight()), false};
  }
}

}  // namespace poishare
