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

#include "poishare/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "poishare/error.hpp"

namespace poishare {

double WelfareBreakdown::total() const {
  double s = 0.0;
  for (double v : per_user) s += v;
  return s;
}

WelfareBreakdown make_breakdown(std::vector<double> per_user) {
  WelfareBreakdown out;
  out.per_user = std::move(per_user);
  out.average = out.per_user.empty() ? 0.0 : out.total() / static_cast<double>(out.per_user.size());
  return out;
}

bool same_welfare(const WelfareBreakdown& a, const WelfareBreakdown& b, bool exact) {
  if (a.per_user.size() != b.per_user.size()) return false;
  auto close = [&](double x, double y) {
    if (exact) return x == y;
    return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
  };
  for (std::size_t i = 0; i < a.per_user.size(); ++i) {
    if (!close(a.per_user[i], b.per_user[i])) return false;
  }
  return close(a.average, b.average);
}

Route parse_route(std::string_view name) {
  if (name == "matrix") return Route::Matrix;
  if (name == "set") return Route::Set;
  if (name == "both") return Route::Both;
  throw InputError("unknown route '" + std::string(name) + "' (expected matrix|set|both)");
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::Matrix: return "matrix";
    case Route::Set: return "set";
    case Route::Both: return "both";
  }
  return "?";
}

Matrix sensing_matrix(const Problem& problem, const EdgeSet* only) {
  Matrix a(problem.node_count());
  const auto& edges = problem.sensing().edges;
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    if (only && !only->contains(e)) continue;
    const double w = problem.edge_weight(e);
    a(edges[e].u, edges[e].v) = w;
    a(edges[e].v, edges[e].u) = w;
  }
  return a;
}

SocialMatrix::SocialMatrix(const Problem& problem)
    : entries_(problem.node_count()), broadcast_(problem.node_count(), false) {
  for (NodeId i = 0; i < problem.node_count(); ++i) entries_(i, i) = 1.0;
  for (NodeId x = 0; x < problem.user_count(); ++x) {
    for (NodeId y : problem.social_closed(x)) entries_(x, y) = 1.0;
  }
}

void SocialMatrix::broadcast_row(NodeId h) {
  for (double& v : entries_.row(h)) v = 1.0;
  broadcast_[h] = true;
}

std::vector<std::size_t> SocialMatrix::kept(NodeId x) const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < entries_.dim(); ++l) {
    if (entries_(l, x) != 0.0) out.push_back(l);
  }
  return out;
}

MatrixTerms matrix_terms(const Matrix& sensing, const Matrix& product, const SocialMatrix& social,
                       NodeId x) {
  const auto kept = social.kept(x);
  MatrixTerms t;
  t.column_sum = product.column_sum(x);
  t.minor_half = 0.5 * (sensing.minor_sum(kept) - sensing.minor_trace(kept));
  return t;
}

namespace {

SocialMatrix updated_social(const Problem& problem, std::span<const NodeId> broadcasting) {
  SocialMatrix b(problem);
  for (NodeId h : broadcasting) b.broadcast_row(h);
  return b;
}

WelfareBreakdown matrix_route(const Problem& problem, std::span<const NodeId> broadcasting) {
  const SocialMatrix b = updated_social(problem, broadcasting);
  std::vector<double> phi(problem.user_count());
  if (!problem.has_preferences()) {
    const Matrix a = sensing_matrix(problem);
    const Matrix c = multiply(a, b.entries());
    for (NodeId x = 0; x < problem.user_count(); ++x) phi[x] = matrix_terms(a, c, b, x).phi();
  } else {
    for (NodeId x = 0; x < problem.user_count(); ++x) {
      const Matrix ax = sensing_matrix(problem, &problem.interest(x));
      const Matrix cx = multiply(ax, b.entries());
      phi[x] = matrix_terms(ax, cx, b, x).phi();
    }
  }
  return make_breakdown(std::move(phi));
}

WelfareBreakdown set_route(const Problem& problem, std::span<const NodeId> broadcasting) {
  const EdgeSet shared = incident_edges(problem.sensing(), broadcasting);
  std::vector<double> phi(problem.user_count());
  for (NodeId x = 0; x < problem.user_count(); ++x) {
    EdgeSet reach = incident_edges(problem.sensing(), problem.social_closed(x));
    reach |= shared;
    reach &= problem.interest(x);
    phi[x] = reach.weight(problem.weights());
  }
  return make_breakdown(std::move(phi));
}

void require_no_preferences(const Problem& problem) {
  if (problem.has_preferences()) {
    throw InputError("instance has preferences; use the preference-aware evaluation");
  }
}

WelfareBreakdown both_routes(const Problem& problem, std::span<const NodeId> broadcasting) {
  auto by_matrix = matrix_route(problem, broadcasting);
  auto by_set = set_route(problem, broadcasting);
  if (!same_welfare(by_matrix, by_set, problem.uniform_weights())) {
    throw CrosscheckError("matrix route welfare " + std::to_string(by_matrix.average) +
                          " differs from set route " + std::to_string(by_set.average));
  }
  return by_set;
}

WelfareBreakdown dispatch(const Problem& problem, std::span<const NodeId> broadcasting,
                          Route route) {
  switch (route) {
    case Route::Matrix: return matrix_route(problem, broadcasting);
    case Route::Set: return set_route(problem, broadcasting);
    case Route::Both: return both_routes(problem, broadcasting);
  }
  return set_route(problem, broadcasting);
}

}  // namespace

WelfareBreakdown phi_set_oracle(const Problem& problem, const Selection& selection) {
  problem.check_selection(selection);
  return set_route(problem, selection.users);
}

WelfareBreakdown phi_empty_matrix(const Problem& problem) {
  require_no_preferences(problem);
  return matrix_route(problem, {});
}

WelfareBreakdown phi_selection_matrix(const Problem& problem, const Selection& selection) {
  require_no_preferences(problem);
  problem.check_selection(selection);
  return matrix_route(problem, selection.users);
}

WelfareBreakdown phi_preferences_matrix(const Problem& problem, const Selection& selection) {
  if (!problem.has_preferences()) throw InputError("instance has no preferences");
  problem.check_selection(selection);
  return matrix_route(problem, selection.users);
}

std::vector<NodeId> visited_nodes(const WalkSet& walks) {
  std::vector<NodeId> out;
  for (const Walk& w : walks.walks) out.insert(out.end(), w.nodes.begin(), w.nodes.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WelfareBreakdown phi_walks_set(const Problem& problem, const WalkSet& walks) {
  problem.check_walks(walks);
  return set_route(problem, visited_nodes(walks));
}

WelfareBreakdown phi_walks_matrix(const Problem& problem, const WalkSet& walks) {
  problem.check_walks(walks);
  return matrix_route(problem, visited_nodes(walks));
}

WelfareBreakdown phi_static(const Problem& problem, const Selection& selection, Route route) {
  problem.check_selection(selection);
  return dispatch(problem, selection.users, route);
}

WelfareBreakdown phi_walks(const Problem& problem, const WalkSet& walks, Route route) {
  problem.check_walks(walks);
  return dispatch(problem, visited_nodes(walks), route);
}

double marginal_gain(const Problem& problem, const Selection& current, NodeId candidate) {
  problem.check_selection(current);
  if (candidate >= problem.user_count()) {
    throw InputError("candidate " + std::to_string(candidate) + " is not a user node");
  }
  CoverageState state(problem);
  state.add(current.users);
  const NodeId one[] = {candidate};
  return state.gain_total(one) / static_cast<double>(problem.user_count());
}

double marginal_gain(const Problem& problem, const WalkSet& current, const Walk& candidate) {
  WalkSet extended = current;
  extended.walks.push_back(candidate);
  problem.check_walks(extended);
  CoverageState state(problem);
  state.add(visited_nodes(current));
  return state.gain_total(candidate.nodes) / static_cast<double>(problem.user_count());
}

CoverageState::CoverageState(const Problem& problem)
    : problem_(&problem),
      edge_value_(problem.edge_count(), 0.0),
      broadcast_(problem.edge_count()),
      stamp_(problem.edge_count(), 0) {
  base_.reserve(problem.user_count());
  for (NodeId x = 0; x < problem.user_count(); ++x) {
    EdgeSet base = incident_edges(problem.sensing(), problem.social_closed(x));
    base &= problem.interest(x);
    base_total_ += base.weight(problem.weights());
    EdgeSet missing = problem.interest(x);
    missing.subtract(base);
    missing.for_each([&](EdgeIndex e) { edge_value_[e] += problem.edge_weight(e); });
    base_.push_back(std::move(base));
  }
  total_ = base_total_;
}

double CoverageState::gain_total(std::span<const NodeId> nodes) const {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  double gain = 0.0;
  for (NodeId v : nodes) {
    for (EdgeIndex e : problem_->incident(v)) {
      if (broadcast_.contains(e) || stamp_[e] == epoch_) continue;
      stamp_[e] = epoch_;
      gain += edge_value_[e];
    }
  }
  return gain;
}

void CoverageState::add(std::span<const NodeId> nodes) {
  total_ += gain_total(nodes);
  for (NodeId v : nodes) {
    for (EdgeIndex e : problem_->incident(v)) broadcast_.insert(e);
  }
}

double CoverageState::average() const {
  return total_ / static_cast<double>(problem_->user_count());
}

WelfareBreakdown CoverageState::breakdown() const {
  std::vector<double> phi(problem_->user_count());
  for (NodeId x = 0; x < problem_->user_count(); ++x) {
    EdgeSet reach = broadcast_;
    reach &= problem_->interest(x);
    reach |= base_[x];
    phi[x] = reach.weight(problem_->weights());
  }
  return make_breakdown(std::move(phi));
}

}  // namespace poishare
