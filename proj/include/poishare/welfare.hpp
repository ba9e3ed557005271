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

// Welfare evaluation. User x can access the PoI on every edge incident to
// {x}, its social neighborhood, and every broadcasting node (selected users or
// nodes visited by selected walks); phi_x is the (weighted) number of such
// edges within x's interest set and the welfare is the average over users.
//
// Three routes compute the same quantity:
//   * the matrix route: C = A * B with row-broadcast updates to B and a
//     per-user minor correction,
//   * the set oracle: direct edge-set unions per user,
//   * CoverageState: incremental bookkeeping used by the greedy solvers.
// Under unit weights all three are integer-exact.

#ifndef POISHARE_WELFARE_HPP_
#define POISHARE_WELFARE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "poishare/edge_set.hpp"
#include "poishare/matrix.hpp"
#include "poishare/model.hpp"

namespace poishare {

struct WelfareBreakdown {
  std::vector<double> per_user;
  double average = 0.0;

  double total() const;
};

// Averages in index order so that equal per-user vectors give bit-equal averages.
WelfareBreakdown make_breakdown(std::vector<double> per_user);

// Exact under unit weights, 1e-9 relative otherwise.
bool same_welfare(const WelfareBreakdown& a, const WelfareBreakdown& b, bool exact);

enum class Route { Matrix, Set, Both };

Route parse_route(std::string_view name);
std::string_view route_name(Route route);

// Symmetric sensing matrix over all sensing nodes. Entry (i,j) is the weight of
// edge (i,j); a self-loop puts its weight on the diagonal. If `only` is given,
// edges outside it are left out.
Matrix sensing_matrix(const Problem& problem, const EdgeSet* only = nullptr);

// Social matrix over all sensing nodes. Before updates, entry (i,j) is 1 iff
// i == j or i, j are users within the social hop radius of each other.
// Broadcasting node h overwrites row h with ones and leaves column h alone.
class SocialMatrix {
 public:
  explicit SocialMatrix(const Problem& problem);

  void broadcast_row(NodeId h);

  const Matrix& entries() const { return entries_; }
  bool row_broadcast(NodeId h) const { return broadcast_[h]; }

  // Indices of non-zero entries in column x: the nodes whose incident edges
  // reach x. Complement of the zero-index set used to cut the minor.
  std::vector<std::size_t> kept(NodeId x) const;

 private:
  Matrix entries_;
  std::vector<bool> broadcast_;
};

struct MatrixTerms {
  double column_sum = 0.0;      // sum_j c_{j,x}
  double minor_half = 0.0;      // (1/2) * (sum of minor off-diagonal entries)
  double phi() const { return column_sum - minor_half; }
};

// Per-user decomposition for a sensing matrix and an (updated) social matrix.
// The minor correction excludes the diagonal so that self-loop weights count once.
MatrixTerms matrix_terms(const Matrix& sensing, const Matrix& product, const SocialMatrix& social,
                       NodeId x);

WelfareBreakdown phi_set_oracle(const Problem& problem, const Selection& selection);

// Welfare before any broadcast. Requires no preferences.
WelfareBreakdown phi_empty_matrix(const Problem& problem);
// Requires no preferences.
WelfareBreakdown phi_selection_matrix(const Problem& problem, const Selection& selection);
// Requires preferences: a per-user sensing matrix built from that user's interest.
WelfareBreakdown phi_preferences_matrix(const Problem& problem, const Selection& selection);

WelfareBreakdown phi_walks_set(const Problem& problem, const WalkSet& walks);
WelfareBreakdown phi_walks_matrix(const Problem& problem, const WalkSet& walks);

// Route::Both evaluates both and throws CrosscheckError if they disagree.
WelfareBreakdown phi_static(const Problem& problem, const Selection& selection,
                            Route route = Route::Set);
WelfareBreakdown phi_walks(const Problem& problem, const WalkSet& walks,
                           Route route = Route::Both);

double marginal_gain(const Problem& problem, const Selection& current, NodeId candidate);
double marginal_gain(const Problem& problem, const WalkSet& current, const Walk& candidate);

// Nodes visited by any walk, increasing.
std::vector<NodeId> visited_nodes(const WalkSet& walks);

// Incremental evaluator. Keeps the set of broadcast edges and, for every edge,
// the weighted number of users who would newly gain it. Single owner.
class CoverageState {
 public:
  explicit CoverageState(const Problem& problem);

  // Increase of sum_x phi_x if `nodes` started broadcasting.
  double gain_total(std::span<const NodeId> nodes) const;
  void add(std::span<const NodeId> nodes);

  double total() const { return total_; }
  double average() const;
  double empty_total() const { return base_total_; }

  WelfareBreakdown breakdown() const;
  const EdgeSet& broadcast() const { return broadcast_; }

 private:
  const Problem* problem_;
  std::vector<EdgeSet> base_;
  std::vector<double> edge_value_;
  double base_total_ = 0.0;
  double total_ = 0.0;
  EdgeSet broadcast_;
  mutable std::vector<std::uint32_t> stamp_;
  mutable std::uint32_t epoch_ = 0;
};

}  // namespace poishare

#endif  // POISHARE_WELFARE_HPP_
