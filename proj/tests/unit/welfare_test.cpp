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

#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "poishare/error.hpp"
#include "poishare/welfare.hpp"
#include "random_instances.hpp"

using namespace poishare;
using doctest::Approx;
using fixtures::make;
using fixtures::path3;

TEST_CASE("set oracle on the path") {
  const Problem problem(path3());
  auto empty = phi_set_oracle(problem, {});
  CHECK(empty.per_user == std::vector<double>{1, 2, 1});
  CHECK(empty.average == Approx(4.0 / 3.0));
  auto center = phi_set_oracle(problem, {{1}});
  CHECK(center.per_user == std::vector<double>{2, 2, 2});
  CHECK(center.average == 2.0);
  const Problem social(make(3, 3, {{0, 1}, {1, 2}}, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(phi_set_oracle(social, {}).average == 2.0);
}

TEST_CASE("matrix route on the path") {
  const Problem problem(path3());
  const Matrix a = sensing_matrix(problem);
  CHECK(a(0, 1) == 1.0);
  CHECK(a(1, 2) == 1.0);
  CHECK(a(0, 2) == 0.0);
  CHECK(a(1, 1) == 0.0);
  CHECK(a.symmetric());
  const auto phi = phi_empty_matrix(problem);
  CHECK(phi.per_user == std::vector<double>{1, 2, 1});

  // One friendship: the shared edge is counted twice in C and removed once.
  const Problem shared(make(3, 3, {{0, 1}, {1, 2}}, {{0, 1}}));
  SocialMatrix b(shared);
  const Matrix sa = sensing_matrix(shared);
  const Matrix c = multiply(sa, b.entries());
  const MatrixTerms t = matrix_terms(sa, c, b, 0);
  CHECK(t.column_sum == 3.0);
  CHECK(t.minor_half == 1.0);
  CHECK(t.phi() == 2.0);
}

TEST_CASE("social matrix broadcast rewrites rows only") {
  const Problem problem(make(3, 3, {{0, 1}, {1, 2}}, {{0, 1}}));
  SocialMatrix b(problem);
  CHECK(b.entries().symmetric());
  CHECK(b.entries()(0, 0) == 1.0);
  CHECK(b.entries()(0, 1) == 1.0);
  CHECK(b.entries()(0, 2) == 0.0);
  b.broadcast_row(2);
  for (std::size_t j = 0; j < 3; ++j) CHECK(b.entries()(2, j) == 1.0);
  CHECK(b.entries()(0, 2) == 0.0);
  CHECK(!b.entries().symmetric());
}

TEST_CASE("selection matrix examples") {
  const Problem problem(path3());
  CHECK(phi_selection_matrix(problem, {{1}}).average == 2.0);
  CHECK(phi_selection_matrix(problem, {}).per_user == phi_empty_matrix(problem).per_user);
}

TEST_CASE("preference matrix examples") {
  Instance inst = path3();
  inst.preferences = PreferenceProfile{{{0, 1}, {0, 1}, {0, 1}}};
  const Problem full(inst);
  const Problem plain(path3());
  for (const Selection& s : {Selection{}, Selection{{0}}, Selection{{1, 2}}}) {
    CHECK(phi_preferences_matrix(full, s).per_user == phi_selection_matrix(plain, s).per_user);
  }
  inst.preferences = PreferenceProfile{{{0}, {0, 1}, {1}}};
  const Problem narrow(inst);
  const auto phi = phi_preferences_matrix(narrow, {{1}});
  CHECK(phi.per_user[0] == 1.0);
  CHECK(phi.per_user == phi_set_oracle(narrow, {{1}}).per_user);
}

TEST_CASE("matrix evaluators refuse the wrong profile") {
  Instance inst = path3();
  inst.preferences = PreferenceProfile{{{0}, {0, 1}, {1}}};
  const Problem with(inst);
  CHECK_THROWS_AS(phi_selection_matrix(with, {}), InputError);
  CHECK_THROWS_AS(phi_preferences_matrix(Problem(path3()), {}), InputError);
}

TEST_CASE("walk welfare examples") {
  const Problem problem(path3());
  const auto empty = phi_walks(problem, {});
  CHECK(empty.per_user == phi_empty_matrix(problem).per_user);
  const WalkSet one{{{{0, 1}}}, 1};
  CHECK(phi_walks(problem, one).average == 2.0);
  CHECK(phi_walks_matrix(problem, one).per_user == phi_walks_set(problem, one).per_user);
}

TEST_CASE("marginal gain examples") {
  const Problem problem(path3());
  CHECK(marginal_gain(problem, Selection{}, 1) == Approx(2.0 / 3.0));
  CHECK(marginal_gain(problem, Selection{{1}}, 1) == 0.0);
  CHECK(marginal_gain(problem, Selection{}, 0) == Approx(1.0 / 3.0));
  const WalkSet one{{{{0, 1}}}, 1};
  CHECK(marginal_gain(problem, one, Walk{{1, 0}}) == 0.0);
}

TEST_CASE("routes agree with the oracle on random instances with non-user nodes and radii") {
  testgen::Rng rng(3);
  testgen::Shape shape;
  shape.max_users = 8;
  shape.max_extra_nodes = 3;
  shape.max_radius = 3;
  for (int trial = 0; trial < 200; ++trial) {
    shape.preferences = trial % 2 == 0;
    const Instance inst = testgen::random_instance(rng, shape);
    const Problem problem(inst);
    const std::size_t m = problem.user_count();
    const auto s = testgen::random_subset(rng, m, trial % (m + 1));
    const Selection sel{{s.begin(), s.end()}};
    const auto expect = oracle::phi_per_user(inst, sel.users);
    CHECK(phi_static(problem, sel, Route::Set).per_user == expect);
    CHECK(phi_static(problem, sel, Route::Matrix).per_user == expect);
    CHECK_NOTHROW(phi_static(problem, sel, Route::Both));

    CoverageState state(problem);
    state.add(sel.users);
    CHECK(state.breakdown().per_user == expect);
  }
}

TEST_CASE("walk routes agree and only the visited node set matters") {
  testgen::Rng rng(5);
  testgen::Shape shape;
  shape.min_users = 2;
  shape.max_users = 6;
  shape.max_extra_nodes = 2;
  shape.no_isolated_users = true;
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testgen::random_instance(rng, shape);
    const Problem problem(inst);
    const auto walks = oracle::all_walks(inst, 2);
    if (walks.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, walks.size() - 1);
    WalkSet ws;
    ws.augmentation = 3;
    for (int i = 0; i < 2; ++i) ws.walks.push_back(Walk{walks[pick(rng)]});
    const auto expect = oracle::phi_per_user(inst, oracle::visited(
                                                       {ws.walks[0].nodes, ws.walks[1].nodes}));
    CHECK(phi_walks(problem, ws, Route::Both).per_user == expect);

    // Any walk set with the same visited nodes has the same welfare.
    const auto nodes = visited_nodes(ws);
    CoverageState state(problem);
    state.add(nodes);
    CHECK(state.breakdown().per_user == expect);
  }
}

TEST_CASE("weighted edges") {
  Instance inst = path3();
  inst.sensing.edge_weights = {2.5, 0.5};
  const Problem problem(inst);
  CHECK(phi_set_oracle(problem, {}).per_user == std::vector<double>{2.5, 3.0, 0.5});
  const auto both = phi_static(problem, {{1}}, Route::Both);
  CHECK(both.per_user == std::vector<double>{3.0, 3.0, 3.0});
  CHECK(phi_static(problem, {{1}}, Route::Matrix).average == Approx(3.0));
}

TEST_CASE("self-loops count once") {
  Instance inst = make(2, 2, {{0, 0}, {0, 1}});
  inst.sensing.allow_self_loops = true;
  const Problem problem(inst);
  const Matrix a = sensing_matrix(problem);
  CHECK(a(0, 0) == 1.0);
  const auto expect = std::vector<double>{2.0, 1.0};
  CHECK(phi_set_oracle(problem, {}).per_user == expect);
  CHECK(phi_empty_matrix(problem).per_user == expect);
  CHECK(phi_static(problem, {{0}}, Route::Both).per_user == std::vector<double>{2.0, 2.0});
}

TEST_CASE("welfare stays within [0, |E|]") {
  testgen::Rng rng(9);
  testgen::Shape shape;
  shape.max_users = 10;
  shape.max_extra_nodes = 3;
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testgen::random_instance(rng, shape);
    const Problem problem(inst);
    std::vector<NodeId> all(problem.user_count());
    for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
    for (double phi : phi_static(problem, {all}).per_user) {
      CHECK(phi >= 0.0);
      CHECK(phi <= static_cast<double>(problem.edge_count()));
    }
  }
}

TEST_CASE("route names round-trip") {
  for (Route r : {Route::Matrix, Route::Set, Route::Both}) CHECK(parse_route(route_name(r)) == r);
  CHECK_THROWS_AS(parse_route("fast"), InputError);
}

TEST_CASE("same_welfare tolerances") {
  const auto a = make_breakdown({1.0, 2.0});
  auto b = make_breakdown({1.0, 2.0 + 1e-12});
  CHECK(!same_welfare(a, b, true));
  CHECK(same_welfare(a, b, false));
  CHECK(a.average == 1.5);
  CHECK(a.total() == 3.0);
}
