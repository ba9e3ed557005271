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
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "poishare/error.hpp"
#include "poishare/static_solver.hpp"
#include "random_instances.hpp"

using namespace poishare;
using doctest::Approx;
using fixtures::make;
using fixtures::path3;

TEST_CASE("gus on the path") {
  const Problem problem(path3());
  const auto r = gus(problem, {1});
  CHECK(r.selection.users == std::vector<NodeId>{1});
  CHECK(r.welfare.average == 2.0);
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].gain == Approx(2.0 / 3.0));
}

TEST_CASE("gus budget checks") {
  const Problem problem(path3());
  CHECK_THROWS_AS(gus(problem, {0}), InputError);
  CHECK_THROWS_AS(gus(problem, {4}), InputError);
  const auto all = gus(problem, {3});
  CHECK(all.welfare.per_user == phi_static(problem, {{0, 1, 2}}).per_user);
}

TEST_CASE("gus ties go to the lowest index") {
  const Problem problem(make(4, 4, {{0, 1}, {2, 3}}));
  CHECK(gus(problem, {1}).selection.users == std::vector<NodeId>{0});
}

TEST_CASE("gus routes pick the same users") {
  testgen::Rng rng(21);
  testgen::Shape shape;
  shape.max_users = 9;
  shape.max_extra_nodes = 2;
  for (int trial = 0; trial < 60; ++trial) {
    shape.preferences = trial % 3 == 0;
    const Problem problem(testgen::random_instance(rng, shape));
    const std::size_t k = 1 + trial % problem.user_count();
    const auto set = gus(problem, {k, TieBreak::LowestIndex, Route::Set});
    const auto matrix = gus(problem, {k, TieBreak::LowestIndex, Route::Matrix});
    const auto both = gus(problem, {k, TieBreak::LowestIndex, Route::Both});
    CHECK(set.selection.users == matrix.selection.users);
    CHECK(set.selection.users == both.selection.users);
    CHECK(set.welfare.per_user == matrix.welfare.per_user);
  }
}

TEST_CASE("greedy trace gains never increase") {
  testgen::Rng rng(22);
  testgen::Shape shape;
  shape.max_users = 12;
  for (int trial = 0; trial < 60; ++trial) {
    const Problem problem(testgen::random_instance(rng, shape));
    const auto r = gus(problem, {problem.user_count()});
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      CHECK(r.trace[i].gain <= r.trace[i - 1].gain + 1e-12);
    }
  }
}

TEST_CASE("brute force matches the oracle and the k=1 greedy step") {
  const Problem problem(path3());
  const auto r = brute_force_static(problem, 1);
  CHECK(r.selection.users == std::vector<NodeId>{1});
  CHECK(r.welfare.average == 2.0);
  CHECK(brute_force_static(problem, 3).selection.users == std::vector<NodeId>{0, 1, 2});

  testgen::Rng rng(23);
  testgen::Shape shape;
  shape.min_users = 2;
  shape.max_users = 8;
  for (int trial = 0; trial < 40; ++trial) {
    shape.preferences = trial % 2 == 0;
    const Instance inst = testgen::random_instance(rng, shape);
    const Problem p(inst);
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, p.user_count()); ++k) {
      const auto opt = brute_force_static(p, k);
      CHECK(opt.welfare.average == Approx(oracle::best_user_subset(inst, k)));
      CHECK(opt.welfare.average >= gus(p, {k}).welfare.average - 1e-12);
    }
    CHECK(gus(p, {1}).welfare.average == brute_force_static(p, 1).welfare.average);
  }
}

TEST_CASE("brute force respects its cap") {
  std::vector<Edge> none;
  const Problem problem(make(30, 30, none));
  CHECK_THROWS_AS(brute_force_static(problem, 15, 1000), CapExceededError);
  try {
    brute_force_static(problem, 15, 1000);
  } catch (const CapExceededError& e) {
    CHECK(e.cap() == 1000);
    CHECK(std::string(e.what()).find("1000") != std::string::npos);
  }
}

TEST_CASE("coverage baseline examples") {
  const Problem problem(path3());
  auto r = max_coverage_baseline(problem, 1, CoverageMode::Greedy);
  CHECK(r.nodes == std::vector<NodeId>{1});
  CHECK(r.covered == 2.0);
  const Problem star(make(5, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  r = max_coverage_baseline(star, 1, CoverageMode::Exact);
  CHECK(r.nodes == std::vector<NodeId>{0});
  CHECK(r.covered == 4.0);
}

TEST_CASE("greedy coverage is within 1-1/e of exact") {
  testgen::Rng rng(24);
  testgen::Shape shape;
  shape.min_users = 8;
  shape.max_users = 8;
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testgen::random_instance(rng, shape);
    const Problem problem(inst);
    std::vector<NodeId> users(8);
    for (NodeId v = 0; v < 8; ++v) users[v] = v;
    for (std::size_t k = 1; k <= 4; ++k) {
      const double greedy = max_coverage_baseline(problem, k, CoverageMode::Greedy).covered;
      const double exact = max_coverage_baseline(problem, k, CoverageMode::Exact).covered;
      CHECK(exact == oracle::best_coverage(inst, users, k));
      CHECK(greedy >= (1.0 - 1.0 / std::numbers::e) * exact - 1e-12);
      CHECK(greedy <= exact);
    }
  }
}

TEST_CASE("coverage bound falls back to an inflated greedy value past the cap") {
  testgen::Rng rng(25);
  testgen::Shape shape;
  shape.min_users = 40;
  shape.max_users = 40;
  shape.edge_prob = 0.2;
  const Instance inst = testgen::random_instance(rng, shape);
  const Problem problem(inst);
  std::vector<NodeId> users(40);
  for (NodeId v = 0; v < 40; ++v) users[v] = v;
  const auto loose = coverage_upper_bound(problem, users, 10, 5);
  const auto tight = coverage_upper_bound(problem, users, 10);
  CHECK(!loose.exact);
  CHECK(loose.value >= tight.value);
  CHECK(loose.value <= problem.total_weight());
}

TEST_CASE("ub1 examples") {
  const Problem problem(path3());
  CHECK(ub1(problem, 1) == Approx(10.0 / 3.0));
  CHECK(ub1(problem, 0) == Approx(4.0 / 3.0));
}

TEST_CASE("static bound examples") {
  for (std::size_t m = 1; m < 50; ++m) CHECK(static_bound(1, m) == 1.0);
  CHECK(static_bound(2, 4) == Approx(0.875));
  CHECK(static_bound(10000, 10000) == Approx(1.0 - 1.0 / std::numbers::e).epsilon(1e-3));
  CHECK_THROWS_AS(static_bound(0, 3), InputError);
}

TEST_CASE("vertex cover reduction on the triangle") {
  const Problem triangle(vcp_reduction_instance(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(brute_force_static(triangle, 2).welfare.average == 3.0);
  CHECK(brute_force_static(triangle, 1).welfare.average < 3.0);
  CHECK_THROWS_AS(vcp_reduction_instance(2, {{0, 1}, {0, 1}}), InputError);
}
