// Copyright 2026 The submax Authors
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

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "submax/errors.hpp"
#include "submax/generator.hpp"
#include "submax/polytope.hpp"
#include "submax/rng.hpp"

namespace {

using namespace submax;

std::vector<int> rank_of_partition(const PartitionConstraint& partition,
                                   int n) {
  std::vector<int> rank;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int r = 0;
    for (size_t b = 0; b < partition.blocks.size(); ++b) {
      int inside = 0;
      for (int s : partition.blocks[b]) {
        if ((mask >> s) & 1u) ++inside;
      }
      r += std::min(inside, partition.caps[b]);
    }
    rank.push_back(r);
  }
  return rank;
}

TEST_CASE("polytope: cardinality linear_max takes the top positive weights") {
  const PolytopeOracle p(ConstraintSpec{CardinalityConstraint{2}}, 3);
  const std::vector<double> weights{3.0, -1.0, 2.0};
  const UpdateDirection dir = p.linear_max(weights);
  CHECK(dir.z.coords() == std::vector<double>{1.0, 0.0, 1.0});
  CHECK(dir.objective_value == 5.0);
}

TEST_CASE("polytope: non-positive weights give the zero vertex") {
  const PolytopeOracle card(ConstraintSpec{CardinalityConstraint{2}}, 3);
  const PolytopeOracle knap(
      ConstraintSpec{KnapsackConstraint{{1.0, 1.0, 1.0}, 2.0}}, 3);
  const std::vector<double> weights{-3.0, 0.0, -0.5};
  for (const PolytopeOracle* p : {&card, &knap}) {
    const UpdateDirection dir = p->linear_max(weights);
    CHECK(dir.z.coords() == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(dir.objective_value == 0.0);
  }
}

TEST_CASE("polytope: knapsack linear_max fills by value density") {
  const PolytopeOracle p(ConstraintSpec{KnapsackConstraint{{1.0, 2.0}, 2.0}},
                         2);
  const UpdateDirection dir = p.linear_max(std::vector<double>{3.0, 4.0});
  // Ratios are 3 and 2: take item 0 whole, then half of item 1.
  CHECK(dir.z.coords() == std::vector<double>{1.0, 0.5});
  CHECK(dir.objective_value == 5.0);
  CHECK(p.is_feasible(dir.z, 1e-9));
}

TEST_CASE("polytope: ties break toward the lowest index") {
  const PolytopeOracle p(ConstraintSpec{CardinalityConstraint{1}}, 2);
  const UpdateDirection dir = p.linear_max(std::vector<double>{2.0, 2.0});
  CHECK(dir.z.coords() == std::vector<double>{1.0, 0.0});
}

TEST_CASE("polytope: feasibility checks the defining inequalities") {
  const PolytopeOracle card(ConstraintSpec{CardinalityConstraint{1}}, 2);
  CHECK(card.is_feasible(FractionalPoint::zeros(2)));
  CHECK(card.is_feasible(FractionalPoint({0.5, 0.5})));
  CHECK_FALSE(card.is_feasible(FractionalPoint({0.6, 0.6})));

  const PolytopeOracle knap(
      ConstraintSpec{KnapsackConstraint{{1.0, 2.0}, 2.0}}, 2);
  CHECK(knap.is_feasible(FractionalPoint({1.0, 0.5})));
  CHECK_FALSE(knap.is_feasible(FractionalPoint({1.0, 0.6})));

  PartitionConstraint partition;
  partition.blocks = {{0, 1}, {2}};
  partition.caps = {1, 1};
  const PolytopeOracle part(ConstraintSpec{partition}, 3);
  CHECK(part.is_feasible(FractionalPoint({0.5, 0.5, 1.0})));
  CHECK_FALSE(part.is_feasible(FractionalPoint({0.8, 0.5, 1.0})));
}

TEST_CASE("polytope: enumeration matches the family definition") {
  const PolytopeOracle all(ConstraintSpec{CardinalityConstraint{3}}, 3);
  CHECK(all.enumerate_feasible_sets().size() == 8);

  const PolytopeOracle none(ConstraintSpec{CardinalityConstraint{0}}, 3);
  const auto only_empty = none.enumerate_feasible_sets();
  REQUIRE(only_empty.size() == 1);
  CHECK(only_empty[0] == ElementSet::empty_set());

  PartitionConstraint partition;
  partition.blocks = {{0, 1}, {2}};
  partition.caps = {1, 1};
  const PolytopeOracle part(ConstraintSpec{partition}, 3);
  // {}, {0}, {1}, {2}, {0,2}, {1,2}: six sets in bitmask order.
  const auto sets = part.enumerate_feasible_sets();
  REQUIRE(sets.size() == 6);
  const std::vector<std::uint64_t> expected{0, 1, 2, 4, 5, 6};
  for (size_t i = 0; i < sets.size(); ++i) {
    CHECK(sets[i].bits() == expected[i]);
  }
}

TEST_CASE("polytope: rank tables are validated as matroids") {
  PartitionConstraint partition;
  partition.blocks = {{0, 1}, {2}};
  partition.caps = {1, 1};
  const std::vector<int> rank = rank_of_partition(partition, 3);
  const PolytopeOracle p(ConstraintSpec{MatroidRankTableConstraint{rank}}, 3);
  CHECK(p.family() == ConstraintFamily::matroid_rank_table);
  CHECK(p.enumerate_feasible_sets().size() == 6);

  // rank(empty) must be 0.
  std::vector<int> bad = rank;
  bad[0] = 1;
  CHECK_THROWS_AS(
      PolytopeOracle(ConstraintSpec{MatroidRankTableConstraint{bad}}, 3),
      ValidationError);
  // Unit increase: adding one element may raise the rank by at most 1.
  bad = rank;
  bad[7] = 3;
  CHECK_THROWS_AS(
      PolytopeOracle(ConstraintSpec{MatroidRankTableConstraint{bad}}, 3),
      ValidationError);
  // Monotonicity violation.
  bad = rank;
  bad[3] = 0;
  CHECK_THROWS_AS(
      PolytopeOracle(ConstraintSpec{MatroidRankTableConstraint{bad}}, 3),
      ValidationError);
}

TEST_CASE("polytope: matroid directions are independent 0/1 vertices") {
  PartitionConstraint partition;
  partition.blocks = {{0, 2}, {1, 3}};
  partition.caps = {1, 2};
  const std::vector<int> rank = rank_of_partition(partition, 4);
  const PolytopeOracle p(ConstraintSpec{MatroidRankTableConstraint{rank}}, 4);
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> weights;
    for (int s = 0; s < 4; ++s) weights.push_back(rng.uniform(-1.0, 2.0));
    const UpdateDirection dir = p.linear_max(weights);
    std::uint64_t support = 0;
    for (int s = 0; s < 4; ++s) {
      const double v = dir.z[s];
      CHECK((v == 0.0 || v == 1.0));
      if (v == 1.0) support |= std::uint64_t{1} << s;
    }
    // Independent support: rank equals cardinality.
    CHECK(rank[support] == ElementSet::from_bits(support).size());
    CHECK(p.is_feasible(dir.z, 1e-9));
  }
}

TEST_CASE("polytope: linear_max dominates every feasible integral point") {
  Rng rng(32);
  for (int con = 0; con < 4; ++con) {
    GeneratorOptions options;
    options.n = 7;
    options.objective = ObjectiveFamily::cut;
    options.constraint = static_cast<ConstraintFamily>(con);
    options.seed = static_cast<std::uint64_t>(700 + con);
    const InstanceSpec instance = generate_instance(options);
    const PolytopeOracle p(instance.constraint, 7);
    const auto feasible = p.enumerate_feasible_sets();
    CAPTURE(con);

    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> weights;
      for (int s = 0; s < 7; ++s) weights.push_back(rng.uniform(-1.0, 1.0));
      const UpdateDirection dir = p.linear_max(weights);
      CHECK(p.is_feasible(dir.z, 1e-9));
      double recomputed = 0.0;
      for (int s = 0; s < 7; ++s) recomputed += dir.z[s] * weights[s];
      CHECK(dir.objective_value == doctest::Approx(recomputed).epsilon(1e-12));
      for (const ElementSet set : feasible) {
        double value = 0.0;
        for (int s = 0; s < 7; ++s) {
          if (set.contains(s)) value += weights[static_cast<size_t>(s)];
        }
        CHECK(dir.objective_value >= value - 1e-9);
      }
    }
  }
}

TEST_CASE("polytope: scaling a feasible point down stays feasible") {
  Rng rng(33);
  for (int con = 0; con < 4; ++con) {
    GeneratorOptions options;
    options.n = 6;
    options.objective = ObjectiveFamily::cut;
    options.constraint = static_cast<ConstraintFamily>(con);
    options.seed = static_cast<std::uint64_t>(800 + con);
    const InstanceSpec instance = generate_instance(options);
    const PolytopeOracle p(instance.constraint, 6);

    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> weights;
      for (int s = 0; s < 6; ++s) weights.push_back(rng.uniform(0.0, 1.0));
      const UpdateDirection dir = p.linear_max(weights);
      const double factor = rng.uniform(0.0, 1.0);
      std::vector<double> scaled = dir.z.coords();
      for (double& v : scaled) v *= factor;
      CHECK(p.is_feasible(FractionalPoint(scaled), 1e-9));
    }
  }
}

TEST_CASE("polytope: convex combinations of vertices stay feasible") {
  const PolytopeOracle p(
      ConstraintSpec{KnapsackConstraint{{1.0, 1.5, 0.5}, 2.0}}, 3);
  Rng rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> wa, wb;
    for (int s = 0; s < 3; ++s) {
      wa.push_back(rng.uniform(-1.0, 1.0));
      wb.push_back(rng.uniform(-1.0, 1.0));
    }
    const FractionalPoint a = p.linear_max(wa).z;
    const FractionalPoint b = p.linear_max(wb).z;
    const double lambda = rng.uniform(0.0, 1.0);
    std::vector<double> mix;
    for (int s = 0; s < 3; ++s) {
      mix.push_back(lambda * a[s] + (1.0 - lambda) * b[s]);
    }
    CHECK(p.is_feasible(FractionalPoint(mix), 1e-9));
  }
}

TEST_CASE("polytope: knapsack enumeration lists budget-respecting sets") {
  const PolytopeOracle p(
      ConstraintSpec{KnapsackConstraint{{1.0, 2.0, 1.5}, 2.5}}, 3);
  const auto sets = p.enumerate_feasible_sets();
  // {}, {0}, {1}, {2}, {0,2}: cost of {0,1} is 3 and {1,2} is 3.5.
  const std::vector<std::uint64_t> expected{0, 1, 2, 4, 5};
  REQUIRE(sets.size() == expected.size());
  for (size_t i = 0; i < sets.size(); ++i) {
    CHECK(sets[i].bits() == expected[i]);
  }
}

}  // namespace
