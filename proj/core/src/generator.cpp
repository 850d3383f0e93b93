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

#include "submax/generator.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "submax/errors.hpp"
#include "submax/oracles.hpp"
#include "submax/rng.hpp"

namespace submax {
namespace {

CutObjective draw_cut(Rng& rng, int n) {
  CutObjective cut;
  for (int from = 0; from < n; ++from) {
    for (int to = 0; to < n; ++to) {
      if (from == to) continue;
      if (!rng.bernoulli(0.4)) continue;
      cut.arcs.push_back(CutArc{from, to, rng.uniform(0.25, 2.0)});
    }
  }
  return cut;
}

CoverageObjective draw_coverage(Rng& rng, int n) {
  CoverageObjective coverage;
  coverage.universe_size = 2 * n;
  coverage.sets.resize(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    auto& points = coverage.sets[static_cast<size_t>(s)];
    for (int p = 0; p < coverage.universe_size; ++p) {
      if (rng.bernoulli(0.35)) points.push_back(p);
    }
    if (points.empty()) {
      points.push_back(rng.uniform_int(0, coverage.universe_size - 1));
    }
  }
  coverage.uweights.reserve(static_cast<size_t>(coverage.universe_size));
  for (int p = 0; p < coverage.universe_size; ++p) {
    coverage.uweights.push_back(rng.uniform(0.25, 2.0));
  }
  return coverage;
}

FacilityObjective draw_facility(Rng& rng, int n) {
  FacilityObjective facility;
  const int clients = n + 2;
  facility.service.resize(static_cast<size_t>(n));
  for (auto& row : facility.service) {
    row.reserve(static_cast<size_t>(clients));
    for (int c = 0; c < clients; ++c) {
      const double value = rng.uniform();
      row.push_back(rng.bernoulli(0.3) ? 0.0 : value);
    }
  }
  return facility;
}

TableObjective draw_table(Rng& rng, int n) {
  if (n > 16) {
    throw ValidationError("generate_instance: table objective requires n <= 16");
  }
  const CutObjective cut = draw_cut(rng, n);
  const SetFunctionOracle oracle(ObjectiveSpec{cut}, n);
  TableObjective table;
  const std::uint64_t size = std::uint64_t{1} << n;
  table.values.reserve(size);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    table.values.push_back(oracle.evaluate(ElementSet::from_bits(mask)));
  }
  return table;
}

ModularNonnegObjective draw_modular_nonneg(Rng& rng, int n) {
  ModularNonnegObjective modular;
  modular.weights.reserve(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) modular.weights.push_back(rng.uniform(0.0, 2.0));
  return modular;
}

PartitionConstraint draw_partition(Rng& rng, int n) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<size_t>(i)],
              order[static_cast<size_t>(rng.uniform_int(0, i))]);
  }
  const int block_count = std::min(n, rng.uniform_int(2, 3));
  // Cut the shuffled order at block_count - 1 interior positions.
  std::vector<int> cuts;
  while (static_cast<int>(cuts.size()) < block_count - 1) {
    const int cut = rng.uniform_int(1, n - 1);
    if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) {
      cuts.push_back(cut);
    }
  }
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());

  PartitionConstraint partition;
  for (size_t b = 0; b + 1 < cuts.size(); ++b) {
    std::vector<int> block(order.begin() + cuts[b], order.begin() + cuts[b + 1]);
    std::sort(block.begin(), block.end());
    partition.caps.push_back(rng.uniform_int(1, static_cast<int>(block.size())));
    partition.blocks.push_back(std::move(block));
  }
  return partition;
}

MatroidRankTableConstraint draw_rank_table(Rng& rng, int n) {
  if (n > 16) {
    throw ValidationError(
        "generate_instance: matroid_rank_table constraint requires n <= 16");
  }
  const PartitionConstraint partition = draw_partition(rng, n);
  MatroidRankTableConstraint table;
  const std::uint64_t size = std::uint64_t{1} << n;
  table.rank.reserve(size);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    int rank = 0;
    for (size_t b = 0; b < partition.blocks.size(); ++b) {
      int inside = 0;
      for (int s : partition.blocks[b]) {
        if ((mask >> s) & 1u) ++inside;
      }
      rank += std::min(inside, partition.caps[b]);
    }
    table.rank.push_back(rank);
  }
  return table;
}

KnapsackConstraint draw_knapsack(Rng& rng, int n) {
  KnapsackConstraint knapsack;
  knapsack.costs.reserve(static_cast<size_t>(n));
  double total = 0.0;
  for (int s = 0; s < n; ++s) {
    knapsack.costs.push_back(rng.uniform(0.5, 2.0));
    total += knapsack.costs.back();
  }
  knapsack.budget = total * rng.uniform(0.35, 0.65);
  return knapsack;
}

}  // namespace

InstanceSpec generate_instance(const GeneratorOptions& options) {
  Rng rng(options.seed);
  const int n = options.n ? *options.n : rng.uniform_int(4, 12);
  if (n < 1 || n > kMaxGroundSize) {
    throw ValidationError("generate_instance: n must be in [1, " +
                          std::to_string(kMaxGroundSize) + "]");
  }
  const ObjectiveFamily objective_family =
      options.objective ? *options.objective
                        : static_cast<ObjectiveFamily>(rng.uniform_int(0, 4));
  const ConstraintFamily constraint_family =
      options.constraint ? *options.constraint
                         : static_cast<ConstraintFamily>(rng.uniform_int(0, 3));

  ObjectiveSpec objective = CoverageObjective{};
  switch (objective_family) {
    case ObjectiveFamily::coverage:
      objective = draw_coverage(rng, n);
      break;
    case ObjectiveFamily::cut:
      objective = draw_cut(rng, n);
      break;
    case ObjectiveFamily::facility:
      objective = draw_facility(rng, n);
      break;
    case ObjectiveFamily::table:
      objective = draw_table(rng, n);
      break;
    case ObjectiveFamily::modular_nonneg:
      objective = draw_modular_nonneg(rng, n);
      break;
  }

  ConstraintSpec constraint = CardinalityConstraint{0};
  switch (constraint_family) {
    case ConstraintFamily::cardinality:
      constraint = CardinalityConstraint{rng.uniform_int(1, std::max(1, n - 1))};
      break;
    case ConstraintFamily::partition:
      constraint = draw_partition(rng, n);
      break;
    case ConstraintFamily::matroid_rank_table:
      constraint = draw_rank_table(rng, n);
      break;
    case ConstraintFamily::knapsack:
      constraint = draw_knapsack(rng, n);
      break;
  }

  ModularWeights modular;
  modular.weights.reserve(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    modular.weights.push_back(rng.uniform(-1.5, 1.5));
  }

  InstanceSpec instance{GroundSet(n), std::move(objective), std::move(modular),
                        std::move(constraint)};

  validate_instance(instance);
  return instance;
}

}  // namespace submax
