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

#ifndef SUBMAX_GENERATOR_HPP_
#define SUBMAX_GENERATOR_HPP_

#include <cstdint>
#include <optional>

#include "submax/instance.hpp"

namespace submax {

// Random instance generation, deterministic per seed. Defaults are sized so
// that every generated instance is exactly verifiable by brute force:
// n is drawn from [4, 12] when not fixed, and the families are drawn
// uniformly when not fixed. Recipes:
//
//   coverage        universe of 2n points, each element covers a point with
//                   probability 0.35 (at least one), point weights in
//                   [0.25, 2).
//   cut             each ordered pair carries an arc with probability 0.4,
//                   weight in [0.25, 2).
//   facility        n + 2 clients, service values in [0, 1) with 30% zeroed.
//   table           tabulation of a cut instance drawn as above.
//   modular_nonneg  weights in [0, 2).
//
//   cardinality     k in [1, max(1, n - 1)].
//   partition       a shuffled split into 2..3 blocks, caps in [1, |block|].
//   matroid_rank_table  rank table of a partition constraint drawn as above.
//   knapsack        costs in [0.5, 2), budget a fraction in [0.35, 0.65) of
//                   the total cost.
//
// The modular term is drawn from [-1.5, 1.5), so both signs occur.
struct GeneratorOptions {
  std::optional<int> n;
  std::optional<ObjectiveFamily> objective;
  std::optional<ConstraintFamily> constraint;
  std::uint64_t seed = 0;
};

InstanceSpec generate_instance(const GeneratorOptions& options);

}  // namespace submax

#endif  // SUBMAX_GENERATOR_HPP_
