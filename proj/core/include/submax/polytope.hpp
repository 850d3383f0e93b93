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

#ifndef SUBMAX_POLYTOPE_HPP_
#define SUBMAX_POLYTOPE_HPP_

#include <span>
#include <vector>

#include "submax/instance.hpp"
#include "submax/types.hpp"

namespace submax {

// A vertex of the polytope maximizing a linear objective, together with the
// objective value attained.
struct UpdateDirection {
  FractionalPoint z;
  double objective_value = 0.0;
};

// A solvable down-closed polytope P inside [0,1]^n. Down-closedness means
// 0 <= y <= x and x in P imply y in P; every family here has that property.
// Construction validates the constraint parameters, including the full
// matroid axiom check for rank tables.
class PolytopeOracle {
 public:
  PolytopeOracle(const ConstraintSpec& constraint, int n);

  // argmax_{z in P} <z, weights>. Coordinates with non-positive weight are
  // fixed to zero (legal by down-closedness); ties among equal weights or
  // equal knapsack ratios are broken toward the lowest element index. The
  // result is a vertex of P: integral for the matroid families, at most one
  // fractional coordinate for knapsack.
  UpdateDirection linear_max(std::span<const double> weights) const;

  // Membership test with additive tolerance on every defining inequality.
  // Rank-table membership checks all 2^n subset constraints.
  bool is_feasible(const FractionalPoint& x, double tol = 1e-9) const;

  // All S with indicator vector in P, in increasing bitmask order.
  // Throws SizeError for n > 20.
  std::vector<ElementSet> enumerate_feasible_sets() const;

  int ground_size() const { return n_; }
  ConstraintFamily family() const { return family_; }

 private:
  ConstraintFamily family_;
  int n_ = 0;

  // cardinality
  int k_ = 0;
  // partition: block id per element (-1 when unconstrained) and caps.
  std::vector<int> block_of_;
  std::vector<int> caps_;
  // matroid_rank_table
  std::vector<int> rank_;
  // knapsack
  std::vector<double> costs_;
  double budget_ = 0.0;
};

}  // namespace submax

#endif  // SUBMAX_POLYTOPE_HPP_
