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

#ifndef SUBMAX_ORACLES_HPP_
#define SUBMAX_ORACLES_HPP_

#include <vector>

#include "submax/instance.hpp"
#include "submax/types.hpp"

namespace submax {

// Value oracle for a non-negative submodular set function f. Construction
// preprocesses the family parameters into a flat representation and verifies
// family invariants; for the table family this includes an exhaustive
// submodularity check. Evaluation is deterministic and const, so a single
// oracle may be shared across threads.
//
// The most negative any marginal can get is bounded: for every T and s,
//   -n * max_singleton() <= marginal(T, s) <= max_singleton(),
// which the solver's error analysis relies on.
class SetFunctionOracle {
 public:
  SetFunctionOracle(const ObjectiveSpec& objective, int n);

  // f(S); always >= 0.
  double evaluate(ElementSet set) const;

  // f(S + s) - f(S). Requires s not already in S.
  double marginal(ElementSet set, int s) const;

  int ground_size() const { return n_; }
  ObjectiveFamily family() const { return family_; }

  // True for families that are monotone by construction
  // (coverage, facility, modular_nonneg).
  bool is_monotone_family() const;

  // tau = max_s f({s}), computed once at construction from n singleton
  // queries. The approximation guarantees are stated relative to this value.
  double max_singleton() const { return tau_; }

 private:
  ObjectiveFamily family_;
  int n_ = 0;
  double tau_ = 0.0;

  // coverage: per universe point, the mask of ground elements covering it.
  std::vector<std::uint64_t> cover_masks_;
  std::vector<double> cover_weights_;
  // cut
  std::vector<CutArc> arcs_;
  // facility: row-major service matrix, n rows by clients_ columns.
  int clients_ = 0;
  std::vector<double> service_;
  // table
  std::vector<double> table_;
  // modular_nonneg
  std::vector<double> weights_;
};

// Sum of the weights of the members of S.
double modular_value(const ModularWeights& weights, ElementSet set);

}  // namespace submax

#endif  // SUBMAX_ORACLES_HPP_
