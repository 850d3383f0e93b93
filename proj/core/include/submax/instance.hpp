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
//
// Problem instances: an objective descriptor, a modular weight vector and a
// constraint descriptor over a common ground set, together with a canonical
// JSON serialization.
//
// Document layout (unknown keys are rejected at every level):
//
//   {
//     "n": 4,
//     "labels": ["a", "b", "c", "d"],          // optional
//     "objective": {"family": "cut", "arcs": [[0, 1, 1.5], ...]},
//     "modular": [0.5, -1.0, 0.0, 2.0],
//     "constraint": {"family": "cardinality", "k": 2}
//   }

#ifndef SUBMAX_INSTANCE_HPP_
#define SUBMAX_INSTANCE_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "submax/types.hpp"

namespace submax {

enum class ObjectiveFamily { coverage, cut, facility, table, modular_nonneg };
enum class ConstraintFamily {
  cardinality,
  partition,
  matroid_rank_table,
  knapsack
};

std::string_view family_name(ObjectiveFamily family);
std::string_view family_name(ConstraintFamily family);
ObjectiveFamily objective_family_from_name(std::string_view name);
ConstraintFamily constraint_family_from_name(std::string_view name);

// --- Objective descriptors ---

// Weighted coverage: element s covers the universe subset sets[s]; the value
// of S is the total weight of universe points covered by some member of S.
struct CoverageObjective {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;  // one entry per ground element
  std::vector<double> uweights;        // one non-negative weight per point

  friend bool operator==(const CoverageObjective&,
                         const CoverageObjective&) = default;
};

struct CutArc {
  int from = 0;
  int to = 0;
  double weight = 0.0;

  friend bool operator==(const CutArc&, const CutArc&) = default;
};

// Directed cut: value of S is the total weight of arcs leaving S.
struct CutObjective {
  std::vector<CutArc> arcs;

  friend bool operator==(const CutObjective&, const CutObjective&) = default;
};

// Facility location: service[s][c] >= 0 is how well facility s serves client
// c; the value of S is the sum over clients of the best open facility.
struct FacilityObjective {
  std::vector<std::vector<double>> service;  // n rows, one per facility

  friend bool operator==(const FacilityObjective&,
                         const FacilityObjective&) = default;
};

// Explicit value table indexed by bitmask; requires n <= 16. Values must be
// non-negative and submodular (checked when an oracle is constructed).
struct TableObjective {
  std::vector<double> values;  // size 2^n

  friend bool operator==(const TableObjective&,
                         const TableObjective&) = default;
};

// Non-negative modular objective (monotone).
struct ModularNonnegObjective {
  std::vector<double> weights;

  friend bool operator==(const ModularNonnegObjective&,
                         const ModularNonnegObjective&) = default;
};

using ObjectiveSpec =
    std::variant<CoverageObjective, CutObjective, FacilityObjective,
                 TableObjective, ModularNonnegObjective>;

ObjectiveFamily objective_family(const ObjectiveSpec& objective);

// --- Constraint descriptors ---

struct CardinalityConstraint {
  int k = 0;

  friend bool operator==(const CardinalityConstraint&,
                         const CardinalityConstraint&) = default;
};

// Disjoint blocks with per-block caps; elements outside every block are
// unconstrained beyond the [0,1] box.
struct PartitionConstraint {
  std::vector<std::vector<int>> blocks;
  std::vector<int> caps;

  friend bool operator==(const PartitionConstraint&,
                         const PartitionConstraint&) = default;
};

// Matroid given by its full rank table (size 2^n, n <= 16). The matroid
// axioms are validated when a polytope oracle is constructed.
struct MatroidRankTableConstraint {
  std::vector<int> rank;

  friend bool operator==(const MatroidRankTableConstraint&,
                         const MatroidRankTableConstraint&) = default;
};

struct KnapsackConstraint {
  std::vector<double> costs;  // strictly positive
  double budget = 0.0;        // strictly positive

  friend bool operator==(const KnapsackConstraint&,
                         const KnapsackConstraint&) = default;
};

using ConstraintSpec =
    std::variant<CardinalityConstraint, PartitionConstraint,
                 MatroidRankTableConstraint, KnapsackConstraint>;

ConstraintFamily constraint_family(const ConstraintSpec& constraint);

// --- Instance ---

struct InstanceSpec {
  GroundSet ground;
  ObjectiveSpec objective;
  ModularWeights modular;
  ConstraintSpec constraint;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// Structural validation shared by the parser and programmatic construction:
// index ranges, array shapes, sign constraints, finiteness. Family-specific
// mathematical checks (table submodularity, matroid axioms) run when the
// corresponding oracle is built.
void validate_instance(const InstanceSpec& spec);

// Parses and validates a JSON instance document. Throws SchemaError for
// malformed documents and ValidationError for semantic violations; messages
// name the offending field.
InstanceSpec parse_instance(std::string_view text);

// Canonical serialization; parse_instance(serialize_instance(s)) == s.
std::string serialize_instance(const InstanceSpec& spec);

// FNV-1a 64-bit digest of the canonical serialization, as 16 hex digits.
std::string instance_digest(const InstanceSpec& spec);

}  // namespace submax

#endif  // SUBMAX_INSTANCE_HPP_
