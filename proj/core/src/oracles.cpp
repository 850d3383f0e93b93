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

#include "submax/oracles.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace submax {
namespace {

// Submodularity of an explicit table is equivalent to the local condition
//   f(S + i) + f(S + j) >= f(S + i + j) + f(S)   for all S and i != j not
// in S, which is checked exhaustively (with the documented 1e-9 slack to
// absorb representation noise in user-supplied values).
void check_table_submodular(const std::vector<double>& values, int n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1) continue;
      const std::uint64_t with_i = mask | (std::uint64_t{1} << i);
      for (int j = i + 1; j < n; ++j) {
        if ((mask >> j) & 1) continue;
        const std::uint64_t with_j = mask | (std::uint64_t{1} << j);
        const std::uint64_t with_ij = with_i | (std::uint64_t{1} << j);
        if (values[with_i] + values[with_j] + 1e-9 <
            values[with_ij] + values[mask]) {
          throw ValidationError(
              "objective.values: not submodular at S=" + std::to_string(mask) +
              ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
        }
      }
    }
  }
}

}  // namespace

SetFunctionOracle::SetFunctionOracle(const ObjectiveSpec& objective, int n)
    : family_(objective_family(objective)), n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw ValidationError("oracle: ground set size must be in [1, 63]");
  }
  switch (family_) {
    case ObjectiveFamily::coverage: {
      const auto& cov = std::get<CoverageObjective>(objective);
      if (static_cast<int>(cov.sets.size()) != n ||
          cov.uweights.size() != static_cast<size_t>(cov.universe_size)) {
        throw ValidationError("objective: coverage arrays do not match n");
      }
      cover_masks_.assign(cov.uweights.size(), 0);
      cover_weights_ = cov.uweights;
      for (int s = 0; s < n; ++s) {
        for (int point : cov.sets[static_cast<size_t>(s)]) {
          if (point < 0 || point >= cov.universe_size) {
            throw ValidationError("objective.sets: universe index out of range");
          }
          cover_masks_[static_cast<size_t>(point)] |= std::uint64_t{1} << s;
        }
      }
      break;
    }
    case ObjectiveFamily::cut: {
      const auto& cut = std::get<CutObjective>(objective);
      for (const CutArc& arc : cut.arcs) {
        if (arc.from < 0 || arc.from >= n || arc.to < 0 || arc.to >= n) {
          throw ValidationError("objective.arcs: endpoint out of range");
        }
        if (arc.weight < 0.0) {
          throw ValidationError("objective.arcs: negative weight");
        }
      }
      arcs_ = cut.arcs;
      break;
    }
    case ObjectiveFamily::facility: {
      const auto& fac = std::get<FacilityObjective>(objective);
      if (static_cast<int>(fac.service.size()) != n) {
        throw ValidationError("objective.service: expected n rows");
      }
      clients_ = fac.service.empty() ? 0
                                     : static_cast<int>(fac.service[0].size());
      service_.reserve(static_cast<size_t>(n) * static_cast<size_t>(clients_));
      for (const auto& row : fac.service) {
        if (static_cast<int>(row.size()) != clients_) {
          throw ValidationError("objective.service: ragged matrix");
        }
        for (double v : row) {
          if (v < 0.0) throw ValidationError("objective.service: negative value");
          service_.push_back(v);
        }
      }
      break;
    }
    case ObjectiveFamily::table: {
      const auto& table = std::get<TableObjective>(objective);
      if (n > 16) {
        throw ValidationError("objective.values: table objectives require n <= 16");
      }
      if (table.values.size() != (size_t{1} << n)) {
        throw ValidationError("objective.values: expected 2^n entries");
      }
      for (double v : table.values) {
        if (v < 0.0) throw ValidationError("objective.values: negative value");
      }
      check_table_submodular(table.values, n);
      table_ = table.values;
      break;
    }
    case ObjectiveFamily::modular_nonneg: {
      const auto& mod = std::get<ModularNonnegObjective>(objective);
      if (static_cast<int>(mod.weights.size()) != n) {
        throw ValidationError("objective.weights: expected n entries");
      }
      for (double v : mod.weights) {
        if (v < 0.0) throw ValidationError("objective.weights: negative value");
      }
      weights_ = mod.weights;
      break;
    }
  }

  // tau = max over singletons, cached once; the guarantee bounds and the
  // gradient concentration thresholds are all stated in units of tau.
  tau_ = 0.0;
  for (int s = 0; s < n_; ++s) {
    tau_ = std::max(tau_, evaluate(ElementSet::singleton(s)));
  }
}

double SetFunctionOracle::evaluate(ElementSet set) const {
  const std::uint64_t bits = set.bits();
  switch (family_) {
    case ObjectiveFamily::coverage: {
      double total = 0.0;
      for (size_t p = 0; p < cover_masks_.size(); ++p) {
        if (cover_masks_[p] & bits) total += cover_weights_[p];
      }
      return total;
    }
    case ObjectiveFamily::cut: {
      double total = 0.0;
      for (const CutArc& arc : arcs_) {
        if (((bits >> arc.from) & 1) && !((bits >> arc.to) & 1)) {
          total += arc.weight;
        }
      }
      return total;
    }
    case ObjectiveFamily::facility: {
      double total = 0.0;
      for (int c = 0; c < clients_; ++c) {
        double best = 0.0;
        for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
          const int s = std::countr_zero(rest);
          best = std::max(best,
                          service_[static_cast<size_t>(s) *
                                       static_cast<size_t>(clients_) +
                                   static_cast<size_t>(c)]);
        }
        total += best;
      }
      return total;
    }
    case ObjectiveFamily::table:
      return table_[bits];
    case ObjectiveFamily::modular_nonneg: {
      double total = 0.0;
      for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
        total += weights_[static_cast<size_t>(std::countr_zero(rest))];
      }
      return total;
    }
  }
  return 0.0;
}

double SetFunctionOracle::marginal(ElementSet set, int s) const {
  if (set.contains(s)) {
    throw ValidationError("marginal: element " + std::to_string(s) +
                          " already in the set");
  }
  return evaluate(set.with(s)) - evaluate(set);
}

bool SetFunctionOracle::is_monotone_family() const {
  return family_ == ObjectiveFamily::coverage ||
         family_ == ObjectiveFamily::facility ||
         family_ == ObjectiveFamily::modular_nonneg;
}

double modular_value(const ModularWeights& weights, ElementSet set) {
  double total = 0.0;
  for (std::uint64_t rest = set.bits(); rest != 0; rest &= rest - 1) {
    total += weights.weights[static_cast<size_t>(std::countr_zero(rest))];
  }
  return total;
}

}  // namespace submax
