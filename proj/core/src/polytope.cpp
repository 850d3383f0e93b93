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

#include "submax/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace submax {
namespace {

// Full matroid axiom check on an explicit rank table:
// rank(empty) = 0, 0 <= rank(S) <= |S|, rank monotone with unit increments,
// and the local submodular exchange condition.
void check_matroid_axioms(const std::vector<int>& rank, int n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  if (rank[0] != 0) {
    throw ValidationError("constraint.rank: rank of the empty set must be 0");
  }
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    const int r = rank[mask];
    if (r < 0 || r > std::popcount(mask)) {
      throw ValidationError("constraint.rank: rank(" + std::to_string(mask) +
                            ") outside [0, |S|]");
    }
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1) continue;
      const std::uint64_t with_i = mask | (std::uint64_t{1} << i);
      if (rank[with_i] < r || rank[with_i] > r + 1) {
        throw ValidationError(
            "constraint.rank: adding element " + std::to_string(i) + " to " +
            std::to_string(mask) + " changes rank by more than one or drops it");
      }
      for (int j = i + 1; j < n; ++j) {
        if ((mask >> j) & 1) continue;
        const std::uint64_t with_j = mask | (std::uint64_t{1} << j);
        const std::uint64_t with_ij = with_i | (std::uint64_t{1} << j);
        if (rank[with_i] + rank[with_j] < rank[with_ij] + r) {
          throw ValidationError("constraint.rank: not submodular at S=" +
                                std::to_string(mask));
        }
      }
    }
  }
}

// Indices of strictly positive weights, heaviest first, ties toward the
// lowest index. Non-positive coordinates never enter a direction.
std::vector<int> positive_by_weight(std::span<const double> weights) {
  std::vector<int> order;
  for (int s = 0; s < static_cast<int>(weights.size()); ++s) {
    if (weights[static_cast<size_t>(s)] > 0.0) order.push_back(s);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double wa = weights[static_cast<size_t>(a)];
    const double wb = weights[static_cast<size_t>(b)];
    if (wa != wb) return wa > wb;
    return a < b;
  });
  return order;
}

}  // namespace

PolytopeOracle::PolytopeOracle(const ConstraintSpec& constraint, int n)
    : family_(constraint_family(constraint)), n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw ValidationError("polytope: ground set size must be in [1, 63]");
  }
  switch (family_) {
    case ConstraintFamily::cardinality: {
      k_ = std::get<CardinalityConstraint>(constraint).k;
      if (k_ < 0) throw ValidationError("constraint.k: negative bound");
      break;
    }
    case ConstraintFamily::partition: {
      const auto& part = std::get<PartitionConstraint>(constraint);
      if (part.caps.size() != part.blocks.size()) {
        throw ValidationError("constraint.caps: one cap per block required");
      }
      block_of_.assign(static_cast<size_t>(n), -1);
      caps_ = part.caps;
      for (size_t b = 0; b < part.blocks.size(); ++b) {
        if (part.caps[b] < 0) {
          throw ValidationError("constraint.caps: negative cap");
        }
        for (int s : part.blocks[b]) {
          if (s < 0 || s >= n) {
            throw ValidationError("constraint.blocks: element out of range");
          }
          if (block_of_[static_cast<size_t>(s)] != -1) {
            throw ValidationError("constraint.blocks: element " +
                                  std::to_string(s) + " in two blocks");
          }
          block_of_[static_cast<size_t>(s)] = static_cast<int>(b);
        }
      }
      break;
    }
    case ConstraintFamily::matroid_rank_table: {
      const auto& mat = std::get<MatroidRankTableConstraint>(constraint);
      if (n > 16) {
        throw ValidationError("constraint.rank: rank tables require n <= 16");
      }
      if (mat.rank.size() != (size_t{1} << n)) {
        throw ValidationError("constraint.rank: expected 2^n entries");
      }
      check_matroid_axioms(mat.rank, n);
      rank_ = mat.rank;
      break;
    }
    case ConstraintFamily::knapsack: {
      const auto& knap = std::get<KnapsackConstraint>(constraint);
      if (static_cast<int>(knap.costs.size()) != n) {
        throw ValidationError("constraint.costs: expected n entries");
      }
      for (double c : knap.costs) {
        if (!(c > 0.0)) {
          throw ValidationError("constraint.costs: costs must be positive");
        }
      }
      if (!(knap.budget > 0.0)) {
        throw ValidationError("constraint.budget: budget must be positive");
      }
      costs_ = knap.costs;
      budget_ = knap.budget;
      break;
    }
  }
}

UpdateDirection PolytopeOracle::linear_max(
    std::span<const double> weights) const {
  if (static_cast<int>(weights.size()) != n_) {
    throw ValidationError("linear_max: expected " + std::to_string(n_) +
                          " weights, got " + std::to_string(weights.size()));
  }
  std::vector<double> z(static_cast<size_t>(n_), 0.0);
  double value = 0.0;
  switch (family_) {
    case ConstraintFamily::cardinality: {
      std::vector<int> order = positive_by_weight(weights);
      const int take = std::min<int>(k_, static_cast<int>(order.size()));
      for (int i = 0; i < take; ++i) {
        z[static_cast<size_t>(order[i])] = 1.0;
        value += weights[static_cast<size_t>(order[i])];
      }
      break;
    }
    case ConstraintFamily::partition: {
      std::vector<int> remaining = caps_;
      for (int s : positive_by_weight(weights)) {
        const int b = block_of_[static_cast<size_t>(s)];
        if (b >= 0) {
          if (remaining[static_cast<size_t>(b)] == 0) continue;
          --remaining[static_cast<size_t>(b)];
        }
        z[static_cast<size_t>(s)] = 1.0;
        value += weights[static_cast<size_t>(s)];
      }
      break;
    }
    case ConstraintFamily::matroid_rank_table: {
      // Greedy over decreasing weights is optimal for any matroid.
      std::uint64_t current = 0;
      for (int s : positive_by_weight(weights)) {
        const std::uint64_t next = current | (std::uint64_t{1} << s);
        if (rank_[next] > rank_[current]) {
          current = next;
          z[static_cast<size_t>(s)] = 1.0;
          value += weights[static_cast<size_t>(s)];
        }
      }
      break;
    }
    case ConstraintFamily::knapsack: {
      // Greedy by value density solves the fractional knapsack LP exactly;
      // at most the last taken coordinate is fractional.
      std::vector<int> order;
      std::vector<double> ratio(static_cast<size_t>(n_), 0.0);
      for (int s = 0; s < n_; ++s) {
        if (weights[static_cast<size_t>(s)] > 0.0) {
          order.push_back(s);
          ratio[static_cast<size_t>(s)] =
              weights[static_cast<size_t>(s)] / costs_[static_cast<size_t>(s)];
        }
      }
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ra = ratio[static_cast<size_t>(a)];
        const double rb = ratio[static_cast<size_t>(b)];
        if (ra != rb) return ra > rb;
        return a < b;
      });
      double remaining = budget_;
      for (int s : order) {
        const double c = costs_[static_cast<size_t>(s)];
        if (remaining >= c) {
          z[static_cast<size_t>(s)] = 1.0;
          value += weights[static_cast<size_t>(s)];
          remaining -= c;
        } else {
          const double fraction = remaining / c;
          if (fraction > 0.0) {
            z[static_cast<size_t>(s)] = fraction;
            value += fraction * weights[static_cast<size_t>(s)];
          }
          break;
        }
      }
      break;
    }
  }
  return UpdateDirection{FractionalPoint(std::move(z)), value};
}

bool PolytopeOracle::is_feasible(const FractionalPoint& x, double tol) const {
  if (x.size() != n_) {
    throw ValidationError("is_feasible: dimension mismatch");
  }
  switch (family_) {
    case ConstraintFamily::cardinality: {
      double total = 0.0;
      for (int s = 0; s < n_; ++s) total += x[s];
      return total <= static_cast<double>(k_) + tol;
    }
    case ConstraintFamily::partition: {
      std::vector<double> block_sum(caps_.size(), 0.0);
      for (int s = 0; s < n_; ++s) {
        const int b = block_of_[static_cast<size_t>(s)];
        if (b >= 0) block_sum[static_cast<size_t>(b)] += x[s];
      }
      for (size_t b = 0; b < caps_.size(); ++b) {
        if (block_sum[b] > static_cast<double>(caps_[b]) + tol) return false;
      }
      return true;
    }
    case ConstraintFamily::matroid_rank_table: {
      // sum_{s in S} x(s) <= rank(S) for every S; subset sums built
      // incrementally from each mask with its lowest bit cleared.
      const size_t size = size_t{1} << n_;
      std::vector<double> sums(size, 0.0);
      for (size_t mask = 1; mask < size; ++mask) {
        const int s = std::countr_zero(mask);
        sums[mask] = sums[mask & (mask - 1)] + x[s];
        if (sums[mask] > static_cast<double>(rank_[mask]) + tol) return false;
      }
      return true;
    }
    case ConstraintFamily::knapsack: {
      double total = 0.0;
      for (int s = 0; s < n_; ++s) total += costs_[static_cast<size_t>(s)] * x[s];
      return total <= budget_ + tol;
    }
  }
  return false;
}

std::vector<ElementSet> PolytopeOracle::enumerate_feasible_sets() const {
  if (n_ > 20) {
    throw SizeError("enumerate_feasible_sets: supports n <= 20, got n = " +
                    std::to_string(n_));
  }
  const std::uint64_t size = std::uint64_t{1} << n_;
  std::vector<ElementSet> feasible;
  switch (family_) {
    case ConstraintFamily::cardinality: {
      for (std::uint64_t mask = 0; mask < size; ++mask) {
        if (std::popcount(mask) <= k_) feasible.push_back(ElementSet::from_bits(mask));
      }
      break;
    }
    case ConstraintFamily::partition: {
      std::vector<int> counts(caps_.size());
      for (std::uint64_t mask = 0; mask < size; ++mask) {
        std::fill(counts.begin(), counts.end(), 0);
        bool ok = true;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          const int b = block_of_[static_cast<size_t>(std::countr_zero(rest))];
          if (b >= 0 && ++counts[static_cast<size_t>(b)] > caps_[static_cast<size_t>(b)]) {
            ok = false;
            break;
          }
        }
        if (ok) feasible.push_back(ElementSet::from_bits(mask));
      }
      break;
    }
    case ConstraintFamily::matroid_rank_table: {
      for (std::uint64_t mask = 0; mask < size; ++mask) {
        if (rank_[mask] == std::popcount(mask)) {
          feasible.push_back(ElementSet::from_bits(mask));
        }
      }
      break;
    }
    case ConstraintFamily::knapsack: {
      std::vector<double> cost(size, 0.0);
      for (std::uint64_t mask = 1; mask < size; ++mask) {
        cost[mask] = cost[mask & (mask - 1)] +
                     costs_[static_cast<size_t>(std::countr_zero(mask))];
      }
      for (std::uint64_t mask = 0; mask < size; ++mask) {
        if (cost[mask] <= budget_) feasible.push_back(ElementSet::from_bits(mask));
      }
      break;
    }
  }
  return feasible;
}

}  // namespace submax
