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

#include "submax/types.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

namespace submax {
namespace {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw ValidationError("n: ground set size must be in [1, 63], got " +
                          std::to_string(n));
  }
}

}  // namespace

GroundSet::GroundSet(int n) : n_(n) { check_ground_size(n); }

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  check_ground_size(n);
  if (labels_.empty()) return;
  if (static_cast<int>(labels_.size()) != n_) {
    throw ValidationError("labels: expected " + std::to_string(n_) +
                          " entries, got " + std::to_string(labels_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const std::string& label : labels_) {
    if (!seen.insert(label).second) {
      throw ValidationError("labels: duplicate label \"" + label + "\"");
    }
  }
}

FractionalPoint::FractionalPoint(std::vector<double> coords)
    : coords_(std::move(coords)) {
  for (size_t s = 0; s < coords_.size(); ++s) {
    double v = coords_[s];
    // NaN fails both comparisons below on its own.
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ValidationError("coordinate " + std::to_string(s) +
                            " outside [0, 1]: " + std::to_string(v));
    }
  }
}

FractionalPoint FractionalPoint::zeros(int n) {
  return FractionalPoint(std::vector<double>(static_cast<size_t>(n), 0.0));
}

FractionalPoint FractionalPoint::indicator(ElementSet set, int n) {
  std::vector<double> coords(static_cast<size_t>(n), 0.0);
  for (int s = 0; s < n; ++s) {
    if (set.contains(s)) coords[static_cast<size_t>(s)] = 1.0;
  }
  return FractionalPoint(std::move(coords));
}

double FractionalPoint::max_coordinate() const {
  double best = 0.0;
  for (double v : coords_) best = std::max(best, v);
  return best;
}

}  // namespace submax
