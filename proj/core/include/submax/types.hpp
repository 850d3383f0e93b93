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

#ifndef SUBMAX_TYPES_HPP_
#define SUBMAX_TYPES_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

// Ground sets are indexed 0..n-1 with n <= 63 so that any subset fits into a
// single 64-bit word.
inline constexpr int kMaxGroundSize = 63;

// A subset of the ground set, stored as a bitmask. Element s corresponds to
// bit (1 << s). Value type; all operations return new sets.
class ElementSet {
 public:
  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet set;
    set.bits_ = bits;
    return set;
  }

  static constexpr ElementSet empty_set() { return ElementSet(); }

  static constexpr ElementSet singleton(int s) {
    return from_bits(std::uint64_t{1} << s);
  }

  static constexpr ElementSet full(int n) {
    return from_bits(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  }

  constexpr bool contains(int s) const {
    return (bits_ >> s) & std::uint64_t{1};
  }

  constexpr ElementSet with(int s) const {
    return from_bits(bits_ | (std::uint64_t{1} << s));
  }

  constexpr ElementSet without(int s) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << s));
  }

  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr int size() const { return std::popcount(bits_); }

  constexpr std::uint64_t bits() const { return bits_; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// The ground set: a size n in [1, 63] plus optional distinct element labels.
class GroundSet {
 public:
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
  std::vector<std::string> labels_;
};

// A point of [0,1]^n. Construction validates the box constraint exactly;
// nothing is clamped or repaired.
class FractionalPoint {
 public:
  explicit FractionalPoint(std::vector<double> coords);

  static FractionalPoint zeros(int n);
  static FractionalPoint indicator(ElementSet set, int n);

  int size() const { return static_cast<int>(coords_.size()); }
  double operator[](int s) const { return coords_[static_cast<size_t>(s)]; }
  const std::vector<double>& coords() const { return coords_; }
  double max_coordinate() const;

  friend bool operator==(const FractionalPoint&,
                         const FractionalPoint&) = default;

 private:
  std::vector<double> coords_;
};

// Per-element weights of the modular term; entries may have either sign.
struct ModularWeights {
  std::vector<double> weights;

  friend bool operator==(const ModularWeights&,
                         const ModularWeights&) = default;
};

}  // namespace submax

#endif  // SUBMAX_TYPES_HPP_
