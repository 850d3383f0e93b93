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
// Multilinear extension F of a set function f:
//
//   F(x) = sum_S f(S) * prod_{s in S} x(s) * prod_{s not in S} (1 - x(s)),
//
// i.e. the expected value of f on the random set R(x) that contains each
// element s independently with probability x(s). Exact evaluation enumerates
// all 2^n subsets and is limited to n <= 20; the sampled estimators work at
// any size and are driven by a counter-based sample stream so results are
// reproducible and independent of evaluation order.

#ifndef SUBMAX_MULTILINEAR_HPP_
#define SUBMAX_MULTILINEAR_HPP_

#include <cstdint>
#include <vector>

#include "submax/oracles.hpp"
#include "submax/rng.hpp"
#include "submax/types.hpp"

namespace submax {

// Exact subset enumeration is restricted to this many elements.
inline constexpr int kExactEnumerationLimit = 20;

// Identifies the Bernoulli draw for one element of one sample set. A draw is
// mix(seed, timestep, sample, element), so two streams with equal fields
// produce identical sample sets no matter how calls are interleaved.
struct SampleStream {
  std::uint64_t seed = 0;
  std::uint64_t timestep = 0;

  double uniform(std::uint64_t sample, std::uint64_t element) const {
    return to_unit_interval(counter_hash(seed, timestep, sample, element));
  }

  bool include(std::uint64_t sample, int element, double probability) const {
    return uniform(sample, static_cast<std::uint64_t>(element)) < probability;
  }
};

enum class GradientMode { exact, sampled };

struct GradientEstimate {
  std::vector<double> values;
  GradientMode mode = GradientMode::exact;
  std::int64_t sample_count = 0;  // 0 in exact mode
};

// F(x) by full enumeration. Throws SizeError above kExactEnumerationLimit.
double evaluate_exact(const SetFunctionOracle& f, const FractionalPoint& x);

// (1/d) * sum_j f(R_j) over d sample sets drawn from the stream.
double evaluate_sampled(const SetFunctionOracle& f, const FractionalPoint& x,
                        std::int64_t d, const SampleStream& stream);

// All partial derivatives of F at x. The partial derivative in direction s
// equals F(x with x(s)=1) - F(x with x(s)=0) = E[f(R - s + s) - f(R - s)].
GradientEstimate gradient_exact(const SetFunctionOracle& f,
                                const FractionalPoint& x);

// Estimates every partial derivative from d shared sample sets:
//   w(s) = (1/d) * sum_j [ f(R_j - s + s) - f(R_j - s) ],
// removing s from R_j unconditionally. Accumulation order is fixed by sample
// index, so the result is bit-identical for a given (stream, d).
GradientEstimate gradient_sampled(const SetFunctionOracle& f,
                                  const FractionalPoint& x, std::int64_t d,
                                  const SampleStream& stream);

// Default number of samples per gradient estimate,
//   d = ceil(n^2 * ln(n^2 / delta) / (2 * eps^2)),
// floored at 1. Chosen so that every per-coordinate estimate stays within
// 2 * eps * tau / n of the true derivative with high probability.
std::int64_t default_sample_count(int n, double delta, double eps);

}  // namespace submax

#endif  // SUBMAX_MULTILINEAR_HPP_
