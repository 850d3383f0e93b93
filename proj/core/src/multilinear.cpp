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

#include "submax/multilinear.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace submax {
namespace {

void check_exact_size(int n, const char* op) {
  if (n > kExactEnumerationLimit) {
    throw SizeError(std::string(op) + ": exact enumeration supports n <= " +
                    std::to_string(kExactEnumerationLimit) + ", got n = " +
                    std::to_string(n));
  }
}

void check_sample_count(std::int64_t d) {
  if (d < 1) {
    throw ValidationError("sample count must be >= 1, got " +
                          std::to_string(d));
  }
}

// Draws sample set number `sample` from the product distribution at x.
ElementSet draw_set(const FractionalPoint& x, const SampleStream& stream,
                    std::int64_t sample) {
  std::uint64_t bits = 0;
  const int n = x.size();
  for (int s = 0; s < n; ++s) {
    if (stream.include(static_cast<std::uint64_t>(sample), s, x[s])) {
      bits |= std::uint64_t{1} << s;
    }
  }
  return ElementSet::from_bits(bits);
}

}  // namespace

double evaluate_exact(const SetFunctionOracle& f, const FractionalPoint& x) {
  const int n = x.size();
  check_exact_size(n, "evaluate_exact");
  // Inclusion probabilities of all 2^n subsets, built one element at a time:
  // after round s, p[mask] is correct for every mask over elements 0..s.
  std::vector<double> p(size_t{1} << n);
  p[0] = 1.0;
  for (int s = 0; s < n; ++s) {
    const size_t bit = size_t{1} << s;
    for (size_t mask = 0; mask < bit; ++mask) {
      p[mask | bit] = p[mask] * x[s];
      p[mask] *= 1.0 - x[s];
    }
  }
  double total = 0.0;
  for (size_t mask = 0; mask < p.size(); ++mask) {
    total += p[mask] * f.evaluate(ElementSet::from_bits(mask));
  }
  return total;
}

double evaluate_sampled(const SetFunctionOracle& f, const FractionalPoint& x,
                        std::int64_t d, const SampleStream& stream) {
  check_sample_count(d);
  double total = 0.0;
  for (std::int64_t j = 0; j < d; ++j) {
    total += f.evaluate(draw_set(x, stream, j));
  }
  return total / static_cast<double>(d);
}

GradientEstimate gradient_exact(const SetFunctionOracle& f,
                                const FractionalPoint& x) {
  const int n = x.size();
  check_exact_size(n, "gradient_exact");
  std::vector<double> grad(static_cast<size_t>(n));
  // dF/dx_s = sum over sets S avoiding s of q(S) * [f(S + s) - f(S)], where
  // q is the product distribution over the remaining n - 1 coordinates.
  // Working over the reduced ground set avoids dividing by 1 - x_s.
  const size_t reduced_size = size_t{1} << (n - 1);
  std::vector<double> q(reduced_size);
  for (int s = 0; s < n; ++s) {
    q.assign(reduced_size, 0.0);
    q[0] = 1.0;
    int pos = 0;
    for (int e = 0; e < n; ++e) {
      if (e == s) continue;
      const size_t bit = size_t{1} << pos;
      for (size_t mask = 0; mask < bit; ++mask) {
        q[mask | bit] = q[mask] * x[e];
        q[mask] *= 1.0 - x[e];
      }
      ++pos;
    }
    const std::uint64_t low = (std::uint64_t{1} << s) - 1;
    double acc = 0.0;
    for (size_t reduced = 0; reduced < reduced_size; ++reduced) {
      // Re-insert a zero bit at position s to index the full ground set.
      const std::uint64_t bits =
          (static_cast<std::uint64_t>(reduced) & low) |
          ((static_cast<std::uint64_t>(reduced) & ~low) << 1);
      const ElementSet set = ElementSet::from_bits(bits);
      acc += q[reduced] * (f.evaluate(set.with(s)) - f.evaluate(set));
    }
    grad[static_cast<size_t>(s)] = acc;
  }
  return GradientEstimate{std::move(grad), GradientMode::exact, 0};
}

GradientEstimate gradient_sampled(const SetFunctionOracle& f,
                                  const FractionalPoint& x, std::int64_t d,
                                  const SampleStream& stream) {
  check_sample_count(d);
  const int n = x.size();
  std::vector<double> grad(static_cast<size_t>(n), 0.0);
  // One shared batch of sample sets feeds every coordinate. Element s is
  // removed from R unconditionally before taking its marginal, so each
  // sample costs n + 1 oracle calls instead of 2n.
  for (std::int64_t j = 0; j < d; ++j) {
    const ElementSet r = draw_set(x, stream, j);
    const double f_r = f.evaluate(r);
    for (int s = 0; s < n; ++s) {
      if (r.contains(s)) {
        grad[static_cast<size_t>(s)] += f_r - f.evaluate(r.without(s));
      } else {
        grad[static_cast<size_t>(s)] += f.evaluate(r.with(s)) - f_r;
      }
    }
  }
  for (double& g : grad) g /= static_cast<double>(d);
  return GradientEstimate{std::move(grad), GradientMode::sampled, d};
}

std::int64_t default_sample_count(int n, double delta, double eps) {
  if (n < 1) throw ValidationError("default_sample_count: n must be >= 1");
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw ValidationError("default_sample_count: delta must be in (0, 1]");
  }
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ValidationError("default_sample_count: eps must be in (0, 1]");
  }
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  const double raw = n2 * std::log(n2 / delta) / (2.0 * eps * eps);
  // The tiny backoff keeps values that are integers up to representation
  // noise from being bumped a full step up.
  const double rounded = std::ceil(raw - 1e-9);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(rounded));
}

}  // namespace submax
