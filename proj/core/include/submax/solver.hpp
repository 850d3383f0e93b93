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
// Measured continuous greedy with a time-adaptive objective weight.
//
// The solver maximizes F(x) + <l, x> over a down-closed polytope P, where F
// is the multilinear extension of a non-negative submodular f and l is an
// arbitrary modular weight vector. Starting from x = 0 it takes 1/delta
// steps; at time t = k * delta it
//
//   1. estimates the gradient w of F at x_t (sampled or exact),
//   2. weights it by a(t) = (1 + delta)^((t - 1) / delta), which grows from
//      roughly 1/e at t = 0 to exactly 1 at t = 1, so early steps favor the
//      modular term and late steps the submodular one,
//   3. finds z_t = argmax_{z in P} <z * (1 - x_t), a(t) * w + l>,
//   4. moves x by delta * z_t * (1 - x_t)  (the "measured" update, which
//      keeps every coordinate strictly below 1).
//
// With the default step size delta = 1 / ceil(2 n^2 / eps) the final point
// satisfies, against any feasible set OPT,
//
//   F(x) + L(x) >= (1/e - eps) * f(OPT)
//                  + (1/e - eps) * l+(OPT) + l-(OPT) - 8 * eps * tau,
//
// where l+/l- are the positive and negative parts of the modular value of
// OPT and tau = max_s f({s}). For monotone families the f(OPT) factor
// improves to 1 - 1/e - eps. The verify module certifies both bounds against
// brute force.

#ifndef SUBMAX_SOLVER_HPP_
#define SUBMAX_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "submax/instance.hpp"
#include "submax/multilinear.hpp"
#include "submax/polytope.hpp"
#include "submax/types.hpp"

namespace submax {

struct SolverConfig {
  double eps = 0.1;  // accuracy parameter in (0, 1]
  GradientMode gradient_mode = GradientMode::sampled;
  std::uint64_t seed = 0;
  // Step size override; must be the reciprocal of a positive integer.
  // Default: 1 / ceil(2 n^2 / eps).
  std::optional<double> delta_override;
  // Samples per gradient estimate; default default_sample_count(n,delta,eps).
  std::optional<std::int64_t> d_override;
};

// State captured at the start of each round, plus a final record at t = 1.
// gamma and f_value track the surrogate potential
//   Gamma(t) = a(t) * F(x_t) + L(x_t)
// and are only computed in exact mode (NaN otherwise).
struct TraceRecord {
  double t = 0.0;
  double weight = 0.0;  // a(t)
  FractionalPoint z;    // direction chosen at t; all zeros in the final record
  double z_objective = 0.0;
  FractionalPoint x;  // state at t
  double gamma = 0.0;
  double f_value = 0.0;
  double l_value = 0.0;
  double coordinate_cap = 0.0;  // 1 - (1 - delta)^(t / delta)
};

struct SolverTrace {
  double delta = 0.0;
  std::int64_t steps = 0;
  std::vector<TraceRecord> records;  // steps + 1 entries, t = 0 .. 1
};

struct SolverResult {
  FractionalPoint x_final;
  double f_estimate = 0.0;
  bool f_estimate_exact = false;
  std::int64_t f_estimate_samples = 0;  // 0 when exact
  double l_value = 0.0;
  SolverTrace trace;
};

// a(t) = (1 + delta)^((t - 1) / delta); equals 1 exactly at t = 1.
double adaptive_weight(double t, double delta);

// Default step size 1 / ceil(2 n^2 / eps).
double default_step_size(int n, double eps);

// Runs the continuous greedy loop. Throws ValidationError for a bad config,
// SizeError when exact mode is requested beyond the enumeration limit.
// Deterministic: identical instance + config give bit-identical results.
SolverResult solve(const InstanceSpec& instance, const SolverConfig& config);

// CSV export with header
//   t,weight,Gamma,F,L,z_0,...,z_{n-1},x_0,...,x_{n-1}
// one row per trace record; doubles carry 17 significant digits. Values not
// computed in the active mode (Gamma, F in sampled runs) appear as nan.
std::string trace_to_csv(const SolverTrace& trace);

// Full solve report as canonical JSON: alphabetical keys, 17 significant
// digits, uncomputed values as null. Identical inputs yield identical bytes.
std::string solve_report_to_json(const SolverResult& result,
                                 const SolverConfig& config,
                                 const std::string& instance_digest);

// Reconstructs the trajectory stored in a solve report, so that
// trace_to_csv(trace_from_report_json(r)) reproduces the original CSV
// byte for byte. Throws SchemaError on malformed documents.
SolverTrace trace_from_report_json(std::string_view text);

}  // namespace submax

#endif  // SUBMAX_SOLVER_HPP_
