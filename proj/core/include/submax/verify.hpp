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
// Certification of solver output against brute force. For desk-sized
// instances (n <= 20) the true optimum of f + l over the feasible sets can
// be enumerated; the guarantee bounds below turn that optimum into the value
// the solver is contractually required to reach.

#ifndef SUBMAX_VERIFY_HPP_
#define SUBMAX_VERIFY_HPP_

#include <string>
#include <vector>

#include "submax/instance.hpp"
#include "submax/solver.hpp"
#include "submax/types.hpp"

namespace submax {

// Ratio beta = sum_pos / |sum_neg| of the modular value split on the optimal
// set. Kept symbolic at the endpoints: "infinite" when sum_neg = 0 and
// sum_pos > 0, "undefined" when both parts vanish. No floating-point
// infinity ever enters arithmetic.
enum class BetaKind { finite, infinite, undefined };

struct Beta {
  BetaKind kind = BetaKind::undefined;
  double value = 0.0;  // meaningful only when kind == finite
};

struct OptimalityCertificate {
  ElementSet opt_set;      // maximizer of f + l; ties -> smallest bitmask
  double f_opt = 0.0;      // f(OPT)
  double l_opt = 0.0;      // l(OPT)
  double sum_pos = 0.0;    // sum of non-negative l(o), o in OPT
  double sum_neg = 0.0;    // sum of negative l(o), o in OPT
  Beta beta;
  double tau = 0.0;        // max_s f({s})
  ObjectiveFamily objective_family = ObjectiveFamily::table;
};

// Enumerates every feasible set. Throws SizeError for n > 20.
OptimalityCertificate brute_force_opt(const InstanceSpec& instance);

// Non-monotone guarantee in split form:
//   (1/e - eps) * f_opt + (1/e - eps) * sum_pos + sum_neg - 8 * eps * tau.
// The split form is equivalent to the factored
// ((beta - e) / (e * (beta - 1))) * l_opt statement and stays finite at the
// beta endpoints.
double guarantee_bound(const OptimalityCertificate& cert, double eps);

// Monotone-family guarantee at stopping time lambda in [0, 1]:
//   (1 - e^-lambda - eps) * f_opt
//     + lambda * ((1/e - eps) * sum_pos + sum_neg) - 8 * eps * tau.
// Throws DomainError unless the certificate's objective family is monotone.
double guarantee_bound_monotone(const OptimalityCertificate& cert, double eps,
                                double lambda);

struct GuaranteeReport {
  std::string instance_digest;
  SolverConfig config;
  double delta = 0.0;
  std::int64_t trials = 0;
  double bound = 0.0;
  bool monotone_bound = false;  // which guarantee was applied
  std::vector<double> achieved;  // exact F + L of each trial's output
  double pass_fraction = 0.0;
  double required_fraction = 0.0;  // 1 in exact mode, 1 - 3/n sampled
  bool passed = false;
  OptimalityCertificate certificate;
};

// Runs the solver `trials` times with seeds config.seed, config.seed + 1, ...
// and scores each run against the applicable guarantee bound. Requires
// n <= 20 so the achieved values are exact.
GuaranteeReport check_guarantee(const InstanceSpec& instance,
                                const SolverConfig& config,
                                std::int64_t trials);

// Canonical report serialization: alphabetical keys, 17 significant digits.
// Beta endpoints appear as the JSON strings "inf" / "undefined".
std::string report_to_json(const GuaranteeReport& report);

// Standalone certificate serialization (same conventions), tagged with the
// digest of the instance it certifies.
std::string certificate_to_json(const OptimalityCertificate& cert,
                                const std::string& instance_digest);

// Uniform weights m / k on every element: the modular term that reduces
// cardinality-constrained f + l maximization to plain f maximization via
// f(S) = (f + l)(S) - (m / k) * |S|.
ModularWeights reduction_modular(double m, int k, int n);

}  // namespace submax

#endif  // SUBMAX_VERIFY_HPP_
