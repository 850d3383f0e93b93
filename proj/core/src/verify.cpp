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

#include "submax/verify.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "format.hpp"
#include "submax/multilinear.hpp"
#include "submax/oracles.hpp"
#include "submax/polytope.hpp"

namespace submax {
namespace {

Beta beta_of_split(double sum_pos, double sum_neg) {
  if (sum_neg == 0.0) {
    if (sum_pos == 0.0) return Beta{BetaKind::undefined, 0.0};
    return Beta{BetaKind::infinite, 0.0};
  }
  return Beta{BetaKind::finite, sum_pos / -sum_neg};
}

std::string beta_to_json(const Beta& beta) {
  switch (beta.kind) {
    case BetaKind::finite: return detail::format_double(beta.value);
    case BetaKind::infinite: return "\"inf\"";
    case BetaKind::undefined: return "\"undefined\"";
  }
  return "\"undefined\"";
}

}  // namespace

OptimalityCertificate brute_force_opt(const InstanceSpec& instance) {
  validate_instance(instance);
  const int n = instance.ground.size();
  const SetFunctionOracle oracle(instance.objective, n);
  const PolytopeOracle polytope(instance.constraint, n);

  bool have_best = false;
  ElementSet best_set;
  double best_value = 0.0;
  double best_f = 0.0;
  double best_l = 0.0;
  // enumerate_feasible_sets returns increasing bitmasks and the comparison
  // below is strict, so ties resolve to the smallest bitmask.
  for (ElementSet set : polytope.enumerate_feasible_sets()) {
    const double f = oracle.evaluate(set);
    const double l = modular_value(instance.modular, set);
    if (!have_best || f + l > best_value) {
      have_best = true;
      best_set = set;
      best_value = f + l;
      best_f = f;
      best_l = l;
    }
  }
  if (!have_best) {
    // Down-closed families always admit the empty set; reaching this point
    // would mean a broken polytope oracle.
    throw ValidationError("brute_force_opt: no feasible set");
  }

  double sum_pos = 0.0;
  double sum_neg = 0.0;
  for (int s = 0; s < n; ++s) {
    if (!best_set.contains(s)) continue;
    const double w = instance.modular.weights[static_cast<size_t>(s)];
    if (w >= 0.0) {
      sum_pos += w;
    } else {
      sum_neg += w;
    }
  }

  return OptimalityCertificate{best_set,
                               best_f,
                               best_l,
                               sum_pos,
                               sum_neg,
                               beta_of_split(sum_pos, sum_neg),
                               oracle.max_singleton(),
                               objective_family(instance.objective)};
}

double guarantee_bound(const OptimalityCertificate& cert, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ValidationError("guarantee_bound: eps must be in (0, 1]");
  }
  const double inv_e = 1.0 / std::numbers::e;
  return (inv_e - eps) * cert.f_opt + (inv_e - eps) * cert.sum_pos +
         cert.sum_neg - 8.0 * eps * cert.tau;
}

double guarantee_bound_monotone(const OptimalityCertificate& cert, double eps,
                                double lambda) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ValidationError("guarantee_bound_monotone: eps must be in (0, 1]");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("guarantee_bound_monotone: lambda must be in [0, 1]");
  }
  if (cert.objective_family != ObjectiveFamily::coverage &&
      cert.objective_family != ObjectiveFamily::facility &&
      cert.objective_family != ObjectiveFamily::modular_nonneg) {
    throw DomainError(
        "guarantee_bound_monotone: objective family is not monotone");
  }
  const double inv_e = 1.0 / std::numbers::e;
  return (1.0 - std::exp(-lambda) - eps) * cert.f_opt +
         lambda * ((inv_e - eps) * cert.sum_pos + cert.sum_neg) -
         8.0 * eps * cert.tau;
}

GuaranteeReport check_guarantee(const InstanceSpec& instance,
                                const SolverConfig& config,
                                std::int64_t trials) {
  if (trials < 1) {
    throw ValidationError("check_guarantee: trials must be >= 1");
  }
  const int n = instance.ground.size();
  if (n > kExactEnumerationLimit) {
    throw SizeError("check_guarantee: requires n <= " +
                    std::to_string(kExactEnumerationLimit) +
                    " for exact scoring");
  }

  GuaranteeReport report;
  report.instance_digest = instance_digest(instance);
  report.config = config;
  report.trials = trials;
  report.certificate = brute_force_opt(instance);
  report.monotone_bound =
      report.certificate.objective_family == ObjectiveFamily::coverage ||
      report.certificate.objective_family == ObjectiveFamily::facility ||
      report.certificate.objective_family == ObjectiveFamily::modular_nonneg;
  report.bound = report.monotone_bound
                     ? guarantee_bound_monotone(report.certificate, config.eps, 1.0)
                     : guarantee_bound(report.certificate, config.eps);

  std::int64_t passed_trials = 0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    SolverConfig trial_config = config;
    trial_config.seed = config.seed + static_cast<std::uint64_t>(trial);
    const SolverResult result = solve(instance, trial_config);
    report.delta = result.trace.delta;
    const double achieved = result.f_estimate + result.l_value;
    report.achieved.push_back(achieved);
    if (achieved >= report.bound) ++passed_trials;
  }
  report.pass_fraction =
      static_cast<double>(passed_trials) / static_cast<double>(trials);
  report.required_fraction =
      config.gradient_mode == GradientMode::exact
          ? 1.0
          : 1.0 - 3.0 / static_cast<double>(n);
  report.passed = report.pass_fraction >= report.required_fraction;
  return report;
}

std::string report_to_json(const GuaranteeReport& report) {
  using detail::format_double;
  std::string out = "{\n";
  out += "  \"achieved\": [";
  for (size_t i = 0; i < report.achieved.size(); ++i) {
    if (i) out += ',';
    out += format_double(report.achieved[i]);
  }
  out += "],\n";
  out += "  \"bound\": " + format_double(report.bound) + ",\n";
  out += "  \"certificate\": {";
  out += "\"beta\": " + beta_to_json(report.certificate.beta);
  out += ", \"f_opt\": " + format_double(report.certificate.f_opt);
  out += ", \"l_opt\": " + format_double(report.certificate.l_opt);
  out += ", \"opt_bitmask\": " + std::to_string(report.certificate.opt_set.bits());
  out += ", \"sum_neg\": " + format_double(report.certificate.sum_neg);
  out += ", \"sum_pos\": " + format_double(report.certificate.sum_pos);
  out += ", \"tau\": " + format_double(report.certificate.tau);
  out += "},\n";
  out += "  \"config\": {";
  out += "\"delta\": " + format_double(report.delta);
  out += ", \"eps\": " + format_double(report.config.eps);
  out += std::string(", \"mode\": ") +
         (report.config.gradient_mode == GradientMode::exact ? "\"exact\""
                                                             : "\"sampled\"");
  out += ", \"seed\": " + std::to_string(report.config.seed);
  out += "},\n";
  out += "  \"instance_digest\": " + detail::json_string(report.instance_digest) + ",\n";
  out += std::string("  \"monotone_bound\": ") +
         (report.monotone_bound ? "true" : "false") + ",\n";
  out += "  \"pass_fraction\": " + format_double(report.pass_fraction) + ",\n";
  out += std::string("  \"passed\": ") + (report.passed ? "true" : "false") + ",\n";
  out += "  \"required_fraction\": " + format_double(report.required_fraction) + ",\n";
  out += "  \"trials\": " + std::to_string(report.trials) + "\n";
  out += "}\n";
  return out;
}

std::string certificate_to_json(const OptimalityCertificate& cert,
                                const std::string& instance_digest) {
  using detail::format_double;
  std::string out = "{\n";
  out += "  \"beta\": " + beta_to_json(cert.beta) + ",\n";
  out += "  \"f_opt\": " + format_double(cert.f_opt) + ",\n";
  out += "  \"instance_digest\": " + detail::json_string(instance_digest) + ",\n";
  out += "  \"l_opt\": " + format_double(cert.l_opt) + ",\n";
  out += "  \"opt_bitmask\": " + std::to_string(cert.opt_set.bits()) + ",\n";
  out += "  \"sum_neg\": " + format_double(cert.sum_neg) + ",\n";
  out += "  \"sum_pos\": " + format_double(cert.sum_pos) + ",\n";
  out += "  \"tau\": " + format_double(cert.tau) + "\n";
  out += "}\n";
  return out;
}

ModularWeights reduction_modular(double m, int k, int n) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw ValidationError("reduction_modular: m must be positive and finite");
  }
  if (k < 1) throw ValidationError("reduction_modular: k must be >= 1");
  if (n < 1 || n > kMaxGroundSize) {
    throw ValidationError("reduction_modular: n must be in [1, 63]");
  }
  return ModularWeights{
      std::vector<double>(static_cast<size_t>(n), m / static_cast<double>(k))};
}

}  // namespace submax
