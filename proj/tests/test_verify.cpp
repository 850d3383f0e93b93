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

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "submax/errors.hpp"
#include "submax/generator.hpp"
#include "submax/oracles.hpp"
#include "submax/polytope.hpp"
#include "submax/verify.hpp"

namespace {

using namespace submax;

OptimalityCertificate make_certificate(double f_opt, double sum_pos,
                                       double sum_neg, double tau,
                                       ObjectiveFamily family) {
  OptimalityCertificate cert;
  cert.f_opt = f_opt;
  cert.l_opt = sum_pos + sum_neg;
  cert.sum_pos = sum_pos;
  cert.sum_neg = sum_neg;
  if (sum_neg == 0.0) {
    cert.beta = sum_pos == 0.0 ? Beta{BetaKind::undefined, 0.0}
                               : Beta{BetaKind::infinite, 0.0};
  } else {
    cert.beta = Beta{BetaKind::finite, sum_pos / -sum_neg};
  }
  cert.tau = tau;
  cert.objective_family = family;
  return cert;
}

TEST_CASE("verify: brute force finds the positive modular weight") {
  // f identically zero, modular (5, -2): the best feasible set is {0}.
  InstanceSpec instance{GroundSet(2), TableObjective{{0.0, 0.0, 0.0, 0.0}},
                        ModularWeights{{5.0, -2.0}}, CardinalityConstraint{2}};
  const OptimalityCertificate cert = brute_force_opt(instance);
  CHECK(cert.opt_set.bits() == 1);
  CHECK(cert.f_opt == 0.0);
  CHECK(cert.l_opt == 5.0);
  CHECK(cert.sum_pos == 5.0);
  CHECK(cert.sum_neg == 0.0);
  CHECK(cert.beta.kind == BetaKind::infinite);
  CHECK(cert.tau == 0.0);
}

TEST_CASE("verify: brute force on the two-node cut") {
  InstanceSpec instance{GroundSet(2), CutObjective{{CutArc{0, 1, 1.0}}},
                        ModularWeights{{0.0, 0.0}}, CardinalityConstraint{2}};
  const OptimalityCertificate cert = brute_force_opt(instance);
  CHECK(cert.opt_set.bits() == 1);
  CHECK(cert.f_opt == 1.0);
  CHECK(cert.l_opt == 0.0);
  // A zero-weight optimum has neither a positive nor a negative part.
  CHECK(cert.beta.kind == BetaKind::undefined);
}

TEST_CASE("verify: all-negative modular weights leave the empty optimum") {
  InstanceSpec instance{GroundSet(2), TableObjective{{0.0, 0.0, 0.0, 0.0}},
                        ModularWeights{{-1.0, -2.0}}, CardinalityConstraint{2}};
  const OptimalityCertificate cert = brute_force_opt(instance);
  CHECK(cert.opt_set == ElementSet::empty_set());
  CHECK(cert.sum_pos == 0.0);
  CHECK(cert.sum_neg == 0.0);
  CHECK(cert.beta.kind == BetaKind::undefined);
}

TEST_CASE("verify: certificates dominate every feasible set") {
  for (std::uint64_t seed : {50, 51, 52, 53}) {
    GeneratorOptions options;
    options.n = 7;
    options.seed = seed;
    const InstanceSpec instance = generate_instance(options);
    const OptimalityCertificate cert = brute_force_opt(instance);
    const SetFunctionOracle f(instance.objective, 7);
    const PolytopeOracle p(instance.constraint, 7);
    CAPTURE(seed);

    CHECK(cert.sum_pos >= 0.0);
    CHECK(cert.sum_neg <= 0.0);
    CHECK(cert.sum_pos + cert.sum_neg ==
          doctest::Approx(cert.l_opt).epsilon(1e-12));
    if (cert.beta.kind == BetaKind::finite && cert.sum_neg != 0.0) {
      CHECK(cert.sum_pos ==
            doctest::Approx(cert.beta.value * -cert.sum_neg).epsilon(1e-9));
    }
    for (const ElementSet set : p.enumerate_feasible_sets()) {
      CHECK(cert.f_opt + cert.l_opt >=
            f.evaluate(set) + modular_value(instance.modular, set) - 1e-12);
    }
  }
}

TEST_CASE("verify: ties resolve to the smallest bitmask") {
  // Two symmetric elements, no modular tilt: {} , {0}, {1} all tie at 0 for
  // the zero function, so the empty set (bitmask 0) must win.
  InstanceSpec instance{GroundSet(2), TableObjective{{0.0, 0.0, 0.0, 0.0}},
                        ModularWeights{{0.0, 0.0}}, CardinalityConstraint{1}};
  CHECK(brute_force_opt(instance).opt_set.bits() == 0);
}

TEST_CASE("verify: split-form bound matches the worked example") {
  // f_opt=1, sum_pos=5, sum_neg=-1, tau=1, eps=0.1:
  //   (1/e - 0.1) * (1 + 5) - 1 - 0.8 = -0.192723...
  const OptimalityCertificate cert =
      make_certificate(1.0, 5.0, -1.0, 1.0, ObjectiveFamily::cut);
  const double inv_e = 1.0 / std::numbers::e;
  const double expected = (inv_e - 0.1) * 6.0 - 1.0 - 0.8;
  CHECK(guarantee_bound(cert, 0.1) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(guarantee_bound(cert, 0.1) ==
        doctest::Approx(-0.192723).epsilon(1e-5));
  CHECK_THROWS_AS(guarantee_bound(cert, 0.0), ValidationError);
}

TEST_CASE("verify: beta endpoints reproduce the stated factors") {
  const double inv_e = 1.0 / std::numbers::e;
  const double eps = 0.2;

  // sum_neg = 0 (beta infinite): the modular factor is exactly (1/e - eps).
  const OptimalityCertificate plus =
      make_certificate(2.0, 3.0, 0.0, 1.5, ObjectiveFamily::cut);
  CHECK(plus.beta.kind == BetaKind::infinite);
  CHECK(guarantee_bound(plus, eps) ==
        (inv_e - eps) * 2.0 + (inv_e - eps) * 3.0 + 0.0 - 8.0 * eps * 1.5);

  // sum_pos = 0 (beta = 0): the modular coefficient is exactly 1.
  const OptimalityCertificate minus =
      make_certificate(2.0, 0.0, -3.0, 1.5, ObjectiveFamily::cut);
  CHECK(minus.beta.kind == BetaKind::finite);
  CHECK(minus.beta.value == 0.0);
  CHECK(guarantee_bound(minus, eps) ==
        (inv_e - eps) * 2.0 + -3.0 - 8.0 * eps * 1.5);
}

TEST_CASE("verify: split form equals the factored form away from poles") {
  // At eps = 0: (1/e) sum_pos + sum_neg = ((beta - e) / (e (beta - 1))) l_opt
  // whenever beta is finite and differs from 1.
  const double e = std::numbers::e;
  for (double sum_pos : {5.0, 0.5, 2.0}) {
    for (double sum_neg : {-1.0, -4.0}) {
      const double beta = sum_pos / -sum_neg;
      if (std::abs(beta - 1.0) < 1e-9) continue;
      const double l_opt = sum_pos + sum_neg;
      const double split = (1.0 / e) * sum_pos + sum_neg;
      const double factored = ((beta - e) / (e * (beta - 1.0))) * l_opt;
      CHECK(std::abs(split - factored) <= 1e-9);
    }
  }
}

TEST_CASE("verify: bound is nonincreasing in eps") {
  const OptimalityCertificate cert =
      make_certificate(2.0, 1.0, -0.5, 1.0, ObjectiveFamily::cut);
  double previous = guarantee_bound(cert, 0.01);
  for (double eps : {0.1, 0.2, 0.4, 0.8, 1.0}) {
    const double bound = guarantee_bound(cert, eps);
    CHECK(bound <= previous + 1e-12);
    previous = bound;
  }
}

TEST_CASE("verify: monotone bound needs a monotone family") {
  const OptimalityCertificate monotone =
      make_certificate(2.0, 0.0, 0.0, 1.0, ObjectiveFamily::coverage);
  const double inv_e = 1.0 / std::numbers::e;
  // lambda = 1, no modular part: (1 - 1/e - eps) f_opt - 8 eps tau.
  CHECK(guarantee_bound_monotone(monotone, 0.1, 1.0) ==
        doctest::Approx((1.0 - inv_e - 0.1) * 2.0 - 0.8).epsilon(1e-15));
  // lambda = 0 keeps only the additive error (e^0 = 1 cancels f_opt).
  CHECK(guarantee_bound_monotone(monotone, 0.1, 0.0) ==
        doctest::Approx(-0.1 * 2.0 - 0.8).epsilon(1e-15));

  const OptimalityCertificate non_monotone =
      make_certificate(2.0, 0.0, 0.0, 1.0, ObjectiveFamily::cut);
  CHECK_THROWS_AS(guarantee_bound_monotone(non_monotone, 0.1, 1.0),
                  DomainError);
  CHECK_THROWS_AS(guarantee_bound_monotone(monotone, 0.1, 1.5),
                  ValidationError);
}

TEST_CASE("verify: check_guarantee certifies the zero-f instance") {
  InstanceSpec instance{GroundSet(2), TableObjective{{0.0, 0.0, 0.0, 0.0}},
                        ModularWeights{{5.0, -2.0}}, CardinalityConstraint{2}};
  SolverConfig config;
  config.eps = 0.3;
  config.gradient_mode = GradientMode::exact;
  const GuaranteeReport report = check_guarantee(instance, config, 3);
  CHECK(report.passed);
  CHECK(report.pass_fraction == 1.0);
  CHECK(report.required_fraction == 1.0);
  CHECK(report.trials == 3);
  REQUIRE(report.achieved.size() == 3);
  // Exact mode is deterministic: all trials achieve the same value, roughly
  // 5 * (1 - 1/e), far above the bound.
  CHECK(report.achieved[0] == report.achieved[1]);
  CHECK(report.achieved[0] >= report.bound);
  CHECK_FALSE(report.monotone_bound);  // table family is not assumed monotone

  CHECK_THROWS_AS(check_guarantee(instance, config, 0), ValidationError);
}

TEST_CASE("verify: check_guarantee applies the monotone bound to coverage") {
  GeneratorOptions options;
  options.n = 5;
  options.objective = ObjectiveFamily::coverage;
  options.constraint = ConstraintFamily::cardinality;
  options.seed = 60;
  const InstanceSpec instance = generate_instance(options);
  SolverConfig config;
  config.eps = 0.3;
  config.gradient_mode = GradientMode::sampled;
  config.seed = 11;
  config.d_override = 32;
  const GuaranteeReport report = check_guarantee(instance, config, 5);
  CHECK(report.monotone_bound);
  CHECK(report.required_fraction == doctest::Approx(1.0 - 3.0 / 5.0));
  CHECK(report.delta > 0.0);
  // The report serializes with the certificate embedded.
  const std::string json = report_to_json(report);
  CHECK(json.find("\"pass_fraction\"") != std::string::npos);
  CHECK(json.find("\"opt_bitmask\"") != std::string::npos);
}

TEST_CASE("verify: n=1 monotone singleton clears its bound") {
  InstanceSpec instance{GroundSet(1), ModularNonnegObjective{{1.0}},
                        ModularWeights{{0.0}}, CardinalityConstraint{1}};
  SolverConfig config;
  config.eps = 0.3;
  config.gradient_mode = GradientMode::exact;
  const GuaranteeReport report = check_guarantee(instance, config, 1);
  CHECK(report.passed);
  const double inv_e = 1.0 / std::numbers::e;
  CHECK(report.achieved[0] >= (1.0 - inv_e - 0.3) * 1.0);
}

TEST_CASE("verify: certificate serialization carries the digest") {
  InstanceSpec instance{GroundSet(2), CutObjective{{CutArc{0, 1, 1.0}}},
                        ModularWeights{{0.0, 0.0}}, CardinalityConstraint{2}};
  const std::string json = certificate_to_json(brute_force_opt(instance),
                                               instance_digest(instance));
  CHECK(json.find("\"opt_bitmask\": 1") != std::string::npos);
  CHECK(json.find("\"f_opt\": 1") != std::string::npos);
  CHECK(json.find("\"beta\": \"undefined\"") != std::string::npos);
  CHECK(json.find(instance_digest(instance)) != std::string::npos);
}

TEST_CASE("verify: reduction weights are uniform m over k") {
  const ModularWeights unit = reduction_modular(3.0, 3, 4);
  CHECK(unit.weights == std::vector<double>(4, 1.0));

  const ModularWeights ell = reduction_modular(6.0, 3, 5);
  // l(S) = (m/k) |S| = 2 |S|; exact for a two-element set.
  CHECK(modular_value(ell, ElementSet::from_bits(0b101)) == 4.0);

  CHECK_THROWS_AS(reduction_modular(0.0, 3, 4), ValidationError);
  CHECK_THROWS_AS(reduction_modular(1.0, 0, 4), ValidationError);
  CHECK_THROWS_AS(reduction_modular(1.0, 3, 0), ValidationError);
}

TEST_CASE("verify: reduction identity is exact on integer-valued cuts") {
  // Integer arc weights and a dyadic m/k keep all sums exactly
  // representable, so the identity holds with zero tolerance.
  CutObjective cut;
  cut.arcs = {CutArc{0, 1, 1.0}, CutArc{1, 2, 2.0}, CutArc{2, 0, 3.0},
              CutArc{3, 4, 1.0}, CutArc{4, 5, 2.0}, CutArc{0, 5, 1.0}};
  const SetFunctionOracle f(ObjectiveSpec{cut}, 6);
  const ModularWeights ell = reduction_modular(6.0, 3, 6);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const ElementSet set = ElementSet::from_bits(mask);
    const double f_value = f.evaluate(set);
    const double with_modular = f_value + modular_value(ell, set);
    CHECK(f_value == with_modular - 2.0 * set.size());
  }
}

}  // namespace
