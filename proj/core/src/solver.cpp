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

#include "submax/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "format.hpp"
#include "json.hpp"
#include "submax/oracles.hpp"

namespace submax {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Round counts and sample counts come from expressions like ceil(2n^2/eps)
// whose true value can sit exactly on an integer; the small backoff keeps
// representation noise from bumping such values a full step up.
std::int64_t ceil_int(double v) {
  return static_cast<std::int64_t>(std::ceil(v - 1e-9));
}

// (1 + delta)^e for the integer exponent e = k - 1/delta actually used in
// the loop. Computing the exponent in integer form avoids the cancellation
// in (t - 1) / delta near t = 1 and makes the final weight exactly 1.
double weight_from_exponent(double exponent, double delta) {
  return std::exp(exponent * std::log1p(delta));
}

double dot(const std::vector<double>& a, const FractionalPoint& x) {
  double total = 0.0;
  for (size_t s = 0; s < a.size(); ++s) total += a[s] * x[static_cast<int>(s)];
  return total;
}

}  // namespace

double adaptive_weight(double t, double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw ValidationError("adaptive_weight: delta must be in (0, 1]");
  }
  return weight_from_exponent((t - 1.0) / delta, delta);
}

double default_step_size(int n, double eps) {
  if (n < 1) throw ValidationError("default_step_size: n must be >= 1");
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ValidationError("default_step_size: eps must be in (0, 1]");
  }
  const double steps = 2.0 * static_cast<double>(n) * static_cast<double>(n) / eps;
  return 1.0 / static_cast<double>(ceil_int(steps));
}

SolverResult solve(const InstanceSpec& instance, const SolverConfig& config) {
  validate_instance(instance);
  const int n = instance.ground.size();
  const std::vector<double>& ell = instance.modular.weights;

  if (!(config.eps > 0.0 && config.eps <= 1.0)) {
    throw ValidationError("config.eps: must be in (0, 1], got " +
                          std::to_string(config.eps));
  }
  const bool exact = config.gradient_mode == GradientMode::exact;
  if (exact && n > kExactEnumerationLimit) {
    throw SizeError("solve: exact gradients require n <= " +
                    std::to_string(kExactEnumerationLimit));
  }
  if (config.d_override && *config.d_override < 1) {
    throw ValidationError("config.d_override: must be >= 1");
  }

  double delta;
  std::int64_t steps;
  if (config.delta_override) {
    delta = *config.delta_override;
    if (!(delta > 0.0 && delta <= 1.0)) {
      throw ValidationError("config.delta_override: must be in (0, 1]");
    }
    steps = static_cast<std::int64_t>(std::llround(1.0 / delta));
    if (steps < 1 || std::abs(static_cast<double>(steps) * delta - 1.0) > 1e-9) {
      throw ValidationError(
          "config.delta_override: 1/delta must be a positive integer");
    }
    delta = 1.0 / static_cast<double>(steps);
  } else {
    delta = default_step_size(n, config.eps);
    steps = static_cast<std::int64_t>(std::llround(1.0 / delta));
  }

  const SetFunctionOracle oracle(instance.objective, n);
  const PolytopeOracle polytope(instance.constraint, n);

  const std::int64_t d =
      config.d_override ? *config.d_override
                        : default_sample_count(n, delta, config.eps);

  SolverTrace trace;
  trace.delta = delta;
  trace.steps = steps;
  trace.records.reserve(static_cast<size_t>(steps) + 1);

  FractionalPoint x = FractionalPoint::zeros(n);
  std::vector<double> transformed(static_cast<size_t>(n), 0.0);

  for (std::int64_t k = 0; k <= steps; ++k) {
    const bool final_record = (k == steps);
    const double t = final_record ? 1.0 : static_cast<double>(k) * delta;
    const double weight =
        weight_from_exponent(static_cast<double>(k - steps), delta);
    const double cap = 1.0 - std::pow(1.0 - delta, static_cast<double>(k));
    const double l_value = dot(ell, x);
    const double f_value = exact ? evaluate_exact(oracle, x) : kNan;
    const double gamma = exact ? weight * f_value + l_value : kNan;

    // Update cap (deterministic consequence of the measured step) and
    // feasibility (x is a shrunken convex combination of polytope points).
    for (int s = 0; s < n; ++s) {
      if (x[s] > cap + 1e-9) {
        throw std::logic_error("solver: coordinate cap violated at t = " +
                               std::to_string(t));
      }
    }
    if (!polytope.is_feasible(x, 1e-7)) {
      throw std::logic_error("solver: infeasible iterate at t = " +
                             std::to_string(t));
    }

    if (final_record) {
      trace.records.push_back(TraceRecord{t, weight, FractionalPoint::zeros(n),
                                          0.0, x, gamma, f_value, l_value,
                                          cap});
      break;
    }

    const GradientEstimate w =
        exact ? gradient_exact(oracle, x)
              : gradient_sampled(
                    oracle, x, d,
                    SampleStream{config.seed, static_cast<std::uint64_t>(k)});

    // Maximize <z, (a(t) w + ell) * (1 - x)> over the polytope. The (1 - x)
    // factor prices each coordinate by the room the measured update leaves.
    for (int s = 0; s < n; ++s) {
      const double combined = weight * w.values[static_cast<size_t>(s)] +
                              ell[static_cast<size_t>(s)];
      transformed[static_cast<size_t>(s)] = combined * (1.0 - x[s]);
    }
    UpdateDirection direction = polytope.linear_max(transformed);

    std::vector<double> next = x.coords();
    for (int s = 0; s < n; ++s) {
      next[static_cast<size_t>(s)] +=
          delta * direction.z[s] * (1.0 - x[s]);
    }
    trace.records.push_back(TraceRecord{t, weight, std::move(direction.z),
                                        direction.objective_value, std::move(x),
                                        gamma, f_value, l_value, cap});
    x = FractionalPoint(std::move(next));
  }

  SolverResult result{std::move(x), 0.0, false, 0, 0.0, std::move(trace)};
  result.l_value = dot(ell, result.x_final);
  if (n <= kExactEnumerationLimit) {
    result.f_estimate = evaluate_exact(oracle, result.x_final);
    result.f_estimate_exact = true;
  } else {
    result.f_estimate = evaluate_sampled(
        oracle, result.x_final, d,
        SampleStream{config.seed, static_cast<std::uint64_t>(steps)});
    result.f_estimate_exact = false;
    result.f_estimate_samples = d;
  }
  return result;
}

std::string trace_to_csv(const SolverTrace& trace) {
  const int n = trace.records.empty() ? 0 : trace.records[0].x.size();
  std::string out = "t,weight,Gamma,F,L";
  for (int s = 0; s < n; ++s) out += ",z_" + std::to_string(s);
  for (int s = 0; s < n; ++s) out += ",x_" + std::to_string(s);
  out += "\n";
  for (const TraceRecord& rec : trace.records) {
    out += detail::format_double(rec.t);
    out += ',';
    out += detail::format_double(rec.weight);
    out += ',';
    out += detail::format_double(rec.gamma);
    out += ',';
    out += detail::format_double(rec.f_value);
    out += ',';
    out += detail::format_double(rec.l_value);
    for (int s = 0; s < n; ++s) {
      out += ',';
      out += detail::format_double(rec.z[s]);
    }
    for (int s = 0; s < n; ++s) {
      out += ',';
      out += detail::format_double(rec.x[s]);
    }
    out += '\n';
  }
  return out;
}

std::string solve_report_to_json(const SolverResult& result,
                                 const SolverConfig& config,
                                 const std::string& instance_digest) {
  using detail::format_double;
  using detail::json_double;
  const SolverTrace& trace = result.trace;
  const bool sampled = config.gradient_mode == GradientMode::sampled;

  auto column = [&](auto&& get) {
    std::string out = "[";
    for (size_t i = 0; i < trace.records.size(); ++i) {
      if (i) out += ',';
      out += json_double(get(trace.records[i]));
    }
    out += ']';
    return out;
  };
  auto matrix = [&](auto&& get) {
    std::string out = "[";
    for (size_t i = 0; i < trace.records.size(); ++i) {
      if (i) out += ',';
      const FractionalPoint& p = get(trace.records[i]);
      out += '[';
      for (int s = 0; s < p.size(); ++s) {
        if (s) out += ',';
        out += format_double(p[s]);
      }
      out += ']';
    }
    out += ']';
    return out;
  };

  std::string d_value = "null";
  if (sampled) {
    std::int64_t d = config.d_override
                         ? *config.d_override
                         : default_sample_count(
                               trace.records.empty()
                                   ? 1
                                   : trace.records[0].x.size(),
                               trace.delta, config.eps);
    d_value = std::to_string(d);
  }

  std::string out = "{\n";
  out += "  \"config\": {";
  out += "\"d\": " + d_value;
  out += ", \"delta\": " + format_double(trace.delta);
  out += ", \"eps\": " + format_double(config.eps);
  out += std::string(", \"mode\": ") + (sampled ? "\"sampled\"" : "\"exact\"");
  out += ", \"seed\": " + std::to_string(config.seed);
  out += ", \"steps\": " + std::to_string(trace.steps);
  out += "},\n";
  out += "  \"f_estimate\": " + format_double(result.f_estimate) + ",\n";
  out += std::string("  \"f_estimate_exact\": ") +
         (result.f_estimate_exact ? "true" : "false") + ",\n";
  out += "  \"f_estimate_samples\": " +
         std::to_string(result.f_estimate_samples) + ",\n";
  out += "  \"instance_digest\": " + detail::json_string(instance_digest) +
         ",\n";
  out += "  \"l_value\": " + format_double(result.l_value) + ",\n";
  out += "  \"objective_estimate\": " +
         format_double(result.f_estimate + result.l_value) + ",\n";
  out += "  \"trajectory\": {\n";
  out += "    \"F\": " + column([](const TraceRecord& r) { return r.f_value; }) + ",\n";
  out += "    \"Gamma\": " + column([](const TraceRecord& r) { return r.gamma; }) + ",\n";
  out += "    \"L\": " + column([](const TraceRecord& r) { return r.l_value; }) + ",\n";
  out += "    \"cap\": " + column([](const TraceRecord& r) { return r.coordinate_cap; }) + ",\n";
  out += "    \"t\": " + column([](const TraceRecord& r) { return r.t; }) + ",\n";
  out += "    \"weight\": " + column([](const TraceRecord& r) { return r.weight; }) + ",\n";
  out += "    \"x\": " +
         matrix([](const TraceRecord& r) -> const FractionalPoint& { return r.x; }) +
         ",\n";
  out += "    \"z\": " +
         matrix([](const TraceRecord& r) -> const FractionalPoint& { return r.z; }) +
         "\n";
  out += "  },\n";
  out += "  \"x_final\": [";
  for (int s = 0; s < result.x_final.size(); ++s) {
    if (s) out += ',';
    out += format_double(result.x_final[s]);
  }
  out += "]\n}\n";
  return out;
}

SolverTrace trace_from_report_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("report: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("trajectory") ||
      !doc.contains("config") || !doc["trajectory"].is_object() ||
      !doc["config"].is_object()) {
    throw SchemaError("report: expected an object with trajectory and config");
  }
  const auto& config = doc["config"];
  const auto& traj = doc["trajectory"];
  for (const char* key : {"F", "Gamma", "L", "cap", "t", "weight", "x", "z"}) {
    if (!traj.contains(key) || !traj[key].is_array()) {
      throw SchemaError(std::string("report.trajectory: missing array \"") +
                        key + "\"");
    }
  }

  SolverTrace trace;
  trace.delta = config.value("delta", 0.0);
  trace.steps = config.value("steps", std::int64_t{0});
  const size_t rows = traj["t"].size();
  auto scalar = [&](const char* key, size_t i) -> double {
    const auto& arr = traj[key];
    if (arr.size() != rows) {
      throw SchemaError(std::string("report.trajectory.") + key +
                        ": column length mismatch");
    }
    const auto& v = arr[i];
    if (v.is_null()) return kNan;
    if (!v.is_number()) {
      throw SchemaError(std::string("report.trajectory.") + key +
                        ": expected a number or null");
    }
    return v.get<double>();
  };
  auto point = [&](const char* key, size_t i) -> FractionalPoint {
    const auto& arr = traj[key];
    if (arr.size() != rows || !arr[i].is_array()) {
      throw SchemaError(std::string("report.trajectory.") + key +
                        ": expected one coordinate array per row");
    }
    std::vector<double> coords;
    for (const auto& v : arr[i]) {
      if (!v.is_number()) {
        throw SchemaError(std::string("report.trajectory.") + key +
                          ": expected numeric coordinates");
      }
      coords.push_back(v.get<double>());
    }
    return FractionalPoint(std::move(coords));
  };

  for (size_t i = 0; i < rows; ++i) {
    TraceRecord rec{scalar("t", i),      scalar("weight", i),
                    point("z", i),       0.0,
                    point("x", i),       scalar("Gamma", i),
                    scalar("F", i),      scalar("L", i),
                    scalar("cap", i)};
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace submax
