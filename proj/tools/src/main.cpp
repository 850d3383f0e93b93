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
// submax command line front end.
//
//   submax gen    [--n N] [--objective FAM] [--constraint FAM] [--seed S]
//                 [--out FILE]
//   submax solve  INSTANCE [--eps E] [--mode exact|sampled] [--seed S]
//                 [--d D] [--trace FILE.csv] [--report FILE.json]
//   submax exact  INSTANCE
//   submax check  INSTANCE [--trials T] [--eps E] [--mode M] [--seed S]
//                 [--report FILE.json]
//   submax trace  REPORT.json [--out FILE.csv]
//
// Exit status: 0 success (for `check`: criteria met), 1 validation error or
// criteria not met, 2 runtime error. Diagnostics go to standard error; every
// emitted byte stream is deterministic in the flags and seed.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "submax/errors.hpp"
#include "submax/generator.hpp"
#include "submax/instance.hpp"
#include "submax/solver.hpp"
#include "submax/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failure: " + path);
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write failure: " + out_path);
}

submax::GradientMode parse_mode(const std::string& mode) {
  if (mode == "exact") return submax::GradientMode::exact;
  if (mode == "sampled") return submax::GradientMode::sampled;
  throw submax::ValidationError("mode must be 'exact' or 'sampled', got '" +
                                mode + "'");
}

struct GenArgs {
  std::optional<int> n;
  std::string objective;
  std::string constraint;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveArgs {
  std::string instance_path;
  double eps = 0.1;
  std::string mode = "sampled";
  std::uint64_t seed = 0;
  std::optional<std::int64_t> d;
  std::string trace_path;
  std::string report_path;
};

struct CheckArgs {
  std::string instance_path;
  std::int64_t trials = 5;
  double eps = 0.1;
  std::string mode = "sampled";
  std::uint64_t seed = 0;
  std::string report_path;
};

int run_gen(const GenArgs& args) {
  submax::GeneratorOptions options;
  options.n = args.n;
  if (!args.objective.empty()) {
    options.objective = submax::objective_family_from_name(args.objective);
  }
  if (!args.constraint.empty()) {
    options.constraint = submax::constraint_family_from_name(args.constraint);
  }
  options.seed = args.seed;
  emit(submax::serialize_instance(submax::generate_instance(options)),
       args.out);
  return 0;
}

int run_solve(const SolveArgs& args) {
  const submax::InstanceSpec instance =
      submax::parse_instance(read_file(args.instance_path));
  submax::SolverConfig config;
  config.eps = args.eps;
  config.gradient_mode = parse_mode(args.mode);
  config.seed = args.seed;
  config.d_override = args.d;
  const submax::SolverResult result = submax::solve(instance, config);
  const std::string report = submax::solve_report_to_json(
      result, config, submax::instance_digest(instance));
  if (!args.trace_path.empty()) {
    emit(submax::trace_to_csv(result.trace), args.trace_path);
  }
  emit(report, args.report_path);
  return 0;
}

int run_exact(const std::string& instance_path) {
  const submax::InstanceSpec instance =
      submax::parse_instance(read_file(instance_path));
  emit(submax::certificate_to_json(submax::brute_force_opt(instance),
                                   submax::instance_digest(instance)),
       "");
  return 0;
}

int run_check(const CheckArgs& args) {
  const submax::InstanceSpec instance =
      submax::parse_instance(read_file(args.instance_path));
  submax::SolverConfig config;
  config.eps = args.eps;
  config.gradient_mode = parse_mode(args.mode);
  config.seed = args.seed;
  const submax::GuaranteeReport report =
      submax::check_guarantee(instance, config, args.trials);
  const std::string text = submax::report_to_json(report);
  emit(text, args.report_path);
  if (!args.report_path.empty()) {
    // Keep a one-line verdict on stdout when the JSON went to a file.
    const double trials = static_cast<double>(report.trials);
    std::cout << (report.passed ? "pass" : "fail") << ": "
              << std::llround(report.pass_fraction * trials) << " of "
              << report.trials << " trials met the bound (required fraction "
              << report.required_fraction << ")\n";
  }
  return report.passed ? 0 : 1;
}

int run_trace(const std::string& report_path, const std::string& out) {
  emit(submax::trace_to_csv(
           submax::trace_from_report_json(read_file(report_path))),
       out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular + modular maximization over down-closed polytopes"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_args.n, "Ground set size (default: drawn from [4, 12])");
  gen->add_option("--objective", gen_args.objective,
                  "Objective family: coverage|cut|facility|table|modular_nonneg");
  gen->add_option("--constraint", gen_args.constraint,
                  "Constraint family: cardinality|partition|matroid_rank_table|knapsack");
  gen->add_option("--seed", gen_args.seed, "Generator seed");
  gen->add_option("--out", gen_args.out, "Output file (default: stdout)");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Run the solver on an instance");
  solve->add_option("instance", solve_args.instance_path, "Instance JSON file")
      ->required();
  solve->add_option("--eps", solve_args.eps, "Accuracy parameter in (0, 1]");
  solve->add_option("--mode", solve_args.mode, "Gradient mode: exact|sampled");
  solve->add_option("--seed", solve_args.seed, "Solver seed");
  solve->add_option("--d", solve_args.d, "Sample count override (sampled mode)");
  solve->add_option("--trace", solve_args.trace_path, "Write trajectory CSV here");
  solve->add_option("--report", solve_args.report_path,
                    "Write report JSON here (default: stdout)");

  std::string exact_path;
  CLI::App* exact = app.add_subcommand("exact", "Brute-force certificate");
  exact->add_option("instance", exact_path, "Instance JSON file")->required();

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Certify the solver guarantee");
  check->add_option("instance", check_args.instance_path, "Instance JSON file")
      ->required();
  check->add_option("--trials", check_args.trials, "Number of solver runs");
  check->add_option("--eps", check_args.eps, "Accuracy parameter in (0, 1]");
  check->add_option("--mode", check_args.mode, "Gradient mode: exact|sampled");
  check->add_option("--seed", check_args.seed, "Base seed (trial i uses seed + i)");
  check->add_option("--report", check_args.report_path,
                    "Write report JSON here (default: stdout)");

  std::string trace_report_path;
  std::string trace_out;
  CLI::App* trace = app.add_subcommand("trace", "Re-emit a report's trajectory as CSV");
  trace->add_option("report", trace_report_path, "Report JSON file")->required();
  trace->add_option("--out", trace_out, "Output CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 1;
  }

  try {
    if (*gen) return run_gen(gen_args);
    if (*solve) return run_solve(solve_args);
    if (*exact) return run_exact(exact_path);
    if (*check) return run_check(check_args);
    if (*trace) return run_trace(trace_report_path, trace_out);
  } catch (const submax::SchemaError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const submax::ValidationError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const submax::SizeError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const submax::DomainError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 2;
}
