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

#include "submax/instance.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>

#include "json.hpp"

namespace submax {
namespace {

using nlohmann::json;

// --- parse helpers -------------------------------------------------------

[[noreturn]] void schema_fail(const std::string& field, const std::string& what) {
  throw SchemaError(field + ": " + what);
}

const json& require_key(const json& obj, const std::string& path,
                        const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) schema_fail(path, "unknown key \"" + it.key() + "\"");
  }
}

int as_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) schema_fail(field, "expected an integer");
  return value.get<int>();
}

double as_double(const json& value, const std::string& field) {
  if (!value.is_number()) schema_fail(field, "expected a number");
  return value.get<double>();
}

const json& as_array(const json& value, const std::string& field) {
  if (!value.is_array()) schema_fail(field, "expected an array");
  return value;
}

const json& as_object(const json& value, const std::string& field) {
  if (!value.is_object()) schema_fail(field, "expected an object");
  return value;
}

std::string as_string(const json& value, const std::string& field) {
  if (!value.is_string()) schema_fail(field, "expected a string");
  return value.get<std::string>();
}

std::vector<double> as_double_vector(const json& value,
                                     const std::string& field) {
  const json& arr = as_array(value, field);
  std::vector<double> out;
  out.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_double(arr[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<int> as_int_vector(const json& value, const std::string& field) {
  const json& arr = as_array(value, field);
  std::vector<int> out;
  out.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_int(arr[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ObjectiveSpec parse_objective(const json& value) {
  const std::string path = "objective";
  const json& obj = as_object(value, path);
  ObjectiveFamily family = objective_family_from_name(
      as_string(require_key(obj, path, "family"), path + ".family"));
  switch (family) {
    case ObjectiveFamily::coverage: {
      reject_unknown_keys(obj, path, {"family", "universe_size", "sets", "uweights"});
      CoverageObjective cov;
      cov.universe_size =
          as_int(require_key(obj, path, "universe_size"), path + ".universe_size");
      const json& sets = as_array(require_key(obj, path, "sets"), path + ".sets");
      for (size_t i = 0; i < sets.size(); ++i) {
        cov.sets.push_back(
            as_int_vector(sets[i], path + ".sets[" + std::to_string(i) + "]"));
      }
      cov.uweights =
          as_double_vector(require_key(obj, path, "uweights"), path + ".uweights");
      return cov;
    }
    case ObjectiveFamily::cut: {
      reject_unknown_keys(obj, path, {"family", "arcs"});
      CutObjective cut;
      const json& arcs = as_array(require_key(obj, path, "arcs"), path + ".arcs");
      for (size_t i = 0; i < arcs.size(); ++i) {
        const std::string arc_path = path + ".arcs[" + std::to_string(i) + "]";
        const json& arc = as_array(arcs[i], arc_path);
        if (arc.size() != 3) schema_fail(arc_path, "expected [from, to, weight]");
        cut.arcs.push_back(CutArc{as_int(arc[0], arc_path + "[0]"),
                                  as_int(arc[1], arc_path + "[1]"),
                                  as_double(arc[2], arc_path + "[2]")});
      }
      return cut;
    }
    case ObjectiveFamily::facility: {
      reject_unknown_keys(obj, path, {"family", "service"});
      FacilityObjective fac;
      const json& rows =
          as_array(require_key(obj, path, "service"), path + ".service");
      for (size_t i = 0; i < rows.size(); ++i) {
        fac.service.push_back(
            as_double_vector(rows[i], path + ".service[" + std::to_string(i) + "]"));
      }
      return fac;
    }
    case ObjectiveFamily::table: {
      reject_unknown_keys(obj, path, {"family", "values"});
      TableObjective table;
      table.values =
          as_double_vector(require_key(obj, path, "values"), path + ".values");
      return table;
    }
    case ObjectiveFamily::modular_nonneg: {
      reject_unknown_keys(obj, path, {"family", "weights"});
      ModularNonnegObjective mod;
      mod.weights =
          as_double_vector(require_key(obj, path, "weights"), path + ".weights");
      return mod;
    }
  }
  schema_fail(path, "unreachable");
}

ConstraintSpec parse_constraint(const json& value) {
  const std::string path = "constraint";
  const json& obj = as_object(value, path);
  ConstraintFamily family = constraint_family_from_name(
      as_string(require_key(obj, path, "family"), path + ".family"));
  switch (family) {
    case ConstraintFamily::cardinality: {
      reject_unknown_keys(obj, path, {"family", "k"});
      return CardinalityConstraint{as_int(require_key(obj, path, "k"), path + ".k")};
    }
    case ConstraintFamily::partition: {
      reject_unknown_keys(obj, path, {"family", "blocks", "caps"});
      PartitionConstraint part;
      const json& blocks =
          as_array(require_key(obj, path, "blocks"), path + ".blocks");
      for (size_t i = 0; i < blocks.size(); ++i) {
        part.blocks.push_back(
            as_int_vector(blocks[i], path + ".blocks[" + std::to_string(i) + "]"));
      }
      part.caps = as_int_vector(require_key(obj, path, "caps"), path + ".caps");
      return part;
    }
    case ConstraintFamily::matroid_rank_table: {
      reject_unknown_keys(obj, path, {"family", "rank"});
      return MatroidRankTableConstraint{
          as_int_vector(require_key(obj, path, "rank"), path + ".rank")};
    }
    case ConstraintFamily::knapsack: {
      reject_unknown_keys(obj, path, {"family", "costs", "budget"});
      KnapsackConstraint knap;
      knap.costs =
          as_double_vector(require_key(obj, path, "costs"), path + ".costs");
      knap.budget =
          as_double(require_key(obj, path, "budget"), path + ".budget");
      return knap;
    }
  }
  schema_fail(path, "unreachable");
}

// --- validation helpers --------------------------------------------------

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw ValidationError(field + ": " + what);
}

void check_finite(double v, const std::string& field) {
  if (!std::isfinite(v)) invalid(field, "value is not finite");
}

void check_finite_all(const std::vector<double>& values,
                      const std::string& field) {
  for (size_t i = 0; i < values.size(); ++i) {
    check_finite(values[i], field + "[" + std::to_string(i) + "]");
  }
}

void check_nonneg_all(const std::vector<double>& values,
                      const std::string& field) {
  for (size_t i = 0; i < values.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    check_finite(values[i], f);
    if (values[i] < 0.0) invalid(f, "negative value " + std::to_string(values[i]));
  }
}

void check_size(size_t got, size_t want, const std::string& field) {
  if (got != want) {
    invalid(field, "expected " + std::to_string(want) + " entries, got " +
                       std::to_string(got));
  }
}

void check_index_range(int v, int bound, const std::string& field) {
  if (v < 0 || v >= bound) {
    invalid(field, "index " + std::to_string(v) + " outside [0, " +
                       std::to_string(bound) + ")");
  }
}

void validate_objective(const ObjectiveSpec& objective, int n) {
  const std::string path = "objective";
  if (const auto* cov = std::get_if<CoverageObjective>(&objective)) {
    if (cov->universe_size < 0) invalid(path + ".universe_size", "negative");
    check_size(cov->sets.size(), static_cast<size_t>(n), path + ".sets");
    for (size_t i = 0; i < cov->sets.size(); ++i) {
      for (size_t j = 0; j < cov->sets[i].size(); ++j) {
        check_index_range(cov->sets[i][j], cov->universe_size,
                          path + ".sets[" + std::to_string(i) + "][" +
                              std::to_string(j) + "]");
      }
    }
    check_size(cov->uweights.size(), static_cast<size_t>(cov->universe_size),
               path + ".uweights");
    check_nonneg_all(cov->uweights, path + ".uweights");
  } else if (const auto* cut = std::get_if<CutObjective>(&objective)) {
    for (size_t i = 0; i < cut->arcs.size(); ++i) {
      const std::string arc_path = path + ".arcs[" + std::to_string(i) + "]";
      check_index_range(cut->arcs[i].from, n, arc_path + "[0]");
      check_index_range(cut->arcs[i].to, n, arc_path + "[1]");
      check_finite(cut->arcs[i].weight, arc_path + "[2]");
      if (cut->arcs[i].weight < 0.0) invalid(arc_path + "[2]", "negative weight");
    }
  } else if (const auto* fac = std::get_if<FacilityObjective>(&objective)) {
    check_size(fac->service.size(), static_cast<size_t>(n), path + ".service");
    size_t clients = fac->service.empty() ? 0 : fac->service[0].size();
    for (size_t i = 0; i < fac->service.size(); ++i) {
      const std::string row = path + ".service[" + std::to_string(i) + "]";
      check_size(fac->service[i].size(), clients, row);
      check_nonneg_all(fac->service[i], row);
    }
  } else if (const auto* table = std::get_if<TableObjective>(&objective)) {
    if (n > 16) {
      invalid(path + ".values", "table objectives require n <= 16, got n = " +
                                    std::to_string(n));
    }
    check_size(table->values.size(), size_t{1} << n, path + ".values");
    check_nonneg_all(table->values, path + ".values");
  } else if (const auto* mod = std::get_if<ModularNonnegObjective>(&objective)) {
    check_size(mod->weights.size(), static_cast<size_t>(n), path + ".weights");
    check_nonneg_all(mod->weights, path + ".weights");
  }
}

void validate_constraint(const ConstraintSpec& constraint, int n) {
  const std::string path = "constraint";
  if (const auto* card = std::get_if<CardinalityConstraint>(&constraint)) {
    if (card->k < 0) invalid(path + ".k", "negative cardinality bound");
  } else if (const auto* part = std::get_if<PartitionConstraint>(&constraint)) {
    check_size(part->caps.size(), part->blocks.size(), path + ".caps");
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (size_t b = 0; b < part->blocks.size(); ++b) {
      const std::string block = path + ".blocks[" + std::to_string(b) + "]";
      for (size_t j = 0; j < part->blocks[b].size(); ++j) {
        int s = part->blocks[b][j];
        check_index_range(s, n, block + "[" + std::to_string(j) + "]");
        if (used[static_cast<size_t>(s)]) {
          invalid(block, "element " + std::to_string(s) +
                             " appears in more than one block");
        }
        used[static_cast<size_t>(s)] = true;
      }
      if (part->caps[b] < 0) {
        invalid(path + ".caps[" + std::to_string(b) + "]", "negative cap");
      }
    }
  } else if (const auto* mat =
                 std::get_if<MatroidRankTableConstraint>(&constraint)) {
    if (n > 16) {
      invalid(path + ".rank", "rank tables require n <= 16, got n = " +
                                  std::to_string(n));
    }
    check_size(mat->rank.size(), size_t{1} << n, path + ".rank");
    for (size_t i = 0; i < mat->rank.size(); ++i) {
      if (mat->rank[i] < 0 || mat->rank[i] > n) {
        invalid(path + ".rank[" + std::to_string(i) + "]",
                "rank value outside [0, n]");
      }
    }
  } else if (const auto* knap = std::get_if<KnapsackConstraint>(&constraint)) {
    check_size(knap->costs.size(), static_cast<size_t>(n), path + ".costs");
    for (size_t i = 0; i < knap->costs.size(); ++i) {
      const std::string f = path + ".costs[" + std::to_string(i) + "]";
      check_finite(knap->costs[i], f);
      if (knap->costs[i] <= 0.0) invalid(f, "costs must be strictly positive");
    }
    check_finite(knap->budget, path + ".budget");
    if (knap->budget <= 0.0) invalid(path + ".budget", "budget must be positive");
  }
}

json objective_to_json(const ObjectiveSpec& objective) {
  json obj;
  obj["family"] = std::string(family_name(objective_family(objective)));
  if (const auto* cov = std::get_if<CoverageObjective>(&objective)) {
    obj["universe_size"] = cov->universe_size;
    obj["sets"] = cov->sets;
    obj["uweights"] = cov->uweights;
  } else if (const auto* cut = std::get_if<CutObjective>(&objective)) {
    json arcs = json::array();
    for (const CutArc& arc : cut->arcs) {
      arcs.push_back(json::array({arc.from, arc.to, arc.weight}));
    }
    obj["arcs"] = std::move(arcs);
  } else if (const auto* fac = std::get_if<FacilityObjective>(&objective)) {
    obj["service"] = fac->service;
  } else if (const auto* table = std::get_if<TableObjective>(&objective)) {
    obj["values"] = table->values;
  } else if (const auto* mod = std::get_if<ModularNonnegObjective>(&objective)) {
    obj["weights"] = mod->weights;
  }
  return obj;
}

json constraint_to_json(const ConstraintSpec& constraint) {
  json obj;
  obj["family"] = std::string(family_name(constraint_family(constraint)));
  if (const auto* card = std::get_if<CardinalityConstraint>(&constraint)) {
    obj["k"] = card->k;
  } else if (const auto* part = std::get_if<PartitionConstraint>(&constraint)) {
    obj["blocks"] = part->blocks;
    obj["caps"] = part->caps;
  } else if (const auto* mat =
                 std::get_if<MatroidRankTableConstraint>(&constraint)) {
    obj["rank"] = mat->rank;
  } else if (const auto* knap = std::get_if<KnapsackConstraint>(&constraint)) {
    obj["costs"] = knap->costs;
    obj["budget"] = knap->budget;
  }
  return obj;
}

}  // namespace

std::string_view family_name(ObjectiveFamily family) {
  switch (family) {
    case ObjectiveFamily::coverage: return "coverage";
    case ObjectiveFamily::cut: return "cut";
    case ObjectiveFamily::facility: return "facility";
    case ObjectiveFamily::table: return "table";
    case ObjectiveFamily::modular_nonneg: return "modular_nonneg";
  }
  return "?";
}

std::string_view family_name(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::cardinality: return "cardinality";
    case ConstraintFamily::partition: return "partition";
    case ConstraintFamily::matroid_rank_table: return "matroid_rank_table";
    case ConstraintFamily::knapsack: return "knapsack";
  }
  return "?";
}

ObjectiveFamily objective_family_from_name(std::string_view name) {
  if (name == "coverage") return ObjectiveFamily::coverage;
  if (name == "cut") return ObjectiveFamily::cut;
  if (name == "facility") return ObjectiveFamily::facility;
  if (name == "table") return ObjectiveFamily::table;
  if (name == "modular_nonneg") return ObjectiveFamily::modular_nonneg;
  throw SchemaError("objective.family: unknown family \"" + std::string(name) +
                    "\"");
}

ConstraintFamily constraint_family_from_name(std::string_view name) {
  if (name == "cardinality") return ConstraintFamily::cardinality;
  if (name == "partition") return ConstraintFamily::partition;
  if (name == "matroid_rank_table") return ConstraintFamily::matroid_rank_table;
  if (name == "knapsack") return ConstraintFamily::knapsack;
  throw SchemaError("constraint.family: unknown family \"" +
                    std::string(name) + "\"");
}

ObjectiveFamily objective_family(const ObjectiveSpec& objective) {
  return static_cast<ObjectiveFamily>(objective.index());
}

ConstraintFamily constraint_family(const ConstraintSpec& constraint) {
  return static_cast<ConstraintFamily>(constraint.index());
}

void validate_instance(const InstanceSpec& spec) {
  int n = spec.ground.size();
  check_size(spec.modular.weights.size(), static_cast<size_t>(n), "modular");
  check_finite_all(spec.modular.weights, "modular");
  validate_objective(spec.objective, n);
  validate_constraint(spec.constraint, n);
}

InstanceSpec parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    // Covers syntax errors and number overflow (e.g. 1e999) alike.
    throw SchemaError(std::string("document: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("document: expected a JSON object");
  reject_unknown_keys(doc, "document",
                      {"n", "labels", "objective", "modular", "constraint"});

  int n = as_int(require_key(doc, "document", "n"), "n");
  if (n < 1 || n > kMaxGroundSize) {
    invalid("n", "ground set size must be in [1, 63], got " + std::to_string(n));
  }

  std::vector<std::string> labels;
  if (auto it = doc.find("labels"); it != doc.end()) {
    const json& arr = as_array(*it, "labels");
    for (size_t i = 0; i < arr.size(); ++i) {
      labels.push_back(as_string(arr[i], "labels[" + std::to_string(i) + "]"));
    }
    if (labels.empty()) schema_fail("labels", "must not be an empty array");
  }

  InstanceSpec spec{
      labels.empty() ? GroundSet(n) : GroundSet(n, std::move(labels)),
      parse_objective(require_key(doc, "document", "objective")),
      ModularWeights{
          as_double_vector(require_key(doc, "document", "modular"), "modular")},
      parse_constraint(require_key(doc, "document", "constraint"))};
  validate_instance(spec);
  return spec;
}

std::string serialize_instance(const InstanceSpec& spec) {
  json doc;
  doc["n"] = spec.ground.size();
  if (spec.ground.has_labels()) doc["labels"] = spec.ground.labels();
  doc["objective"] = objective_to_json(spec.objective);
  doc["modular"] = spec.modular.weights;
  doc["constraint"] = constraint_to_json(spec.constraint);
  return doc.dump(2) + "\n";
}

std::string instance_digest(const InstanceSpec& spec) {
  std::string text = serialize_instance(spec);
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace submax
