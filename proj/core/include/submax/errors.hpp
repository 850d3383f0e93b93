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

#ifndef SUBMAX_ERRORS_HPP_
#define SUBMAX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace submax {

// Malformed input documents: bad JSON, missing or unknown keys, wrong types.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally well-formed data that violates a semantic requirement
// (out-of-range index, negative weight, broken matroid axiom, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request that would require enumerating more subsets than the exact
// routines support.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation applied outside its mathematical domain, e.g. asking for a
// monotone guarantee on a non-monotone objective family.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace submax

#endif  // SUBMAX_ERRORS_HPP_
