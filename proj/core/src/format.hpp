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
// Deterministic text output helpers shared by the report and trace writers.
// Doubles are always rendered with 17 significant digits so that emitted
// files are byte-stable and round-trip to the same bit pattern.

#ifndef SUBMAX_SRC_FORMAT_HPP_
#define SUBMAX_SRC_FORMAT_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace submax {
namespace detail {

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

// JSON has no NaN literal; non-finite values serialize as null.
inline std::string json_double(double v) {
  if (!std::isfinite(v)) return "null";
  return format_double(v);
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += "\"";
  return out;
}

}  // namespace detail
}  // namespace submax

#endif  // SUBMAX_SRC_FORMAT_HPP_
