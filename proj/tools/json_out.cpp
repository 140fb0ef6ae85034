// Copyright 2026 The qutrit Authors.
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

#include "json_out.hpp"

#include <cstdio>
#include <ostream>

namespace qutrit::cli {
namespace {

void write_string(std::ostream& os, const std::string& s) {
  // Reuse nlohmann's escaping for strings.
  os << nlohmann::json(s).dump();
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_json(std::ostream& os, const nlohmann::ordered_json& value) {
  using json = nlohmann::ordered_json;
  switch (value.type()) {
    case json::value_t::object: {
      os << '{';
      bool first = true;
      for (const auto& [k, v] : value.items()) {
        if (!first) os << ',';
        first = false;
        write_string(os, k);
        os << ':';
        write_json(os, v);
      }
      os << '}';
      break;
    }
    case json::value_t::array: {
      os << '[';
      bool first = true;
      for (const auto& v : value) {
        if (!first) os << ',';
        first = false;
        write_json(os, v);
      }
      os << ']';
      break;
    }
    case json::value_t::number_float:
      os << format_double(value.get<double>());
      break;
    case json::value_t::string:
      write_string(os, value.get<std::string>());
      break;
    default:
      os << value.dump();
      break;
  }
}

}  // namespace qutrit::cli
