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

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace qutrit::cli {

/// Compact JSON with every floating-point number printed as %.17g, which
/// round-trips IEEE doubles exactly. nlohmann's own dump() uses the shortest
/// representation instead.
void write_json(std::ostream& os, const nlohmann::ordered_json& value);

/// %.17g
std::string format_double(double v);

}  // namespace qutrit::cli
