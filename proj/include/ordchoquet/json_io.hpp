// Copyright 2026 The ordchoquet Authors
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

#include "ordchoquet/set_system.hpp"
#include "ordchoquet/valuation.hpp"

#include <json.hpp>

#include <string>

namespace ordchoquet::io {

using json = nlohmann::json;

/// {"ground": [labels], "family": [[labels]...],
///  "order": "trivial" | "containment" | {"pairs": [[i, j], ...]}}
/// Pair [i, j] means F_i precedes F_j, in input (array) indexing. Labels may be
/// strings or integers. A "containment" object form {"containment": true,
/// "pairs": [...]} checks each pair against inclusion.
SetSystem system_from_json(const json& j);

/// Members in system indexing with the order written so that reading the
/// result back reproduces the same indexing.
json system_to_json(const SetSystem& sys);

/// Input index -> system index table, as reported by the build response.
json index_map_json(const SetSystem& sys);

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& q);

/// {"values": {"<input index>": "p/q" | "1.25" | integer, ...}} or
/// {"values": [...]} in input order. Missing entries are 0.
Valuation valuation_from_json(const json& j, const SetSystem& sys);
/// Values keyed by system index (which system_to_json makes equal to input index).
json valuation_to_json(const Valuation& v);

/// {"values": {"<label>": ...}} or {"values": [...]} in ground order.
Weighting weighting_from_json(const json& j, const GroundSet& ground);
json weighting_to_json(const Weighting& f, const GroundSet& ground);

/// {"<set>": value} over all subsets, keys formatted by the ground set.
json set_function_to_json(const SetFunction& vhat, const GroundSet& ground);

json read_file(const std::string& path);

}  // namespace ordchoquet::io
