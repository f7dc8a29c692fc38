/* Copyright 2016 Google Inc. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <string>

#include <json.hpp>

#include "ehaw/codes.hpp"
#include "ehaw/heo.hpp"

namespace ehaw {

using Json = nlohmann::json;

// Expression trees with explicit node tags: {"op": "pair", "args": [...]} and so on.
Json expr_to_json(const Expr& e);
ExprP expr_from_json(const Json& j);  // throws std::invalid_argument

// {"schema": "ehaw.code/1", "index": "<decimal>", "closure": {"body": ..., "captured": [...]}}.
// Captured values that are closures are expanded up to depth levels.
Json code_to_json(const Nat& code, int depth = 1);
// Reads "index" when present, otherwise rebuilds the number from "closure".
Nat code_from_json(const Json& j);

Json oracle_to_json(const Oracle& p);
// Accepts the JSON form or the inline form {k:v,...} as a string.
Oracle oracle_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

}  // namespace ehaw
