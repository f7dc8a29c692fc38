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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ehaw/nat.hpp"

namespace ehaw {

// Primitive recursive function symbols with built-in evaluators.
enum class Prim : uint8_t { Succ, Pred, Add, Mul, Sub, Eq, Max, Lt, Sg, Nsg };

constexpr unsigned kNumPrims = 10;

unsigned prim_arity(Prim p);
std::string_view prim_name(Prim p);
std::optional<Prim> prim_by_name(std::string_view name);

Nat prim_eval(Prim p, const std::vector<Nat>& args);

}  // namespace ehaw
