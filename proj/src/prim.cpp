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

#include "ehaw/prim.hpp"

#include <stdexcept>

namespace ehaw {

namespace {
struct PrimInfo {
    Prim p;
    std::string_view name;
    unsigned arity;
};

constexpr PrimInfo kPrims[kNumPrims] = {
    {Prim::Succ, "succ", 1}, {Prim::Pred, "pred", 1}, {Prim::Add, "add", 2},
    {Prim::Mul, "mul", 2},   {Prim::Sub, "sub", 2},   {Prim::Eq, "eq", 2},
    {Prim::Max, "max", 2},   {Prim::Lt, "lt", 2},     {Prim::Sg, "sg", 1},
    {Prim::Nsg, "nsg", 1},
};
}  // namespace

unsigned prim_arity(Prim p) { return kPrims[(unsigned)p].arity; }
std::string_view prim_name(Prim p) { return kPrims[(unsigned)p].name; }

std::optional<Prim> prim_by_name(std::string_view name)
{
    for (const PrimInfo& i : kPrims)
        if (i.name == name) return i.p;
    return std::nullopt;
}

Nat prim_eval(Prim p, const std::vector<Nat>& a)
{
    if (a.size() != prim_arity(p)) throw std::invalid_argument("prim arity");
    switch (p) {
    case Prim::Succ: return a[0] + 1;
    case Prim::Pred: return a[0] == 0 ? Nat(0) : Nat(a[0] - 1);
    case Prim::Add:  return a[0] + a[1];
    case Prim::Mul:  return a[0] * a[1];
    case Prim::Sub:  return a[0] > a[1] ? Nat(a[0] - a[1]) : Nat(0);
    case Prim::Eq:   return Nat(a[0] == a[1] ? 1 : 0);
    case Prim::Max:  return a[0] > a[1] ? a[0] : a[1];
    case Prim::Lt:   return Nat(a[0] < a[1] ? 1 : 0);
    case Prim::Sg:   return Nat(a[0] == 0 ? 0 : 1);
    case Prim::Nsg:  return Nat(a[0] == 0 ? 1 : 0);
    }
    throw std::logic_error("unknown prim");
}

}  // namespace ehaw
