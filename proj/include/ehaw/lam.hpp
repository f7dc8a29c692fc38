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

#include <functional>
#include <memory>
#include <vector>

#include "ehaw/codes.hpp"

// Small lambda notation compiled to closure codes with minimal captures.
namespace ehaw::lam {

struct Node;
using T = std::shared_ptr<const Node>;

enum class Kind { Var, Lit, App, Pair, Proj, Prim, IfZ, Oracle, Lam };

struct Node {
    Kind kind;
    int level = 0;  // Var: binder level; Lam: level of its parameter
    uint32_t index = 0;
    Nat lit;
    std::vector<T> kids;
};

T lit(const Nat& n);
T app(T f, T x);
T app(T f, const std::vector<T>& xs);
T pair(T a, T b);
T proj(uint32_t i, T e);
T prim(Prim p, std::vector<T> args);
T ifz(T c, T t, T e);
T oracle(T e);
T tuple(const std::vector<T>& xs);
T component(T e, unsigned i, unsigned len);

// n curried parameters; the callback receives them outermost first.
T lam(int n, const std::function<T(const std::vector<T>&)>& body);
// Shares one evaluation of e.
T let(T e, const std::function<T(T)>& body);

// Index of a lambda with no free variables.
Nat build(const T& t);
// Closed expression to a machine expression.
ExprP compile(const T& t);
EvalResult eval(const T& t, const Oracle& p, uint64_t fuel);

}  // namespace ehaw::lam
