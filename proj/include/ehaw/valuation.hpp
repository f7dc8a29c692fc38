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

#include <map>
#include <stdexcept>
#include <string>

#include "ehaw/codes.hpp"
#include "ehaw/lam.hpp"
#include "ehaw/syntax.hpp"

namespace ehaw {

struct UnboundVariable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Indices for the constants of the term language. None of them reads the oracle,
// so the same numbers serve the oracle-free interpretation.
struct ConstantCodes {
    Nat S, K, Sig, R, D, D0, D1;
};
const ConstantCodes& constant_codes();
const ConstantCodes& constant_codes_plain();

// Values for free variables, read as the constants F_n.
using ValueEnv = std::map<std::string, Nat>;

// |alpha|_p. Throws UnboundVariable on a variable missing from env.
EvalResult value(const TermP& alpha, const Oracle& p, uint64_t fuel, const ValueEnv& env = {});
EvalResult value(Machine& m, const TermP& alpha, const ValueEnv& env);
EvalResult value_plain(const TermP& alpha, uint64_t fuel, const ValueEnv& env = {});

// d with d n_1 ... n_k ~ |alpha(F_n1, ..., F_nk)|. With no variables d takes one ignored argument.
Nat term_index(const TermP& alpha, const VarList& vars);
Nat term_index_plain(const TermP& alpha, const VarList& vars);

// The same construction inside a larger lambda expression: variables are looked up in env.
lam::T term_expr(const TermP& alpha, const std::map<std::string, lam::T>& env);

}  // namespace ehaw
