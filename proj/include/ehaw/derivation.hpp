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
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehaw/syntax.hpp"

namespace ehaw {

struct DerivationError : std::runtime_error {
    std::string node;
    DerivationError(const std::string& node_id, const std::string& msg)
        : std::runtime_error("step " + node_id + ": " + msg), node(node_id) {}
};
struct RuleShapeError : DerivationError {
    using DerivationError::DerivationError;
};
struct SideConditionError : DerivationError {
    using DerivationError::DerivationError;
};

struct Derivation;
using DerivationP = std::shared_ptr<const Derivation>;

// One proof step. Optional hints: witness and variant for rule 12, var for rule 19,
// variant for rules 4, 5 when the instance is ambiguous.
struct Derivation {
    std::string id;
    int rule = 0;
    FormulaP conclusion;
    std::vector<DerivationP> premises;
    TermP witness;
    std::string var;
    int variant = -1;
};

DerivationP make_step(const std::string& id, int rule, FormulaP conclusion, std::vector<DerivationP> premises = {});
DerivationP with_witness(DerivationP d, TermP witness);
DerivationP with_var(DerivationP d, const std::string& var);
DerivationP with_variant(DerivationP d, int variant);

struct CheckedNode;
using CheckedP = std::shared_ptr<const CheckedNode>;

struct CheckedNode {
    const Derivation* node = nullptr;
    int rule = 0;
    int variant = 0;   // which of the rule's schemata
    VarList vars;      // free variables of the conclusion, first occurrence order
    std::string var;   // bound or induction variable (rules 10, 11, 12, 19)
    TypeP var_type = nullptr;
    TermP witness;     // rule 12
    std::vector<CheckedP> premises;
};

// Throws RuleShapeError or SideConditionError naming the offending step.
CheckedP check(const DerivationP& d);
VarList check_derivation(const DerivationP& d);
size_t step_count(const DerivationP& d);

// A closed term of type t used where any inhabitant will do.
TermP closed_default_term(TypeP t);

// The equations accepted by rule 14 (variables x, y range over first-order terms).
const std::vector<FormulaP>& defining_equations();

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Proof files:
//   vars: f:N->N, y:N
//   step <id>: rule <n> [premises: i,j] [with: term=<t>; var=<x>; variant=<k>] |- <formula>
// '#' starts a comment. The last step is the root.

struct ProofFileError : std::runtime_error {
    size_t line;
    ProofFileError(const std::string& msg, size_t l)
        : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

DerivationP parse_derivation(const std::string& text);
DerivationP load_derivation(const std::string& path);
std::string print_derivation(const DerivationP& d);

}  // namespace ehaw
