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

#include <stdexcept>
#include <string>
#include <vector>

#include "ehaw/derivation.hpp"
#include "ehaw/nat.hpp"

namespace ehaw {

struct ExtractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { Forcing, Plain };
std::string mode_name(Mode m);

struct TraceEntry {
    std::string node;
    int rule;
    std::string recipe;
    Nat code;
};

struct ExtractionResult {
    Nat code;
    VarList closure_vars;  // the code realizes forall closure_vars. conclusion
    Mode mode;
    std::vector<TraceEntry> trace;
    FormulaP closure() const;
    FormulaP conclusion;
};

// Every node's code first takes the free variables of its own conclusion (first occurrence order),
// then the arguments of the rule's recipe. With no variables the code is the realizer itself; a node
// with neither variables nor recipe arguments is evaluated once, with no oracle.
ExtractionResult extract(const DerivationP& d);
ExtractionResult extract_plain(const DerivationP& d);
ExtractionResult extract(const DerivationP& d, Mode m);

}  // namespace ehaw
