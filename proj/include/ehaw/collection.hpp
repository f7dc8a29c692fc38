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

#include <cstdint>
#include <vector>

#include "ehaw/derivation.hpp"
#include "ehaw/nat.hpp"

namespace ehaw {

// A derivation of
//   forall x. exists y. (lt(x,a) =N S(0) -> phi(x,y))
//     -> exists b. C_0(b) & ... & C_{a-1}(b),    C_i(b) = exists y. (lt(y,b) =N S(0) & phi(i,y))
// from choice and quantifier-free induction. The bound term is S(z(0) + ... + z(a-1)) for the
// choice function z. With a = 0 the conjunction is 0 = 0.
struct CollectionDemo {
    uint64_t a = 0;
    FormulaP phi;
    FormulaP premise, conclusion;
    DerivationP derivation;
    std::vector<uint64_t> witnesses;  // least y with phi(i,y), i < a
    Nat premise_realizer;             // x |-> <least witness, 0>
};

// phi: free variables among x, y, built from equations, & and -> only.
// Throws PremiseFalse when some i < a has no witness up to q.
CollectionDemo demo_collection(uint64_t a, const FormulaP& phi, uint64_t q = 20);

struct CollectionRun {
    Nat realizer;       // extracted code
    Nat bound;          // first component of realizer applied to the premise realizer
    bool bound_ok = false;
    uint64_t minimal_bound = 0;
};

// Every i < a has some y < b with phi(i,y).
bool collection_bound_holds(const FormulaP& phi, uint64_t a, const Nat& b);
uint64_t minimal_collection_bound(const FormulaP& phi, uint64_t a, uint64_t q = 20);

CollectionRun run_collection(const CollectionDemo& demo, uint64_t fuel = 10000000);

}  // namespace ehaw
