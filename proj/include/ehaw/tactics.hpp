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
#include <utility>
#include <vector>

#include "ehaw/derivation.hpp"

// Derived rules for building derivations in code. Generated variable names start with the
// reserved prefix, so formulas passed in must not use it.
namespace ehaw::tactics {

inline constexpr const char* kReserved = "m";

// d proves goal, or hyp -> goal when hyp is set.
struct Fact {
    FormulaP hyp;
    DerivationP d;
    FormulaP goal;
};

class Prover {
  public:
    explicit Prover(std::string step_prefix = "s") : prefix_(std::move(step_prefix)) {}

    DerivationP step(int rule, FormulaP conclusion, std::vector<DerivationP> premises = {}, TermP witness = nullptr,
                     const std::string& var = "", int variant = -1);
    std::string fresh_var();

    // pred(0) = 0, used as a closed antecedent.
    DerivationP truth();
    DerivationP mp(const DerivationP& a, const DerivationP& imp);
    DerivationP weaken(const DerivationP& p, const FormulaP& h);
    DerivationP generalize(const DerivationP& p, const std::string& x, TypeP t);
    DerivationP instantiate(const DerivationP& p, const TermP& t);
    // Sequential: no replacement term may mention a later variable.
    DerivationP substitute(DerivationP p, const std::vector<std::pair<std::string, TermP>>& sigma);
    DerivationP refl(const TermP& t);
    DerivationP equation(const TermP& lhs, const TermP& rhs);

    Fact fact(const DerivationP& d) { return {nullptr, d, d->conclusion}; }
    Fact assume(const FormulaP& h);
    Fact lift(const Fact& f, const FormulaP& hyp);
    Fact conj(Fact a, Fact b);
    Fact mp(Fact a, Fact imp);
    Fact apply(const Fact& a, const DerivationP& imp);
    // From s = t and pattern[s/hole], derive pattern[t/hole].
    Fact rewrite(Fact eq, Fact target, const FormulaP& pattern, const std::string& hole);
    Fact sym(const Fact& eq);
    Fact trans(Fact ab, Fact bc);
    Fact chain(const std::vector<Fact>& eqs);
    Fact cong(const Fact& eq, const TermP& ctx, const std::string& hole);
    // Closes theta(v) from theta(0) and a step fact under hypothesis theta(v).
    DerivationP induction(const FormulaP& theta, const std::string& v, const DerivationP& base, const Fact& step);

    // A closed first-order term, its numeral value and a proof of term = value.
    std::pair<TermP, Fact> evaluate(const TermP& t);

  private:
    std::string prefix_;
    size_t steps_ = 0, vars_ = 0;
    DerivationP truth_;
    std::map<TypeP, DerivationP> refl_;
};

bool is_numeral(const TermP& t);

}  // namespace ehaw::tactics
