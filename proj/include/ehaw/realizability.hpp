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
#include <tuple>
#include <vector>

#include "ehaw/heo.hpp"
#include "ehaw/syntax.hpp"

namespace ehaw {

struct MalformedFormula : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Known realizers of closed formulas. They are offered first wherever a
// realizer of a matching formula is quantified over.
struct RealizerRegistry {
    std::vector<std::pair<FormulaP, Nat>> entries;
    void add(FormulaP f, Nat code) { entries.emplace_back(std::move(f), std::move(code)); }
};

struct Binding {
    Nat value;
    TypeP type;
};
using RealEnv = std::map<std::string, Binding>;

// phi with every bound variable of env replaced by a numeral (at N) or an F constant.
FormulaP instantiate(const FormulaP& phi, const RealEnv& env);

// N, products for & and exists, N*(A*B) for |, arrows for -> and forall.
TypeP formula_type(const FormulaP& phi);

// Candidate realizers used for the hypothetical quantifiers ("if q forces (c,d): phi").
// Registry entries for phi come first, then shape-directed values:
//   atomic: 0, 1;  &: pairs;  |: <0,c>, <1,c>;  exists: <n,c>;  ->, forall: 0 and constant functions.
// The plain variant builds triples <i,c,0> for disjunctions. Both add num_set and stop at the cap.
struct CandidateOptions {
    size_t cap = 8;
    int depth = 2;
};

class ForcingRealizability {
  public:
    ForcingRealizability(ForcingEngine& e, const RealizerRegistry* reg = nullptr, CandidateOptions opts = {});

    Verdict check_pair(int p, const Nat& a, const Nat& b, const FormulaP& phi, const RealEnv& env = {});
    Verdict check_single(int p, const Nat& a, const FormulaP& phi) { return check_pair(p, a, a, phi); }
    // Term equality forced at p: every extension has a further one where both values agree.
    Verdict force_terms(int p, TypeP t, const TermP& l, const TermP& r, const RealEnv& env);
    std::vector<Nat> candidates(const FormulaP& phi, const RealEnv& env);
    ForcingEngine& engine() { return e_; }

  private:
    Verdict check(int p, const Nat& a, const Nat& b, const FormulaP& phi, const RealEnv& env);
    Applied term_value(int r, const TermP& t, const RealEnv& env);
    std::vector<Nat> shape_candidates(const FormulaP& phi, const RealEnv& env, int depth);

    ForcingEngine& e_;
    const RealizerRegistry* reg_;
    CandidateOptions opts_;
    using Key = std::tuple<int, const Formula*, Nat, Nat, std::vector<Nat>>;
    std::map<Key, Verdict> memo_;
    std::map<std::tuple<int, const Term*, std::vector<Nat>>, Applied> term_memo_;
};

Verdict check_pair(const ForcingUniverse& u, const Oracle& p, const Nat& a, const Nat& b, const FormulaP& phi,
                   const RealizerRegistry* reg = nullptr);
Verdict check_single(const ForcingUniverse& u, const Oracle& p, const Nat& a, const FormulaP& phi,
                     const RealizerRegistry* reg = nullptr);

class PlainRealizability {
  public:
    PlainRealizability(PlainEngine& e, const RealizerRegistry* reg = nullptr, CandidateOptions opts = {});
    Verdict check(const Nat& a, const FormulaP& phi, const RealEnv& env = {});
    std::vector<Nat> candidates(const FormulaP& phi, const RealEnv& env);
    PlainEngine& engine() { return e_; }

  private:
    Applied term_value(const TermP& t, const RealEnv& env);
    std::vector<Nat> shape_candidates(const FormulaP& phi, const RealEnv& env, int depth);

    PlainEngine& e_;
    const RealizerRegistry* reg_;
    CandidateOptions opts_;
    std::map<std::tuple<const Formula*, Nat, std::vector<Nat>>, Verdict> memo_;
};

Verdict check_plain(const Nat& a, const FormulaP& phi, const std::vector<Nat>& num_set, uint64_t fuel,
                    const RealizerRegistry* reg = nullptr);

}  // namespace ehaw
