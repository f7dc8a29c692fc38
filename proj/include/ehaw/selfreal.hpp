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
#include <tuple>
#include <utility>
#include <vector>

#include "ehaw/heo.hpp"
#include "ehaw/realizability.hpp"
#include "ehaw/syntax.hpp"

namespace ehaw {

struct OracleInconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PremiseFalse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truth of first-order formulas with quantifiers searched over 0..Q.
//
// A quantifier is explicitly bounded when it has one of the shapes
//   forall x. lt(x,t) =N S(0) -> psi      exists x. lt(x,t) =N S(0) & psi
// with x not free in t (the atom may also open a longer conjunction). Such quantifiers are decided exactly when the bound is at most Q+1.
// Any other quantifier is searched up to Q: a witness (exists) or a counterexample (forall)
// decides it, otherwise the answer is Exhausted with reason "bound".
class TruthOracle {
  public:
    explicit TruthOracle(uint64_t q) : q_(q) {}
    uint64_t bound() const { return q_; }

    Verdict eval(const FormulaP& f, const std::map<std::string, Nat>& env = {});
    Nat term(const TermP& t, const std::map<std::string, Nat>& env) const;

  private:
    uint64_t q_;
    std::map<std::pair<const Formula*, std::vector<std::pair<std::string, Nat>>>, Verdict> memo_;
    std::vector<FormulaP> pinned_;
};

Verdict truth_eval(const FormulaP& phi, uint64_t q);

// The condition set for a first-order formula: the keys are <j, <n_1,...,n_k>>, with j
// an index into the subformula table, and only disjunctions and existentials may carry one.
class TDescription {
  public:
    TDescription(const FormulaP& phi, uint64_t q);

    const std::vector<SubformulaEntry>& table() const { return table_; }
    const FormulaP& formula() const { return table_[0].formula; }
    TruthOracle& oracle() { return *oracle_; }

    static Nat key(int j, const std::vector<Nat>& args);
    // (j, args) when the key has the shape of a table entry carrying keys.
    bool decode_key(const Nat& key, int& j, std::vector<Nat>& args) const;

    bool entry_ok(const Nat& key, const Nat& value) const;  // throws OracleInconclusive
    bool contains(const Oracle& p) const;
    ConditionSet condition_set() const;

    // Truth of table entry j at the given values of its variables.
    Verdict truth(int j, const std::vector<Nat>& args) const;

    // Keys the self-realizer can consult for the whole formula at args: tags and witnesses
    // allowed by T up to val_bound, universal quantifiers over num_set, consequents of
    // implications whose antecedent is not false.
    std::vector<Nat> demanded_keys(const std::vector<Nat>& args, const std::vector<Nat>& num_set,
                                   const Nat& val_bound) const;

  private:
    void demand(int j, std::vector<Nat>& args, const std::vector<Nat>& num_set, const Nat& val_bound,
                std::vector<Nat>& out) const;

    std::vector<SubformulaEntry> table_;
    std::shared_ptr<TruthOracle> oracle_;
};

bool t_membership(const Oracle& p, const TDescription& t);

// a with a 0 n_1 ... n_k realizing phi(n_1, ..., n_k) under suitable conditions.
Nat self_index(const FormulaP& phi);

// A universe over the keys demanded for phi at args, with T as its condition set.
ForcingUniverse selfreal_universe(const TDescription& t, const std::vector<Nat>& args,
                                  std::vector<Nat> num_set = {0, 1, 2, 3, 4}, Nat val_bound = 4,
                                  uint64_t fuel = 100000);

struct SelfRealization {
    Oracle q;
    Nat index;     // self_index(phi)
    Nat realizer;  // index applied to 0 and the arguments under q
    Verdict verdict;  // check_single in the universe
};

SelfRealization realize_true(const TDescription& t, const std::vector<Nat>& args, const Oracle& p,
                             const ForcingUniverse& u);
SelfRealization realize_true(const FormulaP& phi, const Oracle& p, const ForcingUniverse& u, uint64_t q = 20);

struct TruthReport {
    Verdict check;  // check_pair in the universe
    Verdict truth;  // truth_eval
    // Fails only if the pair checks and the formula is false.
    Verdict agreement;
};

TruthReport truth_from_realizer(const TDescription& t, const std::vector<Nat>& args, const Oracle& p,
                                const Nat& a, const Nat& b, const ForcingUniverse& u);

// Every condition of u against every pair drawn from the candidate realizers of phi and the
// values of its self-realizer, each run through truth_from_realizer.
struct RealizerSearch {
    size_t conditions = 0;
    size_t pairs = 0;         // (condition, a, b) triples checked
    size_t holds = 0;         // of which check_pair held
    size_t exhausted = 0;
    size_t disagreements = 0;  // held although the sentence is false
    std::string first_disagreement;
};
RealizerSearch search_realizers(const TDescription& t, const ForcingUniverse& u);

// Sentences of a file, one per line, optionally preceded by the word true or false.
struct LabelledSentence {
    FormulaP formula;
    int label = -1;  // 1 true, 0 false, -1 none
    std::string text;
};
std::vector<LabelledSentence> load_sentences(const std::string& path);

}  // namespace ehaw
