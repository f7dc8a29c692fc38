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
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ehaw/codes.hpp"
#include "ehaw/syntax.hpp"

namespace ehaw {

struct UniverseEmpty : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Verdict {
    enum Kind : uint8_t { Holds, Fails, Exhausted };
    Kind kind = Holds;
    std::string reason;  // Exhausted: "fuel" or "oracle"; Fails: a counterexample

    static Verdict holds() { return {Holds, ""}; }
    static Verdict fails(std::string why = "") { return {Fails, std::move(why)}; }
    static Verdict exhausted(std::string why) { return {Exhausted, std::move(why)}; }
    bool ok() const { return kind == Holds; }
    bool failed() const { return kind == Fails; }
    bool exhausted() const { return kind == Exhausted; }
    std::string str() const;
};

// Three-valued connectives. A decisive answer wins over Exhausted, Exhausted wins over the rest.
Verdict operator&&(const Verdict& a, const Verdict& b);
Verdict operator||(const Verdict& a, const Verdict& b);
Verdict implies(const Verdict& a, const Verdict& b);

// Set of conditions T, given by a membership test.
struct ConditionSet {
    std::string name = "all";
    std::function<bool(const Oracle&)> member;  // empty means every condition
    // Optional test on single entries, applied while enumerating.
    std::function<bool(const Nat& key, const Nat& value)> entry;
    bool contains(const Oracle& p) const;
};

struct ForcingUniverse {
    std::vector<Nat> key_set;
    Nat val_bound = 1;  // oracle values range over 0..val_bound
    std::vector<Nat> num_set{0, 1, 2, 3, 4};
    uint64_t fuel = 100000;
    ConditionSet tset;
    // Extra members of the test sets at higher types, on top of the generated ones.
    std::map<TypeP, std::vector<Nat>> extra_samples;
    size_t sample_cap = 10;

    std::string digest() const;
};

// Result of one application inside a universe.
struct Applied {
    enum Kind : uint8_t { Value, Undefined, Exhausted };
    Kind kind;
    Nat value;
    std::string reason;
};

// Finite test sets for the numeral quantifiers, shared by both equalities.
// N: num_set. A*B: pairs of samples. A->B: num_set, 0, constant functions, identity,
// successor, plus the universe's extras; truncated at sample_cap.
std::vector<Nat> sample_values(TypeP t, const std::vector<Nat>& num_set,
                               const std::map<TypeP, std::vector<Nat>>& extra, size_t cap);

class ForcingEngine {
  public:
    explicit ForcingEngine(ForcingUniverse u);

    const ForcingUniverse& universe() const { return u_; }
    const std::vector<Oracle>& conditions() const { return conds_; }
    int index_of(const Oracle& p) const;  // -1 when p is not a condition of the universe
    int require(const Oracle& p) const;   // throws UniverseEmpty
    // Every condition extending p, ordered by oracle encoding.
    const std::vector<int>& extensions(int p);

    Applied apply(int r, const Nat& a, const Nat& n);
    Applied classify(const EvalResult& res) const;
    const std::vector<Nat>& samples(TypeP t);

    Verdict force_eq(int p, TypeP t, const Nat& a, const Nat& b);
    Verdict force_in(int p, TypeP t, const Nat& a) { return force_eq(p, t, a, a); }

  private:
    ForcingUniverse u_;
    std::vector<Oracle> conds_;
    std::map<Nat, int> index_;
    std::map<int, std::vector<int>> ext_;
    std::map<std::pair<Nat, Nat>, Applied> pure_apply_;
    std::map<std::tuple<int, Nat, Nat>, Applied> cond_apply_;
    std::map<std::tuple<int, uint32_t, Nat, Nat>, Verdict> eq_memo_;
    std::map<TypeP, std::vector<Nat>> samples_;
};

Verdict force_eq(const ForcingUniverse& u, const Oracle& p, TypeP t, const Nat& a, const Nat& b);
Verdict force_in(const ForcingUniverse& u, const Oracle& p, TypeP t, const Nat& a);

// 0^A. Under the closure numbering 0 is the constantly-0 function and <0,0> = 0, so this is 0 at every type.
Nat default_code(TypeP t);

// Oracle-free equality over a numeral test set. Consulting the oracle counts as undefined.
class PlainEngine {
  public:
    PlainEngine(std::vector<Nat> num_set, uint64_t fuel, std::map<TypeP, std::vector<Nat>> extra = {},
                size_t sample_cap = 10);
    Applied apply(const Nat& a, const Nat& n);
    const std::vector<Nat>& samples(TypeP t);
    Verdict eq(TypeP t, const Nat& a, const Nat& b);
    const std::vector<Nat>& num_set() const { return num_set_; }
    uint64_t fuel() const { return fuel_; }

  private:
    std::vector<Nat> num_set_;
    uint64_t fuel_;
    std::map<TypeP, std::vector<Nat>> extra_;
    size_t cap_;
    std::map<std::pair<Nat, Nat>, Applied> apply_memo_;
    std::map<std::tuple<uint32_t, Nat, Nat>, Verdict> eq_memo_;
    std::map<TypeP, std::vector<Nat>> samples_;
};

Verdict plain_eq(TypeP t, const Nat& a, const Nat& b, const std::vector<Nat>& num_set, uint64_t fuel);

}  // namespace ehaw
