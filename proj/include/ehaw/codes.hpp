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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ehaw/nat.hpp"
#include "ehaw/prim.hpp"

namespace ehaw {

struct InvalidCodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedExpr : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Oracles:

// Finite partial function N -> N, kept sorted by key.
class Oracle {
  public:
    Oracle() = default;
    explicit Oracle(std::vector<std::pair<Nat, Nat>> entries);

    const Nat* get(const Nat& k) const;
    bool defined(const Nat& k) const { return get(k) != nullptr; }
    Oracle with(const Nat& k, const Nat& v) const;  // throws if k bound to another value
    bool subset_of(const Oracle& q) const;
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<std::pair<Nat, Nat>>& entries() const { return entries_; }

    // code([]) = 0; code((dk, v) :: rest) = 1 + <<dk, v>, code(rest)>, dk the key gap.
    Nat encode() const;
    static Oracle decode(const Nat& n);

    std::string str() const;               // {k:v,...}
    static Oracle parse(const std::string& s);  // throws std::invalid_argument

    bool operator==(const Oracle& o) const { return entries_ == o.entries_; }
    bool operator!=(const Oracle& o) const { return !(*this == o); }

  private:
    std::vector<std::pair<Nat, Nat>> entries_;
};

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Code expressions:

enum class Op : uint8_t {
    Arg = 0, Env, Num, PrimOp, Pair, Proj, IfZero, Apply, OracleQ, Close, SelfRef
};
constexpr unsigned kNumOps = 11;

class BitString;

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

struct Expr {
    Op op;
    uint32_t index = 0;  // Env slot, Proj component, Prim symbol
    Nat num;
    std::vector<ExprP> kids;  // Close: kids[0] is the body, the rest are captures
    std::shared_ptr<const BitString> body_bits;  // Close only
};

namespace cx {
ExprP arg();
ExprP env(uint32_t i);
ExprP num(const Nat& n);
ExprP prim(Prim p, std::vector<ExprP> args);
ExprP pair(ExprP a, ExprP b);
ExprP proj(uint32_t i, ExprP e);
ExprP ifz(ExprP c, ExprP t, ExprP e);
ExprP apply(ExprP f, ExprP x);
ExprP oracle(ExprP e);
ExprP close(ExprP body, std::vector<ExprP> captured);
ExprP self();
}  // namespace cx

std::string show(const Expr& e);

struct Closure {
    ExprP body;
    std::vector<Nat> captured;
};

// Number of the closure (body, captured). Throws MalformedExpr on a bad Env index.
Nat encode_closure(const ExprP& body, const std::vector<Nat>& captured);
// Total decoder: nullptr for numbers that are not closure codes.
std::shared_ptr<const Closure> decode_closure(const Nat& n);

// Canonical index of a one-argument closure with no captures.
Nat build(const ExprP& body);

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Machine:

struct EvalResult {
    enum Kind : uint8_t { Value, OracleMiss, InvalidCode, FuelExhausted };
    Kind kind = FuelExhausted;
    Nat value;  // result, or the missing key

    static EvalResult val(Nat v) { return {Value, std::move(v)}; }
    static EvalResult miss(Nat k) { return {OracleMiss, std::move(k)}; }
    static EvalResult invalid() { return {InvalidCode, Nat(0)}; }
    static EvalResult exhausted() { return {FuelExhausted, Nat(0)}; }

    bool ok() const { return kind == Value; }
    bool operator==(const EvalResult& o) const { return kind == o.kind && value == o.value; }
    std::string str() const;
};

constexpr unsigned kMaxApplyDepth = 1500;
constexpr size_t kMaxNatBits = size_t(1) << 22;

// One evaluation budget shared by every nested application.
class Machine {
  public:
    Machine(const Oracle& p, uint64_t fuel) : p_(p), fuel_(fuel) {}

    EvalResult apply(const Nat& a, const Nat& n);
    EvalResult apply(const Nat& a, const std::vector<Nat>& args);
    EvalResult eval_closed(const Expr& e);  // Arg reads as 0, no captures
    uint64_t fuel_left() const { return fuel_; }
    bool queried() const { return queried_; }

  private:
    struct Frame {
        const Nat* arg;
        const std::vector<Nat>* env;
        const Nat* self;
    };
    EvalResult eval(const Expr& e, const Frame& f);
    EvalResult call(const Nat& a, const Nat& n);

    const Oracle& p_;
    uint64_t fuel_;
    unsigned depth_ = 0;
    bool queried_ = false;
};

EvalResult apply(const Nat& a, const Nat& n, const Oracle& p, uint64_t fuel);
EvalResult apply_chain(const Nat& a, const std::vector<Nat>& args, const Oracle& p, uint64_t fuel);

// s-m-n: s with {s}(y) ~ {a}(fixed..., y).
Nat smn(const Nat& a, const std::vector<Nat>& fixed);
// Recursion theorem: e with {e}(x...) ~ {a}(e, x...).
Nat fixpoint(const Nat& a);

}  // namespace ehaw
