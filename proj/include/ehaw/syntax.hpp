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
#include <utility>
#include <vector>

#include "ehaw/nat.hpp"
#include "ehaw/prim.hpp"

namespace ehaw {

struct SyntaxError : std::runtime_error {
    size_t pos;
    SyntaxError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};
struct SortError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotFirstOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Types (interned, so pointer equality is structural equality):

enum class TypeKind : uint8_t { Nat, Prod, Arrow };

struct Type {
    TypeKind kind;
    const Type* left;
    const Type* right;
    uint32_t id;
};
using TypeP = const Type*;

TypeP nat_t();
TypeP prod_t(TypeP a, TypeP b);
TypeP arrow_t(TypeP a, TypeP b);
std::string show(TypeP t);
TypeP parse_type(const std::string& text);

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Terms:

enum class TermKind : uint8_t { Var, Zero, Succ, PrimFn, K, Sig, Rec, D, D0, D1, App, Heo };

struct Term;
using TermP = std::shared_ptr<const Term>;

struct Term {
    TermKind kind;
    TypeP sort;
    std::string name;           // Var
    Prim prim = Prim::Succ;     // PrimFn
    std::vector<TermP> args;    // PrimFn arguments, App: {fn, arg}
    std::vector<TypeP> tparams; // combinator instance
    Nat heo;                    // Heo
};

namespace tm {
TermP var(const std::string& name, TypeP t);
TermP zero();
TermP succ();
TermP S(TermP t);
TermP numeral(uint64_t n);
TermP prim(Prim p, std::vector<TermP> args);
TermP K(TypeP a, TypeP b);
TermP Sig(TypeP a, TypeP b, TypeP c);
TermP R(TypeP a);
TermP D(TypeP a, TypeP b);
TermP D0(TypeP a, TypeP b);
TermP D1(TypeP a, TypeP b);
TermP app(TermP f, TermP x);
TermP app(TermP f, const std::vector<TermP>& xs);
TermP heo(const Nat& index, TypeP t);
}  // namespace tm

std::string show(const TermP& t);
bool term_equal(const TermP& a, const TermP& b);
bool is_first_order(const TermP& t);
bool has_heo(const TermP& t);

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Formulas:

enum class FormulaKind : uint8_t { Eq, And, Or, Imp, Exists, Forall };

struct Formula;
using FormulaP = std::shared_ptr<const Formula>;

struct Formula {
    FormulaKind kind;
    TypeP type = nullptr;  // Eq: equality type; quantifiers: type of the bound variable
    TermP lhs, rhs;
    FormulaP a, b;         // binary: both; quantifiers: body in a
    std::string var;

    bool is_quant() const { return kind == FormulaKind::Exists || kind == FormulaKind::Forall; }
    bool is_binary() const { return kind == FormulaKind::And || kind == FormulaKind::Or || kind == FormulaKind::Imp; }
};

namespace fm {
FormulaP eq(TypeP t, TermP l, TermP r);
FormulaP eq(TermP l, TermP r);  // type taken from l
FormulaP conj(FormulaP a, FormulaP b);
FormulaP disj(FormulaP a, FormulaP b);
FormulaP imp(FormulaP a, FormulaP b);
FormulaP exists(const std::string& x, TypeP t, FormulaP body);
FormulaP forall(const std::string& x, TypeP t, FormulaP body);
FormulaP falsum();  // 0 = S(0)
FormulaP neg(FormulaP a);
}  // namespace fm

bool is_falsum(const FormulaP& f);

using VarList = std::vector<std::pair<std::string, TypeP>>;
using VarTypes = std::map<std::string, TypeP>;

std::string show(const FormulaP& f);
std::string show(const VarList& vs);
FormulaP parse_formula(const std::string& text, const VarTypes& free_types = {});
TermP parse_term(const std::string& text, const VarTypes& free_types = {});
VarList parse_var_list(const std::string& text);  // "x:N, f:N->N"

bool alpha_equal(const FormulaP& a, const FormulaP& b);
bool syntactic_equal(const FormulaP& a, const FormulaP& b);

// Free variables in order of first occurrence. Throws SortError if one name has two types.
VarList free_vars(const TermP& t);
VarList free_vars(const FormulaP& f);
bool occurs_free(const std::string& x, const TermP& t);
bool occurs_free(const std::string& x, const FormulaP& f);

TermP substitute(const TermP& t, const std::string& x, const TermP& s);
FormulaP substitute(const FormulaP& f, const std::string& x, const TermP& s);
FormulaP substitute_many(const FormulaP& f, const std::map<std::string, TermP>& sigma);
// No free occurrence of x in f lies under a binder of a variable free in s.
bool free_for(const TermP& s, const std::string& x, const FormulaP& f);
std::string fresh_name(const std::string& base, const std::vector<std::string>& avoid);

bool is_first_order(const FormulaP& f);
bool has_heo(const FormulaP& f);
size_t node_count(const FormulaP& f);

// Bound variables renamed so that every binder is distinct and differs from the free variables.
FormulaP rename_apart(const FormulaP& f);
FormulaP universal_closure(const FormulaP& f, const VarList& vars);

struct SubformulaEntry {
    FormulaP formula;
    VarList vars;
    int child0 = -1, child1 = -1;
};
std::vector<SubformulaEntry> subformula_table(const FormulaP& f);

}  // namespace ehaw
