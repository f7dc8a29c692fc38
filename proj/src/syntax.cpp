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

#include "ehaw/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <tuple>

namespace ehaw {

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Types:

namespace {
struct TypeTable {
    std::mutex mu;
    std::map<std::tuple<int, uint32_t, uint32_t>, Type*> types;
    uint32_t next_id = 1;
};

TypeTable& type_table()
{
    static TypeTable t;
    return t;
}

TypeP intern(TypeKind k, TypeP l, TypeP r)
{
    TypeTable& tt = type_table();
    std::lock_guard<std::mutex> lock(tt.mu);
    auto key = std::make_tuple((int)k, l->id, r->id);
    auto it = tt.types.find(key);
    if (it != tt.types.end()) return it->second;
    Type* t = new Type{k, l, r, tt.next_id++};
    tt.types.emplace(key, t);
    return t;
}
}  // namespace

TypeP nat_t()
{
    static const Type n{TypeKind::Nat, nullptr, nullptr, 0};
    return &n;
}
TypeP prod_t(TypeP a, TypeP b) { return intern(TypeKind::Prod, a, b); }
TypeP arrow_t(TypeP a, TypeP b) { return intern(TypeKind::Arrow, a, b); }

std::string show(TypeP t)
{
    switch (t->kind) {
    case TypeKind::Nat: return "N";
    case TypeKind::Prod: {
        std::string l = show(t->left), r = show(t->right);
        if (t->left->kind != TypeKind::Nat) l = "(" + l + ")";
        if (t->right->kind == TypeKind::Arrow) r = "(" + r + ")";
        return l + "*" + r;
    }
    case TypeKind::Arrow: {
        std::string l = show(t->left);
        if (t->left->kind == TypeKind::Arrow) l = "(" + l + ")";
        return l + "->" + show(t->right);
    }
    }
    return "?";
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Terms:

namespace tm {

namespace {
std::shared_ptr<Term> mk(TermKind k, TypeP sort)
{
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->sort = sort;
    return t;
}
TypeP arr(TypeP a, TypeP b) { return arrow_t(a, b); }
}  // namespace

TermP var(const std::string& name, TypeP t)
{
    auto v = mk(TermKind::Var, t);
    v->name = name;
    return v;
}

TermP zero() { static TermP z = mk(TermKind::Zero, nat_t()); return z; }
TermP succ() { static TermP s = mk(TermKind::Succ, arrow_t(nat_t(), nat_t())); return s; }
TermP S(TermP t) { return app(succ(), std::move(t)); }

TermP numeral(uint64_t n)
{
    TermP t = zero();
    for (uint64_t i = 0; i < n; ++i) t = S(t);
    return t;
}

TermP prim(Prim p, std::vector<TermP> args)
{
    if (args.size() != prim_arity(p))
        throw SortError(std::string(prim_name(p)) + " expects " + std::to_string(prim_arity(p)) + " arguments");
    for (auto& a : args)
        if (a->sort != nat_t()) throw SortError(std::string(prim_name(p)) + " applied to a non-numeric term");
    auto t = mk(TermKind::PrimFn, nat_t());
    t->prim = p;
    t->args = std::move(args);
    return t;
}

TermP K(TypeP a, TypeP b)
{
    auto t = mk(TermKind::K, arr(a, arr(b, a)));
    t->tparams = {a, b};
    return t;
}

TermP Sig(TypeP a, TypeP b, TypeP c)
{
    auto t = mk(TermKind::Sig, arr(arr(a, arr(b, c)), arr(arr(a, b), arr(a, c))));
    t->tparams = {a, b, c};
    return t;
}

TermP R(TypeP a)
{
    TypeP n = nat_t();
    auto t = mk(TermKind::Rec, arr(a, arr(arr(a, arr(n, a)), arr(n, a))));
    t->tparams = {a};
    return t;
}

TermP D(TypeP a, TypeP b)
{
    auto t = mk(TermKind::D, arr(a, arr(b, prod_t(a, b))));
    t->tparams = {a, b};
    return t;
}

TermP D0(TypeP a, TypeP b)
{
    auto t = mk(TermKind::D0, arr(prod_t(a, b), a));
    t->tparams = {a, b};
    return t;
}

TermP D1(TypeP a, TypeP b)
{
    auto t = mk(TermKind::D1, arr(prod_t(a, b), b));
    t->tparams = {a, b};
    return t;
}

TermP app(TermP f, TermP x)
{
    if (f->sort->kind != TypeKind::Arrow)
        throw SortError("app: " + show(f) + " has sort " + show(f->sort) + ", not a function sort");
    if (f->sort->left != x->sort)
        throw SortError("app: " + show(f) + " expects " + show(f->sort->left) + " but " + show(x) +
                        " has sort " + show(x->sort));
    auto t = mk(TermKind::App, f->sort->right);
    t->args = {std::move(f), std::move(x)};
    return t;
}

TermP app(TermP f, const std::vector<TermP>& xs)
{
    for (auto& x : xs) f = app(f, x);
    return f;
}

TermP heo(const Nat& index, TypeP t)
{
    auto h = mk(TermKind::Heo, t);
    h->heo = index;
    return h;
}

}  // namespace tm

std::string show(const TermP& t)
{
    auto types = [&]() {
        std::string s = "[";
        for (size_t i = 0; i < t->tparams.size(); ++i) {
            if (i) s += ",";
            s += show(t->tparams[i]);
        }
        return s + "]";
    };
    switch (t->kind) {
    case TermKind::Var: return t->name;
    case TermKind::Zero: return "0";
    case TermKind::Succ: return "S";
    case TermKind::PrimFn: {
        std::string s = std::string(prim_name(t->prim)) + "(";
        for (size_t i = 0; i < t->args.size(); ++i) {
            if (i) s += ",";
            s += show(t->args[i]);
        }
        return s + ")";
    }
    case TermKind::K: return "K" + types();
    case TermKind::Sig: return "Sig" + types();
    case TermKind::Rec: return "R" + types();
    case TermKind::D: return "D" + types();
    case TermKind::D0: return "D0" + types();
    case TermKind::D1: return "D1" + types();
    case TermKind::App:
        if (t->args[0]->kind == TermKind::Succ) return "S(" + show(t->args[1]) + ")";
        return "app(" + show(t->args[0]) + "," + show(t->args[1]) + ")";
    case TermKind::Heo: return "F[" + t->heo.str() + ":" + show(t->sort) + "]";
    }
    return "?";
}

bool term_equal(const TermP& a, const TermP& b)
{
    if (a == b) return true;
    if (a->kind != b->kind || a->sort != b->sort) return false;
    switch (a->kind) {
    case TermKind::Var: return a->name == b->name;
    case TermKind::Heo: return a->heo == b->heo;
    default: break;
    }
    if (a->prim != b->prim || a->tparams != b->tparams || a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
    return true;
}

bool is_first_order(const TermP& t)
{
    switch (t->kind) {
    case TermKind::Var: return t->sort == nat_t();
    case TermKind::Zero: return true;
    case TermKind::PrimFn:
        return std::all_of(t->args.begin(), t->args.end(), [](auto& a) { return is_first_order(a); });
    case TermKind::App: return t->args[0]->kind == TermKind::Succ && is_first_order(t->args[1]);
    default: return false;
    }
}

bool has_heo(const TermP& t)
{
    if (t->kind == TermKind::Heo) return true;
    return std::any_of(t->args.begin(), t->args.end(), [](auto& a) { return has_heo(a); });
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Formulas:

namespace fm {

namespace {
std::shared_ptr<Formula> mk(FormulaKind k)
{
    auto f = std::make_shared<Formula>();
    f->kind = k;
    return f;
}
}  // namespace

FormulaP eq(TypeP t, TermP l, TermP r)
{
    if (l->sort != t || r->sort != t)
        throw SortError("equation " + show(l) + " =" + show(t) + " " + show(r) + " is not well sorted");
    auto f = mk(FormulaKind::Eq);
    f->type = t;
    f->lhs = std::move(l);
    f->rhs = std::move(r);
    return f;
}

FormulaP eq(TermP l, TermP r)
{
    TypeP t = l->sort;
    return eq(t, std::move(l), std::move(r));
}

namespace {
FormulaP bin(FormulaKind k, FormulaP a, FormulaP b)
{
    auto f = mk(k);
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}
FormulaP quant(FormulaKind k, const std::string& x, TypeP t, FormulaP body)
{
    auto f = mk(k);
    f->var = x;
    f->type = t;
    f->a = std::move(body);
    return f;
}
}  // namespace

FormulaP conj(FormulaP a, FormulaP b) { return bin(FormulaKind::And, std::move(a), std::move(b)); }
FormulaP disj(FormulaP a, FormulaP b) { return bin(FormulaKind::Or, std::move(a), std::move(b)); }
FormulaP imp(FormulaP a, FormulaP b) { return bin(FormulaKind::Imp, std::move(a), std::move(b)); }
FormulaP exists(const std::string& x, TypeP t, FormulaP body) { return quant(FormulaKind::Exists, x, t, std::move(body)); }
FormulaP forall(const std::string& x, TypeP t, FormulaP body) { return quant(FormulaKind::Forall, x, t, std::move(body)); }

FormulaP falsum()
{
    static FormulaP f = eq(nat_t(), tm::zero(), tm::S(tm::zero()));
    return f;
}

FormulaP neg(FormulaP a) { return imp(std::move(a), falsum()); }

}  // namespace fm

bool is_falsum(const FormulaP& f)
{
    return f->kind == FormulaKind::Eq && f->type == nat_t() && f->lhs->kind == TermKind::Zero &&
           f->rhs->kind == TermKind::App && f->rhs->args[0]->kind == TermKind::Succ &&
           f->rhs->args[1]->kind == TermKind::Zero;
}

namespace {

std::string show_f(const FormulaP& f, bool top)
{
    auto operand = [](const FormulaP& g) {
        std::string s = show_f(g, false);
        return g->is_quant() ? "(" + s + ")" : s;
    };
    switch (f->kind) {
    case FormulaKind::Eq: return show(f->lhs) + " =" + show(f->type) + " " + show(f->rhs);
    case FormulaKind::Imp:
        if (is_falsum(f->b)) {
            std::string s = show_f(f->a, false);
            if (f->a->kind == FormulaKind::Eq || f->a->is_quant()) s = "(" + s + ")";
            return "~" + s;
        }
        [[fallthrough]];
    case FormulaKind::And:
    case FormulaKind::Or: {
        const char* op = f->kind == FormulaKind::And ? " & " : f->kind == FormulaKind::Or ? " | " : " -> ";
        std::string s = operand(f->a) + op + operand(f->b);
        return top ? s : "(" + s + ")";
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall:
        return std::string(f->kind == FormulaKind::Exists ? "exists " : "forall ") + f->var + ":" +
               show(f->type) + ". " + show_f(f->a, true);
    }
    return "?";
}

}  // namespace

std::string show(const FormulaP& f) { return show_f(f, true); }

std::string show(const VarList& vs)
{
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ", ";
        s += vs[i].first + ":" + show(vs[i].second);
    }
    return s;
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Parser:

namespace {

struct Tok {
    enum Kind { Ident, Number, Sym, End } kind;
    std::string text;
    size_t pos;
};

std::vector<Tok> lex(const std::string& s)
{
    std::vector<Tok> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) { ++i; continue; }
        size_t start = i;
        if (std::isalpha((unsigned char)c) || c == '_') {
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_' || s[i] == '\'')) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
        } else if (std::isdigit((unsigned char)c)) {
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            out.push_back({Tok::Number, s.substr(start, i - start), start});
        } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Tok::Sym, "->", start});
            i += 2;
        } else if (std::string("()[],:.=&|*~").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c), start});
            ++i;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
  public:
    Parser(const std::string& text, const VarTypes& free) : toks_(lex(text)), free_(free) {}

    FormulaP formula_all()
    {
        FormulaP f = imp();
        expect_end();
        return f;
    }
    TermP term_all()
    {
        TermP t = term();
        expect_end();
        return t;
    }
    TypeP type_all()
    {
        TypeP t = type();
        expect_end();
        return t;
    }
    VarList var_list_all()
    {
        VarList vs;
        if (peek().kind == Tok::End) return vs;
        for (;;) {
            std::string x = ident("variable name");
            expect(":");
            vs.emplace_back(x, type());
            if (!accept(",")) break;
        }
        expect_end();
        return vs;
    }

  private:
    const Tok& peek(size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
    bool is_sym(const std::string& s, size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
    bool accept(const std::string& s)
    {
        if (!is_sym(s)) return false;
        ++i_;
        return true;
    }
    void expect(const std::string& s)
    {
        if (!accept(s)) fail("expected '" + s + "'");
    }
    void expect_end()
    {
        if (peek().kind != Tok::End) fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        const Tok& t = peek();
        throw SyntaxError(msg + (t.kind == Tok::End ? " (end of input)" : " near '" + t.text + "'"), t.pos);
    }
    std::string ident(const char* what)
    {
        if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
        return toks_[i_++].text;
    }

    TypeP type()
    {
        TypeP p = prod_type();
        if (accept("->")) return arrow_t(p, type());
        return p;
    }
    TypeP prod_type()
    {
        TypeP a = atom_type();
        if (accept("*")) return prod_t(a, prod_type());
        return a;
    }
    TypeP atom_type()
    {
        if (accept("(")) {
            TypeP t = type();
            expect(")");
            return t;
        }
        if (peek().kind == Tok::Ident && peek().text == "N") {
            ++i_;
            return nat_t();
        }
        fail("expected a type");
    }

    FormulaP imp()
    {
        FormulaP l = disj();
        if (accept("->")) return fm::imp(l, imp());
        return l;
    }
    FormulaP disj()
    {
        FormulaP l = conj();
        while (accept("|")) l = fm::disj(l, conj());
        return l;
    }
    FormulaP conj()
    {
        FormulaP l = unary();
        while (accept("&")) l = fm::conj(l, unary());
        return l;
    }
    FormulaP unary()
    {
        if (peek().kind == Tok::Ident && (peek().text == "forall" || peek().text == "exists")) {
            bool all = peek().text == "forall";
            ++i_;
            std::string x = ident("bound variable");
            check_var_name(x);
            expect(":");
            TypeP t = type();
            expect(".");
            bound_.emplace_back(x, t);
            FormulaP body = imp();
            bound_.pop_back();
            return all ? fm::forall(x, t, body) : fm::exists(x, t, body);
        }
        if (accept("~")) return fm::neg(unary());
        if (accept("(")) {
            FormulaP f = imp();
            expect(")");
            return f;
        }
        size_t at = peek().pos;
        TermP l = term();
        expect("=");
        TypeP t = type();
        TermP r = term();
        if (l->sort != t || r->sort != t)
            throw SortError("equation at position " + std::to_string(at) + ": " + show(l) + " : " + show(l->sort) +
                            " and " + show(r) + " : " + show(r->sort) + " against =" + show(t));
        return fm::eq(t, l, r);
    }

    void check_var_name(const std::string& x) const
    {
        if (x == "N" || x == "S" || x == "forall" || x == "exists") fail("reserved word used as a variable");
    }

    std::vector<TypeP> type_args(size_t n)
    {
        expect("[");
        std::vector<TypeP> ts;
        for (size_t k = 0; k < n; ++k) {
            if (k) expect(",");
            ts.push_back(type());
        }
        expect("]");
        return ts;
    }

    TermP term()
    {
        const Tok& t = peek();
        if (t.kind == Tok::Number) {
            ++i_;
            if (t.text.size() > 6) fail("numeral too large");
            return tm::numeral(std::stoull(t.text));
        }
        if (t.kind != Tok::Ident) fail("expected a term");
        std::string w = t.text;
        ++i_;
        if (w == "S") {
            if (accept("(")) {
                TermP a = term();
                expect(")");
                return tm::S(a);
            }
            return tm::succ();
        }
        if (is_sym("(")) {
            if (w == "app") {
                expect("(");
                TermP f = term();
                expect(",");
                TermP x = term();
                expect(")");
                return tm::app(f, x);
            }
            if (auto p = prim_by_name(w)) {
                expect("(");
                std::vector<TermP> args;
                if (!is_sym(")")) {
                    args.push_back(term());
                    while (accept(",")) args.push_back(term());
                }
                expect(")");
                return tm::prim(*p, args);
            }
            fail("unknown function symbol '" + w + "'");
        }
        if (is_sym("[")) {
            if (w == "K") { auto ts = type_args(2); return tm::K(ts[0], ts[1]); }
            if (w == "Sig") { auto ts = type_args(3); return tm::Sig(ts[0], ts[1], ts[2]); }
            if (w == "R") { auto ts = type_args(1); return tm::R(ts[0]); }
            if (w == "D") { auto ts = type_args(2); return tm::D(ts[0], ts[1]); }
            if (w == "D0") { auto ts = type_args(2); return tm::D0(ts[0], ts[1]); }
            if (w == "D1") { auto ts = type_args(2); return tm::D1(ts[0], ts[1]); }
            if (w == "F") {
                expect("[");
                if (peek().kind != Tok::Number) fail("expected an index");
                Nat n = parse_nat(toks_[i_++].text);
                expect(":");
                TypeP ty = type();
                expect("]");
                return tm::heo(n, ty);
            }
            fail("unknown constant '" + w + "'");
        }
        check_var_name(w);
        for (size_t k = bound_.size(); k-- > 0;)
            if (bound_[k].first == w) return tm::var(w, bound_[k].second);
        auto it = free_.find(w);
        return tm::var(w, it == free_.end() ? nat_t() : it->second);
    }

    std::vector<Tok> toks_;
    size_t i_ = 0;
    const VarTypes& free_;
    VarList bound_;
};

}  // namespace

FormulaP parse_formula(const std::string& text, const VarTypes& free_types)
{
    return Parser(text, free_types).formula_all();
}

TermP parse_term(const std::string& text, const VarTypes& free_types)
{
    return Parser(text, free_types).term_all();
}

TypeP parse_type(const std::string& text)
{
    VarTypes none;
    return Parser(text, none).type_all();
}

VarList parse_var_list(const std::string& text)
{
    VarTypes none;
    return Parser(text, none).var_list_all();
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Equality up to bound names:

namespace {

using Binds = std::vector<std::pair<std::string, std::string>>;

int bound_index(const Binds& b, const std::string& x, bool left)
{
    for (size_t k = b.size(); k-- > 0;)
        if ((left ? b[k].first : b[k].second) == x) return (int)k;
    return -1;
}

bool aeq_term(const TermP& a, const TermP& b, const Binds& env)
{
    if (a->kind != b->kind || a->sort != b->sort) return false;
    if (a->kind == TermKind::Var) {
        int i = bound_index(env, a->name, true), j = bound_index(env, b->name, false);
        return i == j && (i >= 0 || a->name == b->name);
    }
    if (a->kind == TermKind::Heo) return a->heo == b->heo;
    if (a->prim != b->prim || a->tparams != b->tparams || a->args.size() != b->args.size()) return false;
    for (size_t k = 0; k < a->args.size(); ++k)
        if (!aeq_term(a->args[k], b->args[k], env)) return false;
    return true;
}

bool aeq(const FormulaP& a, const FormulaP& b, Binds& env)
{
    if (a->kind != b->kind || a->type != b->type) return false;
    switch (a->kind) {
    case FormulaKind::Eq: return aeq_term(a->lhs, b->lhs, env) && aeq_term(a->rhs, b->rhs, env);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: return aeq(a->a, b->a, env) && aeq(a->b, b->b, env);
    default: {
        env.emplace_back(a->var, b->var);
        bool r = aeq(a->a, b->a, env);
        env.pop_back();
        return r;
    }
    }
}

}  // namespace

bool alpha_equal(const FormulaP& a, const FormulaP& b)
{
    Binds env;
    return aeq(a, b, env);
}

bool syntactic_equal(const FormulaP& a, const FormulaP& b)
{
    if (a->kind != b->kind || a->type != b->type || a->var != b->var) return false;
    switch (a->kind) {
    case FormulaKind::Eq: return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: return syntactic_equal(a->a, b->a) && syntactic_equal(a->b, b->b);
    default: return syntactic_equal(a->a, b->a);
    }
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Free variables and substitution:

namespace {

void add_var(VarList& out, const std::string& x, TypeP t)
{
    for (auto& [y, u] : out) {
        if (y != x) continue;
        if (u != t) throw SortError("variable " + x + " used at sorts " + show(u) + " and " + show(t));
        return;
    }
    out.emplace_back(x, t);
}

void fv_term(const TermP& t, std::vector<std::string>& bound, VarList& out)
{
    if (t->kind == TermKind::Var) {
        if (std::find(bound.begin(), bound.end(), t->name) == bound.end()) add_var(out, t->name, t->sort);
        return;
    }
    for (auto& a : t->args) fv_term(a, bound, out);
}

void fv(const FormulaP& f, std::vector<std::string>& bound, VarList& out)
{
    switch (f->kind) {
    case FormulaKind::Eq:
        fv_term(f->lhs, bound, out);
        fv_term(f->rhs, bound, out);
        return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
        fv(f->a, bound, out);
        fv(f->b, bound, out);
        return;
    default:
        bound.push_back(f->var);
        fv(f->a, bound, out);
        bound.pop_back();
    }
}

std::vector<std::string> names(const VarList& vs)
{
    std::vector<std::string> r;
    for (auto& v : vs) r.push_back(v.first);
    return r;
}

}  // namespace

VarList free_vars(const TermP& t)
{
    VarList out;
    std::vector<std::string> bound;
    fv_term(t, bound, out);
    return out;
}

VarList free_vars(const FormulaP& f)
{
    VarList out;
    std::vector<std::string> bound;
    fv(f, bound, out);
    return out;
}

bool occurs_free(const std::string& x, const TermP& t)
{
    if (t->kind == TermKind::Var) return t->name == x;
    return std::any_of(t->args.begin(), t->args.end(), [&](auto& a) { return occurs_free(x, a); });
}

bool occurs_free(const std::string& x, const FormulaP& f)
{
    switch (f->kind) {
    case FormulaKind::Eq: return occurs_free(x, f->lhs) || occurs_free(x, f->rhs);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: return occurs_free(x, f->a) || occurs_free(x, f->b);
    default: return f->var != x && occurs_free(x, f->a);
    }
}

std::string fresh_name(const std::string& base, const std::vector<std::string>& avoid)
{
    auto used = [&](const std::string& s) { return std::find(avoid.begin(), avoid.end(), s) != avoid.end(); };
    if (!used(base)) return base;
    for (unsigned i = 1;; ++i) {
        std::string c = base + std::to_string(i);
        if (!used(c)) return c;
    }
}

TermP substitute(const TermP& t, const std::string& x, const TermP& s)
{
    if (t->kind == TermKind::Var) {
        if (t->name != x) return t;
        if (t->sort != s->sort)
            throw SortError("substituting " + show(s) + " : " + show(s->sort) + " for " + x + " : " + show(t->sort));
        return s;
    }
    if (t->args.empty()) return t;
    std::vector<TermP> args;
    bool changed = false;
    for (auto& a : t->args) {
        args.push_back(substitute(a, x, s));
        changed |= args.back() != a;
    }
    if (!changed) return t;
    auto r = std::make_shared<Term>(*t);
    r->args = std::move(args);
    return r;
}

namespace {

TermP subst_term_many(const TermP& t, const std::map<std::string, TermP>& sigma)
{
    if (t->kind == TermKind::Var) {
        auto it = sigma.find(t->name);
        if (it == sigma.end()) return t;
        if (it->second->sort != t->sort)
            throw SortError("substituting " + show(it->second) + " for " + t->name + " : " + show(t->sort));
        return it->second;
    }
    if (t->args.empty()) return t;
    std::vector<TermP> args;
    bool changed = false;
    for (auto& a : t->args) {
        args.push_back(subst_term_many(a, sigma));
        changed |= args.back() != a;
    }
    if (!changed) return t;
    auto r = std::make_shared<Term>(*t);
    r->args = std::move(args);
    return r;
}

FormulaP subst_many(const FormulaP& f, std::map<std::string, TermP> sigma)
{
    for (auto it = sigma.begin(); it != sigma.end();) {
        if (!occurs_free(it->first, f)) it = sigma.erase(it);
        else ++it;
    }
    if (sigma.empty()) return f;
    switch (f->kind) {
    case FormulaKind::Eq: return fm::eq(f->type, subst_term_many(f->lhs, sigma), subst_term_many(f->rhs, sigma));
    case FormulaKind::And: return fm::conj(subst_many(f->a, sigma), subst_many(f->b, sigma));
    case FormulaKind::Or: return fm::disj(subst_many(f->a, sigma), subst_many(f->b, sigma));
    case FormulaKind::Imp: return fm::imp(subst_many(f->a, sigma), subst_many(f->b, sigma));
    default: break;
    }
    sigma.erase(f->var);
    std::vector<std::string> avoid;
    bool clash = false;
    for (auto& [y, s] : sigma) {
        avoid.push_back(y);
        for (auto& v : free_vars(s)) {
            avoid.push_back(v.first);
            clash |= v.first == f->var;
        }
    }
    std::string x = f->var;
    FormulaP body = f->a;
    if (clash) {
        for (auto& v : free_vars(body)) avoid.push_back(v.first);
        x = fresh_name(f->var, avoid);
        body = substitute(body, f->var, tm::var(x, f->type));
    }
    body = subst_many(body, sigma);
    return f->kind == FormulaKind::Exists ? fm::exists(x, f->type, body) : fm::forall(x, f->type, body);
}

}  // namespace

FormulaP substitute(const FormulaP& f, const std::string& x, const TermP& s)
{
    return subst_many(f, {{x, s}});
}

FormulaP substitute_many(const FormulaP& f, const std::map<std::string, TermP>& sigma)
{
    return subst_many(f, sigma);
}

namespace {
bool free_for_rec(const TermP& s, const std::string& x, const FormulaP& f, std::vector<std::string>& binders,
                  const VarList& fvs)
{
    switch (f->kind) {
    case FormulaKind::Eq: {
        if (!occurs_free(x, f->lhs) && !occurs_free(x, f->rhs)) return true;
        for (auto& v : fvs)
            if (std::find(binders.begin(), binders.end(), v.first) != binders.end()) return false;
        return true;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
        return free_for_rec(s, x, f->a, binders, fvs) && free_for_rec(s, x, f->b, binders, fvs);
    default: {
        if (f->var == x) return true;
        binders.push_back(f->var);
        bool r = free_for_rec(s, x, f->a, binders, fvs);
        binders.pop_back();
        return r;
    }
    }
}
}  // namespace

bool free_for(const TermP& s, const std::string& x, const FormulaP& f)
{
    std::vector<std::string> binders;
    return free_for_rec(s, x, f, binders, free_vars(s));
}

bool is_first_order(const FormulaP& f)
{
    switch (f->kind) {
    case FormulaKind::Eq: return f->type == nat_t() && is_first_order(f->lhs) && is_first_order(f->rhs);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: return is_first_order(f->a) && is_first_order(f->b);
    default: return f->type == nat_t() && is_first_order(f->a);
    }
}

bool has_heo(const FormulaP& f)
{
    switch (f->kind) {
    case FormulaKind::Eq: return has_heo(f->lhs) || has_heo(f->rhs);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: return has_heo(f->a) || has_heo(f->b);
    default: return has_heo(f->a);
    }
}

size_t node_count(const FormulaP& f)
{
    if (f->kind == FormulaKind::Eq) return 1;
    if (f->is_quant()) return 1 + node_count(f->a);
    return 1 + node_count(f->a) + node_count(f->b);
}

namespace {
FormulaP rename_rec(const FormulaP& f, std::vector<std::string>& used)
{
    switch (f->kind) {
    case FormulaKind::Eq: return f;
    case FormulaKind::And: {
        FormulaP a = rename_rec(f->a, used);
        return fm::conj(a, rename_rec(f->b, used));
    }
    case FormulaKind::Or: {
        FormulaP a = rename_rec(f->a, used);
        return fm::disj(a, rename_rec(f->b, used));
    }
    case FormulaKind::Imp: {
        FormulaP a = rename_rec(f->a, used);
        return fm::imp(a, rename_rec(f->b, used));
    }
    default: {
        std::string x = fresh_name(f->var, used);
        used.push_back(x);
        FormulaP body = x == f->var ? f->a : substitute(f->a, f->var, tm::var(x, f->type));
        body = rename_rec(body, used);
        return f->kind == FormulaKind::Exists ? fm::exists(x, f->type, body) : fm::forall(x, f->type, body);
    }
    }
}

int table_rec(const FormulaP& f, const VarList& vars, std::vector<SubformulaEntry>& out)
{
    int idx = (int)out.size();
    out.push_back({f, vars, -1, -1});
    if (f->is_binary()) {
        int c0 = table_rec(f->a, vars, out);
        int c1 = table_rec(f->b, vars, out);
        out[idx].child0 = c0;
        out[idx].child1 = c1;
    } else if (f->is_quant()) {
        VarList inner = vars;
        inner.emplace_back(f->var, f->type);
        int c0 = table_rec(f->a, inner, out);
        out[idx].child0 = c0;
    }
    return idx;
}
}  // namespace

FormulaP rename_apart(const FormulaP& f)
{
    std::vector<std::string> used = names(free_vars(f));
    return rename_rec(f, used);
}

FormulaP universal_closure(const FormulaP& f, const VarList& vars)
{
    FormulaP g = f;
    for (size_t i = vars.size(); i-- > 0;) g = fm::forall(vars[i].first, vars[i].second, g);
    return g;
}

std::vector<SubformulaEntry> subformula_table(const FormulaP& f)
{
    if (!is_first_order(f)) throw NotFirstOrder("subformula table needs a first-order formula: " + show(f));
    FormulaP g = rename_apart(f);
    std::vector<SubformulaEntry> out;
    table_rec(g, free_vars(g), out);
    return out;
}

}  // namespace ehaw
