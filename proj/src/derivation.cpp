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

#include "ehaw/derivation.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ehaw {

DerivationP make_step(const std::string& id, int rule, FormulaP conclusion, std::vector<DerivationP> premises)
{
    auto d = std::make_shared<Derivation>();
    d->id = id;
    d->rule = rule;
    d->conclusion = std::move(conclusion);
    d->premises = std::move(premises);
    return d;
}

DerivationP with_witness(DerivationP d, TermP witness)
{
    auto c = std::make_shared<Derivation>(*d);
    c->witness = std::move(witness);
    return c;
}

DerivationP with_var(DerivationP d, const std::string& var)
{
    auto c = std::make_shared<Derivation>(*d);
    c->var = var;
    return c;
}

DerivationP with_variant(DerivationP d, int variant)
{
    auto c = std::make_shared<Derivation>(*d);
    c->variant = variant;
    return c;
}

TermP closed_default_term(TypeP t)
{
    switch (t->kind) {
    case TypeKind::Nat: return tm::zero();
    case TypeKind::Prod:
        return tm::app(tm::D(t->left, t->right), {closed_default_term(t->left), closed_default_term(t->right)});
    case TypeKind::Arrow: return tm::app(tm::K(t->right, t->left), closed_default_term(t->right));
    }
    return tm::zero();
}

const std::vector<FormulaP>& defining_equations()
{
    static const std::vector<FormulaP> eqs = [] {
        const char* src[] = {
            "succ(x) =N S(x)",
            "pred(0) =N 0",
            "pred(S(x)) =N x",
            "add(x,0) =N x",
            "add(x,S(y)) =N S(add(x,y))",
            "mul(x,0) =N 0",
            "mul(x,S(y)) =N add(mul(x,y),x)",
            "sub(x,0) =N x",
            "sub(x,S(y)) =N pred(sub(x,y))",
            "eq(x,y) =N nsg(add(sub(x,y),sub(y,x)))",
            "max(x,y) =N add(x,sub(y,x))",
            "lt(x,y) =N sg(sub(y,x))",
            "sg(0) =N 0",
            "sg(S(x)) =N S(0)",
            "nsg(0) =N S(0)",
            "nsg(S(x)) =N 0",
        };
        std::vector<FormulaP> out;
        for (const char* s : src) out.push_back(parse_formula(s));
        return out;
    }();
    return eqs;
}

namespace {

bool is_var(const TermP& t) { return t->kind == TermKind::Var; }

bool match_fo(const TermP& pat, const TermP& t, std::map<std::string, TermP>& sub)
{
    if (pat->kind == TermKind::Var) {
        if (!is_first_order(t)) return false;
        auto it = sub.find(pat->name);
        if (it == sub.end()) {
            sub.emplace(pat->name, t);
            return true;
        }
        return term_equal(it->second, t);
    }
    if (pat->kind != t->kind || pat->prim != t->prim || pat->args.size() != t->args.size()) return false;
    for (size_t i = 0; i < pat->args.size(); ++i)
        if (!match_fo(pat->args[i], t->args[i], sub)) return false;
    return true;
}

// First term in target sitting where phi has a free occurrence of x.
using Binds = std::vector<std::pair<std::string, std::string>>;

bool shadowed(const Binds& b, const std::string& x)
{
    return std::any_of(b.begin(), b.end(), [&](auto& p) { return p.first == x; });
}

TermP find_term_at(const TermP& p, const TermP& t, const std::string& x, const Binds& b)
{
    if (p->kind == TermKind::Var) return p->name == x && !shadowed(b, x) ? t : nullptr;
    if (p->kind != t->kind || p->args.size() != t->args.size()) return nullptr;
    for (size_t i = 0; i < p->args.size(); ++i)
        if (auto r = find_term_at(p->args[i], t->args[i], x, b)) return r;
    return nullptr;
}

TermP find_instance(const FormulaP& phi, const FormulaP& target, const std::string& x, Binds& b)
{
    if (phi->kind != target->kind) return nullptr;
    switch (phi->kind) {
    case FormulaKind::Eq: {
        if (auto r = find_term_at(phi->lhs, target->lhs, x, b)) return r;
        return find_term_at(phi->rhs, target->rhs, x, b);
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
        if (auto r = find_instance(phi->a, target->a, x, b)) return r;
        return find_instance(phi->b, target->b, x, b);
    default: {
        b.emplace_back(phi->var, target->var);
        TermP r = find_instance(phi->a, target->a, x, b);
        b.pop_back();
        return r;
    }
    }
}

int bound_index(const Binds& b, const std::string& x, bool left)
{
    for (size_t k = b.size(); k-- > 0;)
        if ((left ? b[k].first : b[k].second) == x) return (int)k;
    return -1;
}

// t1 is a position of phi(x), t2 the same position of phi(y).
bool leibniz_term(const TermP& t1, const TermP& t2, const std::string& x, const std::string& y, const Binds& b)
{
    if (t1->kind != t2->kind || t1->sort != t2->sort) return false;
    if (t1->kind == TermKind::Var) {
        int i = bound_index(b, t1->name, true), j = bound_index(b, t2->name, false);
        if (i >= 0 || j >= 0) return i == j;
        return t1->name == t2->name || (t1->name == x && t2->name == y);
    }
    if (t1->kind == TermKind::Heo) return t1->heo == t2->heo;
    if (t1->prim != t2->prim || t1->tparams != t2->tparams || t1->args.size() != t2->args.size()) return false;
    for (size_t k = 0; k < t1->args.size(); ++k)
        if (!leibniz_term(t1->args[k], t2->args[k], x, y, b)) return false;
    return true;
}

bool leibniz(const FormulaP& f1, const FormulaP& f2, const std::string& x, const std::string& y, Binds& b)
{
    if (f1->kind != f2->kind || f1->type != f2->type) return false;
    switch (f1->kind) {
    case FormulaKind::Eq:
        return leibniz_term(f1->lhs, f2->lhs, x, y, b) && leibniz_term(f1->rhs, f2->rhs, x, y, b);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: return leibniz(f1->a, f2->a, x, y, b) && leibniz(f1->b, f2->b, x, y, b);
    default: {
        b.emplace_back(f1->var, f2->var);
        bool r = leibniz(f1->a, f2->a, x, y, b);
        b.pop_back();
        return r;
    }
    }
}

std::vector<std::string> names_of(const VarList& vs)
{
    std::vector<std::string> r;
    for (auto& v : vs) r.push_back(v.first);
    return r;
}

class Checker {
  public:
    CheckedP run(const DerivationP& d)
    {
        auto it = memo_.find(d.get());
        if (it != memo_.end()) return it->second;
        if (active_.count(d.get())) throw RuleShapeError(d->id, "cyclic derivation");
        active_.insert(d.get());
        std::vector<CheckedP> prem;
        for (auto& p : d->premises) prem.push_back(run(p));
        auto node = std::make_shared<CheckedNode>();
        node->node = d.get();
        node->rule = d->rule;
        node->premises = prem;
        try {
            node->vars = free_vars(d->conclusion);
        } catch (const SortError& e) {
            throw RuleShapeError(d->id, e.what());
        }
        check_node(*d, *node);
        active_.erase(d.get());
        memo_.emplace(d.get(), node);
        return node;
    }

  private:
    [[noreturn]] static void shape(const Derivation& d, const std::string& msg) { throw RuleShapeError(d.id, msg); }
    [[noreturn]] static void side(const Derivation& d, const std::string& msg) { throw SideConditionError(d.id, msg); }

    static void want_premises(const Derivation& d, size_t n)
    {
        if (d.premises.size() != n)
            shape(d, "rule " + std::to_string(d.rule) + " takes " + std::to_string(n) + " premise(s), got " +
                         std::to_string(d.premises.size()));
    }
    static const FormulaP& want(const Derivation& d, const FormulaP& f, FormulaKind k, const char* what)
    {
        if (f->kind != k) shape(d, std::string("expected ") + what + " in " + show(f));
        return f;
    }
    static void same(const Derivation& d, const FormulaP& a, const FormulaP& b, const char* what)
    {
        if (!alpha_equal(a, b)) shape(d, std::string(what) + ": " + show(a) + " does not match " + show(b));
    }
    static void variable(const Derivation& d, const TermP& t, TypeP type = nullptr)
    {
        if (!is_var(t)) shape(d, show(t) + " is not a variable");
        if (type && t->sort != type) shape(d, t->name + " must have sort " + show(type));
    }
    static void distinct(const Derivation& d, const std::vector<TermP>& vs)
    {
        std::set<std::string> seen;
        for (auto& v : vs)
            if (!seen.insert(v->name).second) shape(d, "variables must be distinct");
    }

    void check_node(const Derivation& d, CheckedNode& n)
    {
        const FormulaP& C = d.conclusion;
        auto P = [&](size_t i) { return d.premises[i]->conclusion; };
        switch (d.rule) {
        case 1:
            want_premises(d, 0);
            want(d, C, FormulaKind::Imp, "an implication");
            same(d, C->a, C->b, "rule 1");
            return;
        case 2:
            want_premises(d, 2);
            want(d, P(1), FormulaKind::Imp, "an implication as second premise");
            same(d, P(0), P(1)->a, "modus ponens minor premise");
            same(d, C, P(1)->b, "modus ponens conclusion");
            return;
        case 3:
            want_premises(d, 2);
            want(d, C, FormulaKind::Imp, "an implication");
            want(d, P(0), FormulaKind::Imp, "an implication");
            want(d, P(1), FormulaKind::Imp, "an implication");
            same(d, P(0)->b, P(1)->a, "syllogism middle formula");
            same(d, C->a, P(0)->a, "syllogism antecedent");
            same(d, C->b, P(1)->b, "syllogism consequent");
            return;
        case 4: {
            want_premises(d, 0);
            want(d, C, FormulaKind::Imp, "an implication");
            want(d, C->a, FormulaKind::And, "a conjunction");
            bool l = alpha_equal(C->a->a, C->b), r = alpha_equal(C->a->b, C->b);
            n.variant = pick_variant(d, l, r);
            return;
        }
        case 5: {
            want_premises(d, 0);
            want(d, C, FormulaKind::Imp, "an implication");
            want(d, C->b, FormulaKind::Or, "a disjunction");
            bool l = alpha_equal(C->b->a, C->a), r = alpha_equal(C->b->b, C->a);
            n.variant = pick_variant(d, l, r);
            return;
        }
        case 6:
            want_premises(d, 2);
            want(d, C, FormulaKind::Imp, "an implication");
            want(d, C->b, FormulaKind::And, "a conjunction");
            want(d, P(0), FormulaKind::Imp, "an implication");
            want(d, P(1), FormulaKind::Imp, "an implication");
            same(d, P(0)->a, C->a, "first premise antecedent");
            same(d, P(1)->a, C->a, "second premise antecedent");
            same(d, P(0)->b, C->b->a, "left conjunct");
            same(d, P(1)->b, C->b->b, "right conjunct");
            return;
        case 7:
            want_premises(d, 2);
            want(d, C, FormulaKind::Imp, "an implication");
            want(d, C->a, FormulaKind::Or, "a disjunction");
            want(d, P(0), FormulaKind::Imp, "an implication");
            want(d, P(1), FormulaKind::Imp, "an implication");
            same(d, P(0)->a, C->a->a, "left disjunct");
            same(d, P(1)->a, C->a->b, "right disjunct");
            same(d, P(0)->b, C->b, "first premise consequent");
            same(d, P(1)->b, C->b, "second premise consequent");
            return;
        case 8: {
            want_premises(d, 1);
            want(d, C, FormulaKind::Imp, "an implication");
            want(d, P(0), FormulaKind::Imp, "an implication");
            auto curry = [&](const FormulaP& conj, const FormulaP& cur) {
                return conj->a->kind == FormulaKind::And && cur->b->kind == FormulaKind::Imp &&
                       alpha_equal(conj->a->a, cur->a) && alpha_equal(conj->a->b, cur->b->a) &&
                       alpha_equal(conj->b, cur->b->b);
            };
            if (curry(P(0), C)) n.variant = 0;
            else if (curry(C, P(0))) n.variant = 1;
            else shape(d, "rule 8 needs (phi & psi) -> chi against phi -> (psi -> chi)");
            return;
        }
        case 9:
            want_premises(d, 0);
            want(d, C, FormulaKind::Imp, "an implication");
            if (!is_falsum(C->a)) shape(d, "antecedent must be 0 =N S(0)");
            return;
        case 10: {
            want_premises(d, 1);
            want(d, C, FormulaKind::Imp, "an implication");
            want(d, C->b, FormulaKind::Forall, "a universal consequent");
            want(d, P(0), FormulaKind::Imp, "an implication");
            same(d, P(0)->a, C->a, "antecedent");
            same(d, P(0)->b, C->b->a, "quantified formula");
            if (occurs_free(C->b->var, C->a)) side(d, C->b->var + " occurs free in " + show(C->a));
            n.var = C->b->var;
            n.var_type = C->b->type;
            return;
        }
        case 11: {
            want_premises(d, 1);
            want(d, C, FormulaKind::Imp, "an implication");
            want(d, C->a, FormulaKind::Exists, "an existential antecedent");
            want(d, P(0), FormulaKind::Imp, "an implication");
            same(d, P(0)->a, C->a->a, "quantified formula");
            same(d, P(0)->b, C->b, "consequent");
            if (occurs_free(C->a->var, C->b)) side(d, C->a->var + " occurs free in " + show(C->b));
            n.var = C->a->var;
            n.var_type = C->a->type;
            return;
        }
        case 12: check_instance(d, n); return;
        case 13: {
            want_premises(d, 0);
            want(d, C, FormulaKind::Imp, "an implication");
            if (is_falsum(C->b) && C->a->kind == FormulaKind::Eq && C->a->type == nat_t() &&
                C->a->lhs->kind == TermKind::Zero && C->a->rhs->kind == TermKind::App &&
                C->a->rhs->args[0]->kind == TermKind::Succ) {
                variable(d, C->a->rhs->args[1], nat_t());
                n.variant = 0;
                return;
            }
            auto succ_of = [](const TermP& t) {
                return t->kind == TermKind::App && t->args[0]->kind == TermKind::Succ ? t->args[1] : nullptr;
            };
            want(d, C->a, FormulaKind::Eq, "an equation");
            want(d, C->b, FormulaKind::Eq, "an equation");
            TermP x = succ_of(C->a->lhs), y = succ_of(C->a->rhs);
            if (!x || !y || C->a->type != nat_t()) shape(d, "rule 13 needs S(x) =N S(y) -> x =N y");
            variable(d, x, nat_t());
            variable(d, y, nat_t());
            if (!term_equal(C->b->lhs, x) || !term_equal(C->b->rhs, y)) shape(d, "consequent must be x =N y");
            n.variant = 1;
            return;
        }
        case 14: {
            want_premises(d, 0);
            want(d, C, FormulaKind::Eq, "an equation");
            const auto& eqs = defining_equations();
            for (size_t i = 0; i < eqs.size(); ++i) {
                std::map<std::string, TermP> sub;
                if (C->type == nat_t() && match_fo(eqs[i]->lhs, C->lhs, sub) && match_fo(eqs[i]->rhs, C->rhs, sub)) {
                    n.variant = (int)i;
                    return;
                }
            }
            shape(d, show(C) + " is not an instance of a defining equation");
        }
        case 15: check_combinator(d, n); return;
        case 16: check_recursor(d, n); return;
        case 17: {
            want_premises(d, 0);
            want(d, C, FormulaKind::Eq, "an equation");
            const TermP& l = C->lhs;
            if (l->kind != TermKind::App || (l->args[0]->kind != TermKind::D0 && l->args[0]->kind != TermKind::D1))
                shape(d, "rule 17 needs D0/D1 applied to a pair");
            const TermP& pr = l->args[1];
            if (pr->kind != TermKind::App || pr->args[0]->kind != TermKind::App ||
                pr->args[0]->args[0]->kind != TermKind::D || pr->args[0]->args[0]->tparams != l->args[0]->tparams)
                shape(d, "rule 17 needs D0/D1 applied to D[A,B] x y");
            TermP x = pr->args[0]->args[1], y = pr->args[1];
            variable(d, x);
            variable(d, y);
            distinct(d, {x, y});
            n.variant = l->args[0]->kind == TermKind::D0 ? 0 : 1;
            if (!term_equal(C->rhs, n.variant == 0 ? x : y)) shape(d, "right-hand side must be the projected variable");
            return;
        }
        case 18: {
            want_premises(d, 0);
            want(d, C, FormulaKind::Eq, "an equation");
            variable(d, C->lhs);
            if (C->type->kind != TypeKind::Prod) shape(d, "rule 18 is stated at a product type");
            TypeP A = C->type->left, B = C->type->right;
            TermP expect = tm::app(tm::D(A, B), {tm::app(tm::D0(A, B), C->lhs), tm::app(tm::D1(A, B), C->lhs)});
            if (!term_equal(expect, C->rhs)) shape(d, "rule 18 needs x = D (D0 x) (D1 x)");
            return;
        }
        case 19: check_induction(d, n); return;
        case 20:
            want_premises(d, 0);
            want(d, C, FormulaKind::Eq, "an equation");
            variable(d, C->lhs);
            if (!term_equal(C->lhs, C->rhs)) shape(d, "rule 20 needs x = x");
            return;
        case 21: {
            want_premises(d, 0);
            want(d, C, FormulaKind::Or, "a disjunction");
            want(d, C->a, FormulaKind::Eq, "an equation");
            if (C->a->type != nat_t()) shape(d, "rule 21 is stated at type N");
            variable(d, C->a->lhs, nat_t());
            variable(d, C->a->rhs, nat_t());
            if (C->b->kind != FormulaKind::Imp || !is_falsum(C->b->b) || !syntactic_equal(C->b->a, C->a))
                shape(d, "rule 21 needs x = y | ~(x = y)");
            return;
        }
        case 22: {
            want_premises(d, 0);
            want(d, C, FormulaKind::Imp, "an implication");
            want(d, C->a, FormulaKind::And, "a conjunction");
            const FormulaP& e = want(d, C->a->a, FormulaKind::Eq, "an equation");
            variable(d, e->lhs);
            variable(d, e->rhs);
            Binds b;
            if (!leibniz(C->a->b, C->b, e->lhs->name, e->rhs->name, b))
                shape(d, show(C->b) + " is not obtained from " + show(C->a->b) + " by replacing " + e->lhs->name +
                             " with " + e->rhs->name);
            return;
        }
        case 23: {
            want_premises(d, 0);
            want(d, C, FormulaKind::Imp, "an implication");
            const FormulaP& all = want(d, C->a, FormulaKind::Forall, "a universal antecedent");
            const FormulaP& e = want(d, C->b, FormulaKind::Eq, "an equation");
            if (e->type->kind != TypeKind::Arrow || all->type != e->type->left)
                shape(d, "rule 23 needs forall z:B. x z = y z -> x =B->C y");
            variable(d, e->lhs);
            variable(d, e->rhs);
            TermP z = tm::var(all->var, all->type);
            if (all->var == e->lhs->name || all->var == e->rhs->name) side(d, "bound variable clashes with x or y");
            FormulaP expect = fm::eq(e->type->right, tm::app(e->lhs, z), tm::app(e->rhs, z));
            if (!syntactic_equal(expect, all->a)) shape(d, "rule 23 needs forall z:B. x z = y z -> x =B->C y");
            return;
        }
        case 24: check_choice(d, n); return;
        case 25: check_dependent_choice(d, n); return;
        default: shape(d, "unknown rule " + std::to_string(d.rule));
        }
    }

    static int pick_variant(const Derivation& d, bool left, bool right)
    {
        if (d.variant == 0 || d.variant == 1) {
            if ((d.variant == 0 && !left) || (d.variant == 1 && !right)) shape(d, "requested variant does not match");
            return d.variant;
        }
        if (left) return 0;
        if (right) return 1;
        shape(d, "rule " + std::to_string(d.rule) + " instance does not match either schema");
    }

    void check_instance(const Derivation& d, CheckedNode& n)
    {
        want_premises(d, 0);
        const FormulaP& C = d.conclusion;
        want(d, C, FormulaKind::Imp, "an implication");
        FormulaP quant, inst;
        if (d.variant != 1 && C->a->kind == FormulaKind::Forall) {
            n.variant = 0;
            quant = C->a;
            inst = C->b;
        } else if (d.variant != 0 && C->b->kind == FormulaKind::Exists) {
            n.variant = 1;
            quant = C->b;
            inst = C->a;
        } else {
            shape(d, "rule 12 needs forall x. phi -> phi(t) or phi(t) -> exists x. phi");
        }
        const std::string& x = quant->var;
        TermP t = d.witness;
        if (!t) {
            Binds b;
            t = find_instance(quant->a, inst, x, b);
            if (!t) {
                if (occurs_free(x, quant->a)) shape(d, "cannot infer the instantiated term");
                t = closed_default_term(quant->type);
            }
        }
        if (t->sort != quant->type) shape(d, "term " + show(t) + " does not have sort " + show(quant->type));
        if (!free_for(t, x, quant->a)) side(d, show(t) + " is not free for " + x + " in " + show(quant->a));
        same(d, substitute(quant->a, x, t), inst, "instance");
        n.var = x;
        n.var_type = quant->type;
        n.witness = t;
    }

    void check_combinator(const Derivation& d, CheckedNode& n)
    {
        want_premises(d, 0);
        const FormulaP& C = d.conclusion;
        want(d, C, FormulaKind::Eq, "an equation");
        const TermP& l = C->lhs;
        auto spine = [](TermP t) {
            std::vector<TermP> args;
            while (t->kind == TermKind::App && t->args[0]->kind != TermKind::Succ) {
                args.insert(args.begin(), t->args[1]);
                t = t->args[0];
            }
            return std::make_pair(t, args);
        };
        auto [head, args] = spine(l);
        if (head->kind == TermKind::K && args.size() == 2) {
            for (auto& a : args) variable(d, a);
            distinct(d, args);
            if (!term_equal(C->rhs, args[0])) shape(d, "rule 15 needs K x y = x");
            n.variant = 0;
            return;
        }
        if (head->kind == TermKind::Sig && args.size() == 3) {
            for (auto& a : args) variable(d, a);
            distinct(d, args);
            TermP expect = tm::app(tm::app(args[0], args[2]), tm::app(args[1], args[2]));
            if (!term_equal(C->rhs, expect)) shape(d, "rule 15 needs Sig x y z = x z (y z)");
            n.variant = 1;
            return;
        }
        shape(d, "rule 15 needs K x y = x or Sig x y z = x z (y z)");
    }

    void check_recursor(const Derivation& d, CheckedNode& n)
    {
        want_premises(d, 0);
        const FormulaP& C = d.conclusion;
        want(d, C, FormulaKind::Eq, "an equation");
        const TermP& l = C->lhs;
        if (l->kind != TermKind::App || l->args[0]->kind != TermKind::App || l->args[0]->args[0]->kind != TermKind::App ||
            l->args[0]->args[0]->args[0]->kind != TermKind::Rec)
            shape(d, "rule 16 needs R x y n on the left");
        TermP R = l->args[0]->args[0]->args[0];
        TermP x = l->args[0]->args[0]->args[1], y = l->args[0]->args[1], k = l->args[1];
        variable(d, x);
        variable(d, y);
        if (k->kind == TermKind::Zero) {
            distinct(d, {x, y});
            if (!term_equal(C->rhs, x)) shape(d, "rule 16 needs R x y 0 = x");
            n.variant = 0;
            return;
        }
        if (k->kind != TermKind::App || k->args[0]->kind != TermKind::Succ) shape(d, "rule 16 needs 0 or S(z)");
        TermP z = k->args[1];
        variable(d, z, nat_t());
        distinct(d, {x, y, z});
        TermP expect = tm::app(y, {tm::app(R, {x, y, z}), z});
        if (!term_equal(C->rhs, expect)) shape(d, "rule 16 needs R x y S(z) = y (R x y z) z");
        n.variant = 1;
    }

    void check_induction(const Derivation& d, CheckedNode& n)
    {
        want_premises(d, 2);
        const FormulaP& C = d.conclusion;
        FormulaP base = d.premises[0]->conclusion, step = d.premises[1]->conclusion;
        auto fits = [&](const std::string& x) {
            TermP v = tm::var(x, nat_t());
            return step->kind == FormulaKind::Imp && alpha_equal(substitute(C, x, tm::zero()), base) &&
                   alpha_equal(step->a, C) && alpha_equal(step->b, substitute(C, x, tm::S(v)));
        };
        std::vector<std::string> candidates;
        if (!d.var.empty()) {
            candidates.push_back(d.var);
        } else {
            for (auto& [name, type] : n.vars)
                if (type == nat_t()) candidates.push_back(name);
        }
        for (auto& x : candidates) {
            for (auto& [name, type] : n.vars)
                if (name == x && type != nat_t()) side(d, "induction variable " + x + " is not of type N");
            if (fits(x)) {
                n.var = x;
                n.var_type = nat_t();
                return;
            }
        }
        if (d.var.empty()) {
            std::string x = fresh_name("x", names_of(n.vars));
            if (fits(x)) {
                n.var = x;
                n.var_type = nat_t();
                return;
            }
        }
        shape(d, "premises are not phi(0) and phi(x) -> phi(S(x)) for any variable x");
    }

    void check_choice(const Derivation& d, CheckedNode& n)
    {
        want_premises(d, 0);
        const FormulaP& C = d.conclusion;
        want(d, C, FormulaKind::Imp, "an implication");
        const FormulaP& all = want(d, C->a, FormulaKind::Forall, "forall x. exists y. phi");
        const FormulaP& ex = want(d, all->a, FormulaKind::Exists, "forall x. exists y. phi");
        const FormulaP& phi = ex->a;
        TypeP A = all->type, B = ex->type;
        std::vector<std::string> avoid = names_of(free_vars(phi));
        avoid.push_back(all->var);
        avoid.push_back(ex->var);
        std::string X = fresh_name("x", avoid), Z = fresh_name("z", avoid);
        TermP xv = tm::var(X, A), zv = tm::var(Z, arrow_t(A, B));
        FormulaP body = substitute_many(phi, {{all->var, xv}, {ex->var, tm::app(zv, xv)}});
        FormulaP expect = fm::imp(C->a, fm::exists(Z, arrow_t(A, B), fm::forall(X, A, body)));
        same(d, C, expect, "choice instance");
        n.var = all->var;
        n.var_type = A;
    }

    void check_dependent_choice(const Derivation& d, CheckedNode& n)
    {
        want_premises(d, 0);
        const FormulaP& C = d.conclusion;
        const char* form = "forall x.[phi(x) -> exists y.(phi(y) & psi(x,y))] -> ...";
        want(d, C, FormulaKind::Imp, form);
        const FormulaP& all = want(d, C->a, FormulaKind::Forall, form);
        const FormulaP& imp = want(d, all->a, FormulaKind::Imp, form);
        const FormulaP& ex = want(d, imp->b, FormulaKind::Exists, form);
        const FormulaP& conj = want(d, ex->a, FormulaKind::And, form);
        if (ex->type != all->type) shape(d, "x and y must have the same type");
        TypeP A = all->type;
        const std::string &x = all->var, &y = ex->var;
        const FormulaP& phi = imp->a;
        const FormulaP& psi = conj->b;
        std::vector<std::string> avoid = names_of(free_vars(phi));
        for (auto& v : free_vars(psi)) avoid.push_back(v.first);
        avoid.push_back(x);
        avoid.push_back(y);
        std::string X = fresh_name("x", avoid), Y = fresh_name("y", avoid), Z = fresh_name("z", avoid),
                    V = fresh_name("v", avoid);
        TermP xv = tm::var(X, A), yv = tm::var(Y, A), zv = tm::var(Z, arrow_t(nat_t(), A)), vv = tm::var(V, nat_t());
        FormulaP prem = fm::forall(
            X, A,
            fm::imp(substitute(phi, x, xv),
                    fm::exists(Y, A, fm::conj(substitute(phi, x, yv), substitute_many(psi, {{x, xv}, {y, yv}})))));
        FormulaP concl = fm::forall(
            X, A,
            fm::imp(substitute(phi, x, xv),
                    fm::exists(Z, arrow_t(nat_t(), A),
                               fm::conj(fm::eq(A, tm::app(zv, tm::zero()), xv),
                                        fm::forall(V, nat_t(),
                                                   substitute_many(psi, {{x, tm::app(zv, vv)},
                                                                         {y, tm::app(zv, tm::S(vv))}}))))));
        same(d, C, fm::imp(prem, concl), "dependent choice instance");
        n.var = x;
        n.var_type = A;
    }

    std::unordered_map<const Derivation*, CheckedP> memo_;
    std::set<const Derivation*> active_;
};

}  // namespace

CheckedP check(const DerivationP& d)
{
    Checker c;
    return c.run(d);
}

VarList check_derivation(const DerivationP& d) { return check(d)->vars; }

size_t step_count(const DerivationP& d)
{
    std::set<const Derivation*> seen;
    std::function<void(const DerivationP&)> walk = [&](const DerivationP& n) {
        if (!seen.insert(n.get()).second) return;
        for (auto& p : n->premises) walk(p);
    };
    walk(d);
    return seen.size();
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Proof files:

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

}  // namespace

DerivationP parse_derivation(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    VarTypes types;
    std::map<std::string, DerivationP> steps;
    DerivationP last;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        try {
            if (starts_with(line, "vars:")) {
                for (auto& [name, type] : parse_var_list(trim(line.substr(5)))) types[name] = type;
                continue;
            }
            if (!starts_with(line, "step ")) throw ProofFileError("expected 'step' or 'vars:'", lineno);
            size_t turnstile = line.find("|-");
            if (turnstile == std::string::npos) throw ProofFileError("missing '|-'", lineno);
            std::string head = trim(line.substr(5, turnstile - 5));
            std::string formula = trim(line.substr(turnstile + 2));
            size_t colon = head.find(':');
            if (colon == std::string::npos) throw ProofFileError("missing ':' after the step id", lineno);
            std::string id = trim(head.substr(0, colon));
            if (id.empty() || steps.count(id)) throw ProofFileError("missing or duplicate step id '" + id + "'", lineno);
            std::string rest = trim(head.substr(colon + 1));
            if (!starts_with(rest, "rule ")) throw ProofFileError("expected 'rule <n>'", lineno);
            rest = trim(rest.substr(5));
            size_t p = rest.find("premises:"), w = rest.find("with:");
            std::string rule_s = trim(rest.substr(0, std::min(p, w)));
            auto d = std::make_shared<Derivation>();
            d->id = id;
            try {
                size_t used = 0;
                d->rule = std::stoi(rule_s, &used);
                if (used != rule_s.size()) throw std::invalid_argument("rule");
            } catch (const std::logic_error&) {
                throw ProofFileError("bad rule number '" + rule_s + "'", lineno);
            }
            if (p != std::string::npos) {
                std::string list = trim(rest.substr(p + 9, (w != std::string::npos && w > p ? w : rest.size()) - p - 9));
                for (auto& ref : split(list, ',')) {
                    auto it = steps.find(ref);
                    if (it == steps.end()) throw ProofFileError("unknown premise '" + ref + "'", lineno);
                    d->premises.push_back(it->second);
                }
            }
            if (w != std::string::npos) {
                std::string list = trim(rest.substr(w + 5, (p != std::string::npos && p > w ? p : rest.size()) - w - 5));
                for (auto& item : split(list, ';')) {
                    if (item.empty()) continue;
                    size_t eq = item.find('=');
                    if (eq == std::string::npos) throw ProofFileError("payload items are key=value", lineno);
                    std::string key = trim(item.substr(0, eq)), val = trim(item.substr(eq + 1));
                    if (key == "term") d->witness = parse_term(val, types);
                    else if (key == "var") d->var = val;
                    else if (key == "variant") d->variant = std::stoi(val);
                    else throw ProofFileError("unknown payload key '" + key + "'", lineno);
                }
            }
            d->conclusion = parse_formula(formula, types);
            steps[id] = d;
            last = d;
        } catch (const ProofFileError&) {
            throw;
        } catch (const std::exception& e) {
            throw ProofFileError(e.what(), lineno);
        }
    }
    if (!last) throw ProofFileError("no steps", lineno);
    return last;
}

DerivationP load_derivation(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_derivation(ss.str());
}

std::string print_derivation(const DerivationP& root)
{
    std::vector<const Derivation*> order;
    std::set<const Derivation*> seen;
    std::function<void(const Derivation*)> walk = [&](const Derivation* n) {
        if (!seen.insert(n).second) return;
        for (auto& p : n->premises) walk(p.get());
        order.push_back(n);
    };
    walk(root.get());

    std::map<std::string, TypeP> types;
    std::map<const Derivation*, std::string> ids;
    std::set<std::string> used;
    for (auto* n : order) {
        for (auto& [name, type] : free_vars(n->conclusion)) {
            auto [it, fresh] = types.emplace(name, type);
            if (!fresh && it->second != type)
                throw std::runtime_error("variable " + name + " is used at two types across steps");
        }
        std::string id = n->id.empty() ? "s" : n->id;
        std::vector<std::string> avoid(used.begin(), used.end());
        id = fresh_name(id, avoid);
        used.insert(id);
        ids[n] = id;
    }
    std::ostringstream out;
    VarList header;
    for (auto& [name, type] : types)
        if (type != nat_t()) header.emplace_back(name, type);
    if (!header.empty()) out << "vars: " << show(header) << "\n";
    for (auto* n : order) {
        out << "step " << ids[n] << ": rule " << n->rule;
        if (!n->premises.empty()) {
            out << " premises: ";
            for (size_t i = 0; i < n->premises.size(); ++i) out << (i ? "," : "") << ids[n->premises[i].get()];
        }
        std::vector<std::string> payload;
        if (n->witness) payload.push_back("term=" + show(n->witness));
        if (!n->var.empty()) payload.push_back("var=" + n->var);
        if (n->variant >= 0) payload.push_back("variant=" + std::to_string(n->variant));
        if (!payload.empty()) {
            out << " with: ";
            for (size_t i = 0; i < payload.size(); ++i) out << (i ? "; " : "") << payload[i];
        }
        out << " |- " << show(n->conclusion) << "\n";
    }
    return out.str();
}

}  // namespace ehaw
