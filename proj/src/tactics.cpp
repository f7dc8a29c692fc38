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

#include "ehaw/tactics.hpp"

#include <stdexcept>

namespace ehaw::tactics {

namespace {

bool is_succ_app(const TermP& t) { return t->kind == TermKind::App && t->args[0]->kind == TermKind::Succ; }

bool match(const TermP& pat, const TermP& t, std::map<std::string, TermP>& sub)
{
    if (pat->kind == TermKind::Var) {
        auto [it, fresh] = sub.emplace(pat->name, t);
        return fresh || term_equal(it->second, t);
    }
    if (pat->kind != t->kind || pat->args.size() != t->args.size()) return false;
    if (pat->kind == TermKind::PrimFn && pat->prim != t->prim) return false;
    for (size_t i = 0; i < pat->args.size(); ++i)
        if (!match(pat->args[i], t->args[i], sub)) return false;
    return true;
}

TermP subst_term(const TermP& t, const std::map<std::string, TermP>& sub)
{
    TermP r = t;
    for (auto& [x, s] : sub) r = ehaw::substitute(r, x, s);
    return r;
}

}  // namespace

bool is_numeral(const TermP& t)
{
    if (t->kind == TermKind::Zero) return true;
    return is_succ_app(t) && is_numeral(t->args[1]);
}

DerivationP Prover::step(int rule, FormulaP conclusion, std::vector<DerivationP> premises, TermP witness,
                         const std::string& var, int variant)
{
    auto d = std::make_shared<Derivation>();
    d->id = prefix_ + std::to_string(++steps_);
    d->rule = rule;
    d->conclusion = std::move(conclusion);
    d->premises = std::move(premises);
    d->witness = std::move(witness);
    d->var = var;
    d->variant = variant;
    return d;
}

std::string Prover::fresh_var() { return std::string(kReserved) + std::to_string(++vars_); }

DerivationP Prover::truth()
{
    if (!truth_) truth_ = step(14, fm::eq(nat_t(), tm::prim(Prim::Pred, {tm::zero()}), tm::zero()));
    return truth_;
}

DerivationP Prover::mp(const DerivationP& a, const DerivationP& imp)
{
    const FormulaP& f = imp->conclusion;
    if (f->kind != FormulaKind::Imp) throw std::logic_error("mp: not an implication: " + show(f));
    return step(2, f->b, {a, imp});
}

DerivationP Prover::weaken(const DerivationP& p, const FormulaP& h)
{
    const FormulaP& x = p->conclusion;
    DerivationP a = step(4, fm::imp(fm::conj(x, h), x), {}, nullptr, "", 0);
    DerivationP b = step(8, fm::imp(x, fm::imp(h, x)), {a});
    return mp(p, b);
}

DerivationP Prover::generalize(const DerivationP& p, const std::string& x, TypeP t)
{
    DerivationP w = weaken(p, truth()->conclusion);
    DerivationP g = step(10, fm::imp(truth()->conclusion, fm::forall(x, t, p->conclusion)), {w});
    return mp(truth(), g);
}

DerivationP Prover::instantiate(const DerivationP& p, const TermP& t)
{
    const FormulaP& q = p->conclusion;
    if (q->kind != FormulaKind::Forall) throw std::logic_error("instantiate: not universal: " + show(q));
    FormulaP inst = ehaw::substitute(q->a, q->var, t);
    return mp(p, step(12, fm::imp(q, inst), {}, t, "", 0));
}

DerivationP Prover::substitute(DerivationP p, const std::vector<std::pair<std::string, TermP>>& sigma)
{
    for (auto& [x, t] : sigma) {
        if (!occurs_free(x, p->conclusion)) continue;
        p = instantiate(generalize(p, x, t->sort), t);
    }
    return p;
}

DerivationP Prover::refl(const TermP& t)
{
    auto it = refl_.find(t->sort);
    if (it == refl_.end()) {
        std::string v = fresh_var();
        TermP x = tm::var(v, t->sort);
        it = refl_.emplace(t->sort, generalize(step(20, fm::eq(t->sort, x, x)), v, t->sort)).first;
    }
    return instantiate(it->second, t);
}

DerivationP Prover::equation(const TermP& lhs, const TermP& rhs) { return step(14, fm::eq(nat_t(), lhs, rhs)); }

Fact Prover::assume(const FormulaP& h) { return {h, step(1, fm::imp(h, h)), h}; }

Fact Prover::lift(const Fact& f, const FormulaP& hyp)
{
    if (!hyp || f.hyp == hyp) return f;
    if (f.hyp) throw std::logic_error("lift: facts under different hypotheses");
    return {hyp, weaken(f.d, hyp), f.goal};
}

Fact Prover::conj(Fact a, Fact b)
{
    FormulaP h = a.hyp ? a.hyp : b.hyp;
    a = lift(a, h);
    b = lift(b, h);
    FormulaP g = fm::conj(a.goal, b.goal);
    if (h) return {h, step(6, fm::imp(h, g), {a.d, b.d}), g};
    DerivationP wa = weaken(a.d, truth()->conclusion), wb = weaken(b.d, truth()->conclusion);
    return fact(mp(truth(), step(6, fm::imp(truth()->conclusion, g), {wa, wb})));
}

Fact Prover::mp(Fact a, Fact imp)
{
    FormulaP h = a.hyp ? a.hyp : imp.hyp;
    a = lift(a, h);
    imp = lift(imp, h);
    if (imp.goal->kind != FormulaKind::Imp) throw std::logic_error("mp: not an implication: " + show(imp.goal));
    if (!h) return fact(mp(a.d, imp.d));
    Fact both = conj(imp, a);
    FormulaP ab = imp.goal;
    DerivationP id = step(1, fm::imp(ab, ab));
    DerivationP un = step(8, fm::imp(fm::conj(ab, ab->a), ab->b), {id});
    return {h, step(3, fm::imp(h, ab->b), {both.d, un}), ab->b};
}

Fact Prover::apply(const Fact& a, const DerivationP& imp)
{
    const FormulaP& f = imp->conclusion;
    if (!a.hyp) return fact(mp(a.d, imp));
    return {a.hyp, step(3, fm::imp(a.hyp, f->b), {a.d, imp}), f->b};
}

Fact Prover::rewrite(Fact eq, Fact target, const FormulaP& pattern, const std::string& hole)
{
    if (eq.goal->kind != FormulaKind::Eq) throw std::logic_error("rewrite: not an equation");
    TermP s = eq.goal->lhs, t = eq.goal->rhs;
    TypeP ty = eq.goal->type;
    std::string p = fresh_var(), q = fresh_var();
    TermP pv = tm::var(p, ty), qv = tm::var(q, ty);
    FormulaP law = fm::imp(fm::conj(fm::eq(ty, pv, qv), ehaw::substitute(pattern, hole, pv)),
                           ehaw::substitute(pattern, hole, qv));
    DerivationP inst = substitute(step(22, law), {{p, s}, {q, t}});
    return apply(conj(eq, target), inst);
}

Fact Prover::sym(const Fact& eq)
{
    TermP s = eq.goal->lhs;
    std::string h = fresh_var();
    FormulaP pattern = fm::eq(eq.goal->type, tm::var(h, s->sort), s);
    return rewrite(eq, fact(refl(s)), pattern, h);
}

Fact Prover::trans(Fact ab, Fact bc)
{
    TermP a = ab.goal->lhs;
    std::string h = fresh_var();
    FormulaP pattern = fm::eq(ab.goal->type, a, tm::var(h, a->sort));
    return rewrite(bc, ab, pattern, h);
}

Fact Prover::chain(const std::vector<Fact>& eqs)
{
    if (eqs.empty()) throw std::logic_error("chain: no equations");
    Fact acc = eqs[0];
    for (size_t i = 1; i < eqs.size(); ++i) acc = trans(acc, eqs[i]);
    return acc;
}

Fact Prover::cong(const Fact& eq, const TermP& ctx, const std::string& hole)
{
    TermP s = eq.goal->lhs;
    TermP cs = ehaw::substitute(ctx, hole, s);
    FormulaP pattern = fm::eq(cs->sort, cs, ctx);
    return rewrite(eq, fact(refl(cs)), pattern, hole);
}

DerivationP Prover::induction(const FormulaP& theta, const std::string& v, const DerivationP& base, const Fact& st)
{
    TermP x = tm::var(v, nat_t());
    FormulaP step_f = fm::imp(theta, ehaw::substitute(theta, v, tm::S(x)));
    if (!st.hyp || !alpha_equal(st.hyp, theta)) throw std::logic_error("induction: step is not under the hypothesis");
    if (!alpha_equal(st.d->conclusion, step_f)) throw std::logic_error("induction: step proves " + show(st.d->conclusion));
    return step(19, theta, {base, st.d}, nullptr, v);
}

std::pair<TermP, Fact> Prover::evaluate(const TermP& t)
{
    if (is_numeral(t)) return {t, fact(refl(t))};
    if (is_succ_app(t)) {
        auto [n, p] = evaluate(t->args[1]);
        std::string h = fresh_var();
        return {tm::S(n), cong(p, tm::S(tm::var(h, nat_t())), h)};
    }
    if (t->kind != TermKind::PrimFn) throw std::invalid_argument("evaluate: not a closed first-order term: " + show(t));
    std::vector<Fact> steps;
    std::vector<TermP> args = t->args;
    for (size_t i = 0; i < args.size(); ++i) {
        if (is_numeral(args[i])) continue;
        auto [n, p] = evaluate(args[i]);
        std::string h = fresh_var();
        std::vector<TermP> ctx = args;
        ctx[i] = tm::var(h, nat_t());
        steps.push_back(cong(p, tm::prim(t->prim, ctx), h));
        args[i] = n;
    }
    TermP cur = tm::prim(t->prim, args);
    TermP rhs;
    for (auto& e : defining_equations()) {
        std::map<std::string, TermP> sub;
        if (match(e->lhs, cur, sub)) {
            rhs = subst_term(e->rhs, sub);
            break;
        }
    }
    if (!rhs) throw std::logic_error("evaluate: no defining equation for " + show(cur));
    steps.push_back(fact(equation(cur, rhs)));
    auto [v, p] = evaluate(rhs);
    steps.push_back(p);
    return {v, chain(steps)};
}

}  // namespace ehaw::tactics
