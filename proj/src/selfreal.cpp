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

#include "ehaw/selfreal.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ehaw/codes.hpp"
#include "ehaw/lam.hpp"

namespace ehaw {

namespace {

// lt(x,t) =N S(0) with x not free in t.
bool bound_atom(const FormulaP& f, const std::string& x, TermP& t)
{
    if (f->kind != FormulaKind::Eq || f->type != nat_t()) return false;
    const TermP& l = f->lhs;
    if (l->kind != TermKind::PrimFn || l->prim != Prim::Lt) return false;
    if (l->args[0]->kind != TermKind::Var || l->args[0]->name != x) return false;
    if (occurs_free(x, l->args[1])) return false;
    if (!term_equal(f->rhs, tm::numeral(1))) return false;
    t = l->args[1];
    return true;
}

FormulaP leftmost_conjunct(FormulaP f)
{
    while (f->kind == FormulaKind::And) f = f->a;
    return f;
}

// Whether the quantifier is explicitly bounded, and its bound.
bool explicit_bound(const FormulaP& f, TermP& t)
{
    if (f->kind == FormulaKind::Forall && f->a->kind == FormulaKind::Imp)
        return bound_atom(leftmost_conjunct(f->a->a), f->var, t);
    if (f->kind == FormulaKind::Exists) return bound_atom(leftmost_conjunct(f->a), f->var, t);
    return false;
}

}  // namespace

Nat TruthOracle::term(const TermP& t, const std::map<std::string, Nat>& env) const
{
    switch (t->kind) {
    case TermKind::Var: {
        auto it = env.find(t->name);
        if (it == env.end()) throw std::invalid_argument("truth of a formula with free variable " + t->name);
        return it->second;
    }
    case TermKind::Zero: return 0;
    case TermKind::App:
        if (t->args[0]->kind == TermKind::Succ) return term(t->args[1], env) + 1;
        break;
    case TermKind::PrimFn: {
        std::vector<Nat> xs;
        for (auto& a : t->args) xs.push_back(term(a, env));
        return prim_eval(t->prim, xs);
    }
    default: break;
    }
    throw NotFirstOrder("not a first-order term: " + show(t));
}

Verdict TruthOracle::eval(const FormulaP& f, const std::map<std::string, Nat>& env)
{
    std::vector<std::pair<std::string, Nat>> key_env;
    for (auto& [x, t] : free_vars(f)) {
        auto it = env.find(x);
        if (it == env.end()) throw std::invalid_argument("truth of a formula with free variable " + x);
        key_env.emplace_back(x, it->second);
    }
    auto key = std::make_pair(f.get(), key_env);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Verdict r;
    switch (f->kind) {
    case FormulaKind::Eq:
        if (!is_first_order(f)) throw NotFirstOrder("not first-order: " + show(f));
        r = term(f->lhs, env) == term(f->rhs, env) ? Verdict::holds() : Verdict::fails(show(f));
        break;
    case FormulaKind::And: r = eval(f->a, env) && eval(f->b, env); break;
    case FormulaKind::Or: r = eval(f->a, env) || eval(f->b, env); break;
    case FormulaKind::Imp: r = implies(eval(f->a, env), eval(f->b, env)); break;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        if (f->type != nat_t()) throw NotFirstOrder("not first-order: " + show(f));
        bool all = f->kind == FormulaKind::Forall;
        TermP t;
        const FormulaP& body = f->a;
        uint64_t limit = q_ + 1;
        bool exact = false;
        if (explicit_bound(f, t)) {
            Nat b = term(t, env);
            if (b <= Nat(q_ + 1)) {
                limit = to_u64(b);
                exact = true;
            }
        }
        auto inner = env;
        bool unsure = false;
        r = Verdict::holds();
        bool decided = false;
        for (uint64_t m = 0; m < limit && !decided; ++m) {
            inner[f->var] = m;
            Verdict v = eval(body, inner);
            if (v.exhausted()) unsure = true;
            else if (all && v.failed()) r = Verdict::fails(f->var + "=" + std::to_string(m)), decided = true;
            else if (!all && v.ok()) r = Verdict::holds(), decided = true;
        }
        if (!decided) {
            if (unsure) r = Verdict::exhausted("bound");
            else if (!exact) r = Verdict::exhausted("bound");
            else r = all ? Verdict::holds() : Verdict::fails("no witness below bound");
        }
        break;
    }
    }
    pinned_.push_back(f);
    memo_.emplace(key, r);
    return r;
}

Verdict truth_eval(const FormulaP& phi, uint64_t q)
{
    if (!is_first_order(phi)) throw NotFirstOrder("not first-order: " + show(phi));
    if (!free_vars(phi).empty()) throw std::invalid_argument("truth_eval needs a sentence: " + show(phi));
    TruthOracle o(q);
    return o.eval(phi);
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// The condition set:

TDescription::TDescription(const FormulaP& phi, uint64_t q)
    : table_(subformula_table(phi)), oracle_(std::make_shared<TruthOracle>(q))
{
}

Nat TDescription::key(int j, const std::vector<Nat>& args) { return pair(Nat(j), tuple(args)); }

bool TDescription::decode_key(const Nat& key, int& j, std::vector<Nat>& args) const
{
    Nat jj = proj0(key), rest = proj1(key);
    if (jj >= Nat(table_.size())) return false;
    j = (int)to_u64(jj);
    FormulaKind kind = table_[j].formula->kind;
    if (kind != FormulaKind::Or && kind != FormulaKind::Exists) return false;
    size_t k = table_[j].vars.size();
    args.clear();
    if (k == 0) return rest == 0;
    for (size_t i = 0; i < k; ++i) args.push_back(component(rest, (unsigned)i, (unsigned)k));
    return true;
}

Verdict TDescription::truth(int j, const std::vector<Nat>& args) const
{
    std::map<std::string, Nat> env;
    const VarList& vs = table_[j].vars;
    for (size_t i = 0; i < vs.size() && i < args.size(); ++i) env[vs[i].first] = args[i];
    return oracle_->eval(table_[j].formula, env);
}

bool TDescription::entry_ok(const Nat& key, const Nat& value) const
{
    int j;
    std::vector<Nat> args;
    if (!decode_key(key, j, args)) return false;
    const SubformulaEntry& e = table_[j];
    Verdict v;
    if (e.formula->kind == FormulaKind::Or) {
        if (value > 1) return false;
        v = truth(value == 0 ? e.child0 : e.child1, args);
    } else {
        args.push_back(value);
        v = truth(e.child0, args);
    }
    if (v.exhausted())
        throw OracleInconclusive("truth of " + show(table_[j].formula) + " at key " + key.str() + " is undecided");
    return v.ok();
}

bool TDescription::contains(const Oracle& p) const
{
    for (auto& [k, v] : p.entries())
        if (!entry_ok(k, v)) return false;
    return true;
}

ConditionSet TDescription::condition_set() const
{
    ConditionSet cs;
    cs.name = "selfreal:" + show(formula());
    // Copies of the table and oracle keep the set valid after this description goes away.
    auto self = std::make_shared<TDescription>(*this);
    cs.entry = [self](const Nat& k, const Nat& v) { return self->entry_ok(k, v); };
    return cs;
}

bool t_membership(const Oracle& p, const TDescription& t) { return t.contains(p); }

void TDescription::demand(int j, std::vector<Nat>& args, const std::vector<Nat>& num_set, const Nat& val_bound,
                          std::vector<Nat>& out) const
{
    const SubformulaEntry& e = table_[j];
    switch (e.formula->kind) {
    case FormulaKind::Eq: return;
    case FormulaKind::And:
        demand(e.child0, args, num_set, val_bound, out);
        demand(e.child1, args, num_set, val_bound, out);
        return;
    case FormulaKind::Imp:
        // The antecedent's realizer is supplied, and a false antecedent has none.
        if (!truth(e.child0, args).failed()) demand(e.child1, args, num_set, val_bound, out);
        return;
    case FormulaKind::Or: {
        Nat k = key(j, args);
        out.push_back(k);
        if (entry_ok(k, 0)) demand(e.child0, args, num_set, val_bound, out);
        if (entry_ok(k, 1)) demand(e.child1, args, num_set, val_bound, out);
        return;
    }
    case FormulaKind::Exists: {
        Nat k = key(j, args);
        out.push_back(k);
        for (Nat m = 0; m <= val_bound; ++m) {
            if (!entry_ok(k, m)) continue;
            args.push_back(m);
            demand(e.child0, args, num_set, val_bound, out);
            args.pop_back();
        }
        return;
    }
    case FormulaKind::Forall:
        for (const Nat& m : num_set) {
            args.push_back(m);
            demand(e.child0, args, num_set, val_bound, out);
            args.pop_back();
        }
        return;
    }
}

std::vector<Nat> TDescription::demanded_keys(const std::vector<Nat>& args, const std::vector<Nat>& num_set,
                                             const Nat& val_bound) const
{
    std::vector<Nat> out, a = args;
    demand(0, a, num_set, val_bound, out);
    std::vector<Nat> uniq;
    for (auto& k : out)
        if (std::find(uniq.begin(), uniq.end(), k) == uniq.end()) uniq.push_back(k);
    return uniq;
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// The self-realizing index:

Nat self_index(const FormulaP& phi)
{
    using namespace lam;
    std::vector<SubformulaEntry> table = subformula_table(phi);
    std::vector<Nat> code(table.size());
    for (size_t jj = table.size(); jj-- > 0;) {
        const SubformulaEntry& e = table[jj];
        int j = (int)jj;
        int k = (int)e.vars.size();
        auto call = [&](int c, const std::vector<T>& v, int n) {
            std::vector<T> xs(v.begin(), v.begin() + n);
            return app(lit(code[c]), xs);
        };
        auto key_of = [j, k](const std::vector<T>& v) {
            std::vector<T> ns(v.begin() + 1, v.begin() + 1 + k);
            return pair(lit(j), k ? tuple(ns) : lit(0));
        };
        T t;
        switch (e.formula->kind) {
        case FormulaKind::Eq: t = lam::lam(k + 1, [](auto&) { return lit(0); }); break;
        case FormulaKind::And:
            t = lam::lam(k + 1, [&](auto& v) { return pair(call(e.child0, v, k + 1), call(e.child1, v, k + 1)); });
            break;
        case FormulaKind::Or:
            t = lam::lam(k + 1, [&](auto& v) {
                return ifz(oracle(key_of(v)), pair(lit(0), call(e.child0, v, k + 1)),
                           pair(lit(1), call(e.child1, v, k + 1)));
            });
            break;
        case FormulaKind::Imp: t = lam::lam(k + 2, [&](auto& v) { return call(e.child1, v, k + 1); }); break;
        case FormulaKind::Exists:
            t = lam::lam(k + 1, [&](auto& v) {
                return let(oracle(key_of(v)), [&](T m) {
                    std::vector<T> xs(v.begin(), v.end());
                    xs.push_back(m);
                    return pair(m, call(e.child0, xs, k + 2));
                });
            });
            break;
        case FormulaKind::Forall: t = lam::lam(k + 2, [&](auto& v) { return call(e.child0, v, k + 2); }); break;
        }
        code[jj] = build(t);
    }
    return code[0];
}

ForcingUniverse selfreal_universe(const TDescription& t, const std::vector<Nat>& args, std::vector<Nat> num_set,
                                  Nat val_bound, uint64_t fuel)
{
    ForcingUniverse u;
    u.num_set = std::move(num_set);
    u.val_bound = val_bound;
    u.fuel = fuel;
    u.key_set = t.demanded_keys(args, u.num_set, val_bound);
    u.tset = t.condition_set();
    return u;
}

namespace {

FormulaP instance(const TDescription& t, const std::vector<Nat>& args)
{
    std::map<std::string, TermP> sigma;
    const VarList& vs = t.table()[0].vars;
    if (vs.size() != args.size()) throw std::invalid_argument("wrong number of arguments for " + show(t.formula()));
    for (size_t i = 0; i < vs.size(); ++i) {
        if (!fits_u64(args[i]) || args[i] > 4096) throw std::invalid_argument("argument too large for a numeral");
        sigma[vs[i].first] = tm::numeral(to_u64(args[i]));
    }
    return substitute_many(t.formula(), sigma);
}

void fill(const TDescription& t, int j, std::vector<Nat>& args, Oracle& q, const Nat& val_bound)
{
    const SubformulaEntry& e = t.table()[j];
    switch (e.formula->kind) {
    case FormulaKind::Eq:
    case FormulaKind::Imp:
    case FormulaKind::Forall: return;
    case FormulaKind::And:
        fill(t, e.child0, args, q, val_bound);
        fill(t, e.child1, args, q, val_bound);
        return;
    case FormulaKind::Or: {
        Nat k = TDescription::key(j, args);
        if (!q.defined(k)) {
            if (t.entry_ok(k, 0)) q = q.with(k, 0);
            else if (t.entry_ok(k, 1)) q = q.with(k, 1);
            else throw PremiseFalse("neither disjunct of " + show(e.formula) + " holds");
        }
        fill(t, *q.get(k) == 0 ? e.child0 : e.child1, args, q, val_bound);
        return;
    }
    case FormulaKind::Exists: {
        Nat k = TDescription::key(j, args);
        if (!q.defined(k)) {
            Nat m = 0;
            while (m <= val_bound && !t.entry_ok(k, m)) ++m;
            if (m > val_bound)
                throw UniverseEmpty("no witness for " + show(e.formula) + " up to " + val_bound.str());
            q = q.with(k, m);
        }
        args.push_back(*q.get(k));
        fill(t, e.child0, args, q, val_bound);
        args.pop_back();
        return;
    }
    }
}

}  // namespace

SelfRealization realize_true(const TDescription& t, const std::vector<Nat>& args, const Oracle& p,
                             const ForcingUniverse& u)
{
    Verdict v = t.truth(0, args);
    if (v.exhausted()) throw OracleInconclusive("truth of " + show(t.formula()) + " is undecided");
    if (v.failed()) throw PremiseFalse(show(t.formula()) + " is false");
    if (!t.contains(p)) throw std::invalid_argument("condition " + p.str() + " is not in T");

    SelfRealization out;
    out.q = p;
    std::vector<Nat> a = args;
    fill(t, 0, a, out.q, u.val_bound);
    out.index = self_index(t.formula());
    std::vector<Nat> chain{0};
    chain.insert(chain.end(), args.begin(), args.end());
    EvalResult r = apply_chain(out.index, chain, out.q, u.fuel);
    if (!r.ok()) {
        out.verdict = Verdict::exhausted(r.kind == EvalResult::FuelExhausted ? "fuel" : "oracle");
        return out;
    }
    out.realizer = r.value;
    out.verdict = check_single(u, out.q, out.realizer, instance(t, args));
    return out;
}

SelfRealization realize_true(const FormulaP& phi, const Oracle& p, const ForcingUniverse& u, uint64_t q)
{
    TDescription t(phi, q);
    return realize_true(t, {}, p, u);
}

TruthReport truth_from_realizer(const TDescription& t, const std::vector<Nat>& args, const Oracle& p,
                                const Nat& a, const Nat& b, const ForcingUniverse& u)
{
    if (!t.contains(p)) throw std::invalid_argument("condition " + p.str() + " is not in T");
    TruthReport rep;
    rep.check = check_pair(u, p, a, b, instance(t, args));
    rep.truth = t.truth(0, args);
    if (!rep.check.ok()) rep.agreement = Verdict::holds();
    else if (rep.truth.ok()) rep.agreement = Verdict::holds();
    else if (rep.truth.failed()) rep.agreement = Verdict::fails("realized at " + p.str() + " but false");
    else rep.agreement = Verdict::exhausted("bound");
    return rep;
}

RealizerSearch search_realizers(const TDescription& t, const ForcingUniverse& u)
{
    RealizerSearch out;
    FormulaP phi = instance(t, {});
    Verdict truth = t.truth(0, {});
    ForcingEngine e(u);
    ForcingRealizability fr(e);
    std::vector<Nat> pool = fr.candidates(phi, {});
    Nat a = self_index(t.formula());
    for (const Oracle& p : e.conditions()) {
        EvalResult r = apply_chain(a, {0}, p, u.fuel);
        if (r.ok() && std::find(pool.begin(), pool.end(), r.value) == pool.end()) pool.push_back(r.value);
    }
    out.conditions = e.conditions().size();
    for (size_t i = 0; i < e.conditions().size(); ++i) {
        for (const Nat& x : pool)
            for (const Nat& y : pool) {
                ++out.pairs;
                Verdict v = fr.check_pair((int)i, x, y, phi);
                if (v.exhausted()) ++out.exhausted;
                if (!v.ok()) continue;
                ++out.holds;
                if (!truth.ok()) {
                    if (!out.disagreements++)
                        out.first_disagreement = e.conditions()[i].str() + " " + x.str() + " " + y.str();
                }
            }
    }
    return out;
}

std::vector<LabelledSentence> load_sentences(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<LabelledSentence> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        LabelledSentence s;
        std::string body = line.substr(first);
        for (auto [word, label] : {std::pair<const char*, int>{"true", 1}, {"false", 0}}) {
            size_t n = std::string(word).size();
            if (body.compare(0, n, word) == 0 && body.size() > n && (body[n] == ' ' || body[n] == '\t')) {
                s.label = label;
                body = body.substr(n);
            }
        }
        body.erase(0, body.find_first_not_of(" \t"));
        body.erase(body.find_last_not_of(" \t") + 1);
        s.text = body;
        s.formula = parse_formula(body);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace ehaw
