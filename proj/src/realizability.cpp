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

#include "ehaw/realizability.hpp"

#include <algorithm>

#include "ehaw/lam.hpp"
#include "ehaw/valuation.hpp"

namespace ehaw {

namespace {

std::vector<Nat> env_values(const RealEnv& env)
{
    std::vector<Nat> out;
    out.reserve(env.size());
    for (auto& [k, b] : env) out.push_back(b.value);
    return out;
}

ValueEnv value_env(const RealEnv& env)
{
    ValueEnv out;
    for (auto& [k, b] : env) out[k] = b.value;
    return out;
}

RealEnv with_binding(RealEnv env, const std::string& x, const Nat& n, TypeP t)
{
    env[x] = Binding{n, t};
    return env;
}

void require_closed(const FormulaP& phi, const RealEnv& env)
{
    for (auto& [x, t] : free_vars(phi))
        if (!env.count(x)) throw MalformedFormula("free variable " + x + " in " + show(phi));
}

void push(std::vector<Nat>& out, const Nat& n, size_t cap)
{
    if (out.size() < cap && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
}

Nat const_fn(const Nat& c)
{
    return lam::build(lam::lam(1, [&](auto&) { return lam::lit(c); }));
}

std::vector<Nat> registry_matches(const RealizerRegistry* reg, const FormulaP& phi, const RealEnv& env)
{
    std::vector<Nat> out;
    if (!reg || reg->entries.empty()) return out;
    FormulaP inst = instantiate(phi, env);
    for (auto& [f, code] : reg->entries)
        if (alpha_equal(f, inst) && std::find(out.begin(), out.end(), code) == out.end()) out.push_back(code);
    return out;
}

}  // namespace

FormulaP instantiate(const FormulaP& phi, const RealEnv& env)
{
    std::map<std::string, TermP> sigma;
    for (auto& [x, b] : env) {
        if (b.type == nat_t() && fits_u64(b.value) && b.value < 64) sigma[x] = tm::numeral(to_u64(b.value));
        else sigma[x] = tm::heo(b.value, b.type);
    }
    return substitute_many(phi, sigma);
}

TypeP formula_type(const FormulaP& phi)
{
    switch (phi->kind) {
    case FormulaKind::Eq: return nat_t();
    case FormulaKind::And: return prod_t(formula_type(phi->a), formula_type(phi->b));
    case FormulaKind::Or: return prod_t(nat_t(), prod_t(formula_type(phi->a), formula_type(phi->b)));
    case FormulaKind::Imp: return arrow_t(formula_type(phi->a), formula_type(phi->b));
    case FormulaKind::Exists: return prod_t(phi->type, formula_type(phi->a));
    case FormulaKind::Forall: return arrow_t(phi->type, formula_type(phi->a));
    }
    return nat_t();
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Forcing realizability:

ForcingRealizability::ForcingRealizability(ForcingEngine& e, const RealizerRegistry* reg, CandidateOptions opts)
    : e_(e), reg_(reg), opts_(opts)
{
}

Applied ForcingRealizability::term_value(int r, const TermP& t, const RealEnv& env)
{
    std::vector<Nat> vals = env_values(env);
    auto pure = term_memo_.find(std::make_tuple(-1, t.get(), vals));
    if (pure != term_memo_.end()) return pure->second;
    auto key = std::make_tuple(r, t.get(), vals);
    auto it = term_memo_.find(key);
    if (it != term_memo_.end()) return it->second;
    Machine m(e_.conditions()[r], e_.universe().fuel);
    Applied out = e_.classify(value(m, t, value_env(env)));
    if (!m.queried()) std::get<0>(key) = -1;
    return term_memo_[key] = out;
}

Verdict ForcingRealizability::force_terms(int p, TypeP t, const TermP& l, const TermP& r, const RealEnv& env)
{
    Verdict all = Verdict::holds();
    for (int q : std::vector<int>(e_.extensions(p))) {
        Verdict some = Verdict::fails();
        for (int s : std::vector<int>(e_.extensions(q))) {
            Applied x = term_value(s, l, env), y = term_value(s, r, env);
            Verdict here;
            if (x.kind == Applied::Exhausted) here = Verdict::exhausted(x.reason);
            else if (y.kind == Applied::Exhausted) here = Verdict::exhausted(y.reason);
            else if (x.kind == Applied::Undefined || y.kind == Applied::Undefined) here = Verdict::fails();
            else here = e_.force_eq(s, t, x.value, y.value);
            some = some || here;
            if (some.ok()) break;
        }
        if (some.failed()) some = Verdict::fails("terms differ beyond " + e_.conditions()[q].str());
        all = all && some;
        if (all.failed()) break;
    }
    return all;
}

Verdict ForcingRealizability::check_pair(int p, const Nat& a, const Nat& b, const FormulaP& phi, const RealEnv& env)
{
    require_closed(phi, env);
    return check(p, a, b, phi, env);
}

Verdict ForcingRealizability::check(int p, const Nat& a, const Nat& b, const FormulaP& phi, const RealEnv& env)
{
    Key key{p, phi.get(), a, b, env_values(env)};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Verdict out;
    switch (phi->kind) {
    case FormulaKind::Eq: out = force_terms(p, phi->type, phi->lhs, phi->rhs, env); break;
    case FormulaKind::And:
        out = check(p, proj0(a), proj0(b), phi->a, env);
        if (!out.failed()) out = out && check(p, proj1(a), proj1(b), phi->b, env);
        break;
    case FormulaKind::Or: {
        Nat ta = proj0(a), tb = proj0(b);
        if (ta != tb || ta > 1) {
            out = Verdict::fails("disjunction tags " + to_string(ta) + "," + to_string(tb));
            break;
        }
        out = check(p, proj1(a), proj1(b), ta == 0 ? phi->a : phi->b, env);
        break;
    }
    case FormulaKind::Exists: {
        Nat wa = proj0(a), wb = proj0(b);
        out = e_.force_eq(p, phi->type, wa, wb);
        if (!out.failed()) out = out && check(p, proj1(a), proj1(b), phi->a, with_binding(env, phi->var, wa, phi->type));
        break;
    }
    case FormulaKind::Forall:
    case FormulaKind::Imp: {
        bool forall = phi->kind == FormulaKind::Forall;
        FormulaP body = forall ? phi->a : phi->b;
        std::vector<Nat> xs = forall ? e_.samples(phi->type) : candidates(phi->a, env);
        out = Verdict::holds();
        for (int q : std::vector<int>(e_.extensions(p))) {
            for (auto& n : xs) {
                for (auto& m : xs) {
                    Verdict given = forall ? e_.force_eq(q, phi->type, n, m) : check(q, n, m, phi->a, env);
                    if (given.failed()) continue;
                    RealEnv inner = forall ? with_binding(env, phi->var, n, phi->type) : env;
                    Verdict some = Verdict::fails();
                    for (int r : std::vector<int>(e_.extensions(q))) {
                        Applied x = e_.apply(r, a, n), y = e_.apply(r, b, m);
                        Verdict here;
                        if (x.kind == Applied::Exhausted) here = Verdict::exhausted(x.reason);
                        else if (y.kind == Applied::Exhausted) here = Verdict::exhausted(y.reason);
                        else if (x.kind == Applied::Undefined || y.kind == Applied::Undefined) here = Verdict::fails();
                        else here = check(r, x.value, y.value, body, inner);
                        some = some || here;
                        if (some.ok()) break;
                    }
                    if (some.failed())
                        some = Verdict::fails("at " + e_.conditions()[q].str() + " on " + to_string(n) + "," +
                                              to_string(m) + " in " + show(phi));
                    out = out && implies(given, some);
                    if (out.failed()) break;
                }
                if (out.failed()) break;
            }
            if (out.failed()) break;
        }
        break;
    }
    }
    return memo_[key] = out;
}

std::vector<Nat> ForcingRealizability::candidates(const FormulaP& phi, const RealEnv& env)
{
    std::vector<Nat> out = registry_matches(reg_, phi, env);
    size_t cap = std::max(opts_.cap, out.size());
    for (auto& c : shape_candidates(phi, env, opts_.depth)) push(out, c, cap);
    for (auto& n : e_.universe().num_set) push(out, n, cap);
    return out;
}

std::vector<Nat> ForcingRealizability::shape_candidates(const FormulaP& phi, const RealEnv& env, int depth)
{
    std::vector<Nat> out;
    size_t cap = opts_.cap;
    if (depth <= 0) return {0};
    for (auto& c : registry_matches(reg_, phi, env)) push(out, c, cap);
    switch (phi->kind) {
    case FormulaKind::Eq:
        push(out, 0, cap);
        push(out, 1, cap);
        break;
    case FormulaKind::And: {
        auto l = shape_candidates(phi->a, env, depth - 1), r = shape_candidates(phi->b, env, depth - 1);
        for (size_t i = 0; i < std::max(l.size(), r.size()); ++i)
            push(out, pair(l[std::min(i, l.size() - 1)], r[std::min(i, r.size() - 1)]), cap);
        for (auto& x : l)
            for (auto& y : r) push(out, pair(x, y), cap);
        break;
    }
    case FormulaKind::Or: {
        auto l = shape_candidates(phi->a, env, depth - 1), r = shape_candidates(phi->b, env, depth - 1);
        for (size_t i = 0; i < std::max(l.size(), r.size()); ++i) {
            if (i < l.size()) push(out, pair(0, l[i]), cap);
            if (i < r.size()) push(out, pair(1, r[i]), cap);
        }
        break;
    }
    case FormulaKind::Exists:
        for (auto& n : e_.samples(phi->type))
            for (auto& c : shape_candidates(phi->a, with_binding(env, phi->var, n, phi->type), depth - 1))
                push(out, pair(n, c), cap);
        break;
    case FormulaKind::Imp:
    case FormulaKind::Forall: {
        push(out, 0, cap);
        RealEnv inner = env;
        FormulaP body = phi->b;
        if (phi->kind == FormulaKind::Forall) {
            inner = with_binding(env, phi->var, e_.samples(phi->type).front(), phi->type);
            body = phi->a;
        }
        for (auto& c : shape_candidates(body, inner, depth - 1)) push(out, const_fn(c), cap);
        break;
    }
    }
    return out;
}

Verdict check_pair(const ForcingUniverse& u, const Oracle& p, const Nat& a, const Nat& b, const FormulaP& phi,
                   const RealizerRegistry* reg)
{
    ForcingEngine e(u);
    ForcingRealizability r(e, reg);
    return r.check_pair(e.require(p), a, b, phi);
}

Verdict check_single(const ForcingUniverse& u, const Oracle& p, const Nat& a, const FormulaP& phi,
                     const RealizerRegistry* reg)
{
    return check_pair(u, p, a, a, phi, reg);
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Oracle-free realizability:

PlainRealizability::PlainRealizability(PlainEngine& e, const RealizerRegistry* reg, CandidateOptions opts)
    : e_(e), reg_(reg), opts_(opts)
{
}

Applied PlainRealizability::term_value(const TermP& t, const RealEnv& env)
{
    static const Oracle none;
    EvalResult r = value(t, none, e_.fuel(), value_env(env));
    if (r.ok()) return {Applied::Value, r.value, ""};
    if (r.kind == EvalResult::FuelExhausted) return {Applied::Exhausted, 0, "fuel"};
    return {Applied::Undefined, 0, ""};
}

Verdict PlainRealizability::check(const Nat& a, const FormulaP& phi, const RealEnv& env)
{
    require_closed(phi, env);
    auto key = std::make_tuple(phi.get(), a, env_values(env));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    auto applied = [&](const Applied& x, const std::function<Verdict(const Nat&)>& k) {
        if (x.kind == Applied::Exhausted) return Verdict::exhausted(x.reason);
        if (x.kind == Applied::Undefined) return Verdict::fails("application undefined");
        return k(x.value);
    };

    Verdict out;
    switch (phi->kind) {
    case FormulaKind::Eq: {
        Applied l = term_value(phi->lhs, env), r = term_value(phi->rhs, env);
        out = applied(l, [&](const Nat& x) { return applied(r, [&](const Nat& y) { return e_.eq(phi->type, x, y); }); });
        break;
    }
    case FormulaKind::And:
        out = check(proj0(a), phi->a, env);
        if (!out.failed()) out = out && check(proj1(a), phi->b, env);
        break;
    case FormulaKind::Or: {
        out = e_.eq(formula_type(phi), a, a);
        if (out.failed()) break;
        Nat tag = proj0(a);
        if (tag == 0) out = out && check(proj0(proj1(a)), phi->a, env);
        else if (tag == 1) out = out && check(proj1(proj1(a)), phi->b, env);
        else out = Verdict::fails("disjunction tag " + to_string(tag));
        break;
    }
    case FormulaKind::Exists: {
        Nat w = proj0(a);
        out = e_.eq(phi->type, w, w);
        if (!out.failed()) out = out && check(proj1(a), phi->a, with_binding(env, phi->var, w, phi->type));
        break;
    }
    case FormulaKind::Forall:
    case FormulaKind::Imp: {
        bool forall = phi->kind == FormulaKind::Forall;
        out = e_.eq(formula_type(phi), a, a);
        if (out.failed()) break;
        FormulaP body = forall ? phi->a : phi->b;
        std::vector<Nat> xs = forall ? e_.samples(phi->type) : candidates(phi->a, env);
        for (auto& n : xs) {
            Verdict given = forall ? e_.eq(phi->type, n, n) : check(n, phi->a, env);
            if (given.failed()) continue;
            RealEnv inner = forall ? with_binding(env, phi->var, n, phi->type) : env;
            Verdict res = applied(e_.apply(a, n), [&](const Nat& v) { return check(v, body, inner); });
            if (res.failed()) res = Verdict::fails("on " + to_string(n) + " in " + show(phi) + ": " + res.reason);
            out = out && implies(given, res);
            if (out.failed()) break;
        }
        break;
    }
    }
    return memo_[key] = out;
}

std::vector<Nat> PlainRealizability::candidates(const FormulaP& phi, const RealEnv& env)
{
    std::vector<Nat> out = registry_matches(reg_, phi, env);
    size_t cap = std::max(opts_.cap, out.size());
    for (auto& c : shape_candidates(phi, env, opts_.depth)) push(out, c, cap);
    for (auto& n : e_.num_set()) push(out, n, cap);
    return out;
}

std::vector<Nat> PlainRealizability::shape_candidates(const FormulaP& phi, const RealEnv& env, int depth)
{
    std::vector<Nat> out;
    size_t cap = opts_.cap;
    if (depth <= 0) return {0};
    for (auto& c : registry_matches(reg_, phi, env)) push(out, c, cap);
    switch (phi->kind) {
    case FormulaKind::Eq:
        push(out, 0, cap);
        push(out, 1, cap);
        break;
    case FormulaKind::And: {
        auto l = shape_candidates(phi->a, env, depth - 1), r = shape_candidates(phi->b, env, depth - 1);
        for (size_t i = 0; i < std::max(l.size(), r.size()); ++i)
            push(out, pair(l[std::min(i, l.size() - 1)], r[std::min(i, r.size() - 1)]), cap);
        for (auto& x : l)
            for (auto& y : r) push(out, pair(x, y), cap);
        break;
    }
    case FormulaKind::Or: {
        auto l = shape_candidates(phi->a, env, depth - 1), r = shape_candidates(phi->b, env, depth - 1);
        for (size_t i = 0; i < std::max(l.size(), r.size()); ++i) {
            if (i < l.size()) push(out, tuple({0, l[i], 0}), cap);
            if (i < r.size()) push(out, tuple({1, 0, r[i]}), cap);
        }
        break;
    }
    case FormulaKind::Exists:
        for (auto& n : e_.samples(phi->type))
            for (auto& c : shape_candidates(phi->a, with_binding(env, phi->var, n, phi->type), depth - 1))
                push(out, pair(n, c), cap);
        break;
    case FormulaKind::Imp:
    case FormulaKind::Forall: {
        push(out, 0, cap);
        RealEnv inner = env;
        FormulaP body = phi->b;
        if (phi->kind == FormulaKind::Forall) {
            inner = with_binding(env, phi->var, e_.samples(phi->type).front(), phi->type);
            body = phi->a;
        }
        for (auto& c : shape_candidates(body, inner, depth - 1)) push(out, const_fn(c), cap);
        break;
    }
    }
    return out;
}

Verdict check_plain(const Nat& a, const FormulaP& phi, const std::vector<Nat>& num_set, uint64_t fuel,
                    const RealizerRegistry* reg)
{
    PlainEngine e(num_set, fuel);
    PlainRealizability r(e, reg);
    return r.check(a, phi);
}

}  // namespace ehaw
