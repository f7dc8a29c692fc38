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

#include "ehaw/valuation.hpp"

namespace ehaw {

const ConstantCodes& constant_codes()
{
    static const ConstantCodes c = [] {
        using namespace lam;
        ConstantCodes k;
        k.S = build(lam::lam(1, [](auto& v) { return prim(Prim::Succ, {v[0]}); }));
        k.K = build(lam::lam(2, [](auto& v) { return v[0]; }));
        k.Sig = build(lam::lam(3, [](auto& v) { return app(app(v[0], v[2]), app(v[1], v[2])); }));
        k.R = fixpoint(build(lam::lam(4, [](auto& v) {
            T r = v[0], a = v[1], b = v[2], n = v[3];
            T m = prim(Prim::Pred, {n});
            return ifz(n, a, app(b, {app(r, {a, b, m}), m}));
        })));
        k.D = build(lam::lam(2, [](auto& v) { return pair(v[0], v[1]); }));
        k.D0 = build(lam::lam(1, [](auto& v) { return proj(0, v[0]); }));
        k.D1 = build(lam::lam(1, [](auto& v) { return proj(1, v[0]); }));
        return k;
    }();
    return c;
}

const ConstantCodes& constant_codes_plain() { return constant_codes(); }

namespace {

const Nat& constant(TermKind k)
{
    const ConstantCodes& c = constant_codes();
    switch (k) {
    case TermKind::Succ: return c.S;
    case TermKind::K: return c.K;
    case TermKind::Sig: return c.Sig;
    case TermKind::Rec: return c.R;
    case TermKind::D: return c.D;
    case TermKind::D0: return c.D0;
    default: return c.D1;
    }
}

}  // namespace

EvalResult value(Machine& m, const TermP& t, const ValueEnv& env)
{
    switch (t->kind) {
    case TermKind::Var: {
        auto it = env.find(t->name);
        if (it == env.end()) throw UnboundVariable("no value for variable " + t->name);
        return EvalResult::val(it->second);
    }
    case TermKind::Zero: return EvalResult::val(0);
    case TermKind::Heo: return EvalResult::val(t->heo);
    case TermKind::PrimFn: {
        std::vector<Nat> args;
        for (auto& a : t->args) {
            EvalResult r = value(m, a, env);
            if (!r.ok()) return r;
            args.push_back(r.value);
        }
        Nat v = prim_eval(t->prim, args);
        if (bit_length(v) > kMaxNatBits) return EvalResult::exhausted();
        return EvalResult::val(std::move(v));
    }
    case TermKind::App: {
        EvalResult f = value(m, t->args[0], env);
        if (!f.ok()) return f;
        EvalResult x = value(m, t->args[1], env);
        if (!x.ok()) return x;
        return m.apply(f.value, x.value);
    }
    default: return EvalResult::val(constant(t->kind));
    }
}

EvalResult value(const TermP& alpha, const Oracle& p, uint64_t fuel, const ValueEnv& env)
{
    Machine m(p, fuel);
    return value(m, alpha, env);
}

EvalResult value_plain(const TermP& alpha, uint64_t fuel, const ValueEnv& env)
{
    static const Oracle none;
    return value(alpha, none, fuel, env);
}

lam::T term_expr(const TermP& t, const std::map<std::string, lam::T>& env)
{
    switch (t->kind) {
    case TermKind::Var: {
        auto it = env.find(t->name);
        if (it == env.end()) throw UnboundVariable("variable " + t->name + " is not among the listed variables");
        return it->second;
    }
    case TermKind::Zero: return lam::lit(0);
    case TermKind::Heo: return lam::lit(t->heo);
    case TermKind::PrimFn: {
        std::vector<lam::T> args;
        for (auto& a : t->args) args.push_back(term_expr(a, env));
        return lam::prim(t->prim, args);
    }
    case TermKind::App: return lam::app(term_expr(t->args[0], env), term_expr(t->args[1], env));
    default: return lam::lit(constant(t->kind));
    }
}

Nat term_index(const TermP& alpha, const VarList& vars)
{
    int k = vars.empty() ? 1 : (int)vars.size();
    return lam::build(lam::lam(k, [&](const std::vector<lam::T>& v) {
        std::map<std::string, lam::T> env;
        for (size_t i = 0; i < vars.size(); ++i) env[vars[i].first] = v[i];
        return term_expr(alpha, env);
    }));
}

Nat term_index_plain(const TermP& alpha, const VarList& vars) { return term_index(alpha, vars); }

}  // namespace ehaw
