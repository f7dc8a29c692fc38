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

#include "ehaw/lam.hpp"

#include <algorithm>
#include <set>

namespace ehaw::lam {

namespace {

thread_local int g_depth = 0;

std::shared_ptr<Node> mk(Kind k, std::vector<T> kids = {})
{
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->kids = std::move(kids);
    return n;
}

void free_levels(const Node& n, int below, std::set<int>& out)
{
    if (n.kind == Kind::Var) {
        if (n.level < below) out.insert(n.level);
        return;
    }
    for (auto& k : n.kids) free_levels(*k, below, out);
}

ExprP comp(const Node& n, const std::vector<ExprP>& scope)
{
    switch (n.kind) {
    case Kind::Var:
        if (n.level < 0 || n.level >= (int)scope.size() || !scope[n.level])
            throw MalformedExpr("lambda variable used outside its scope");
        return scope[n.level];
    case Kind::Lit: return cx::num(n.lit);
    case Kind::App: return cx::apply(comp(*n.kids[0], scope), comp(*n.kids[1], scope));
    case Kind::Pair: return cx::pair(comp(*n.kids[0], scope), comp(*n.kids[1], scope));
    case Kind::Proj: return cx::proj(n.index, comp(*n.kids[0], scope));
    case Kind::Prim: {
        std::vector<ExprP> args;
        for (auto& k : n.kids) args.push_back(comp(*k, scope));
        return cx::prim((Prim)n.index, std::move(args));
    }
    case Kind::IfZ:
        return cx::ifz(comp(*n.kids[0], scope), comp(*n.kids[1], scope), comp(*n.kids[2], scope));
    case Kind::Oracle: return cx::oracle(comp(*n.kids[0], scope));
    case Kind::Lam: {
        std::set<int> fl;
        free_levels(*n.kids[0], n.level, fl);
        std::vector<ExprP> caps;
        std::vector<ExprP> inner(n.level + 1);
        uint32_t slot = 0;
        for (int l : fl) {
            if (l >= (int)scope.size() || !scope[l])
                throw MalformedExpr("lambda variable used outside its scope");
            caps.push_back(scope[l]);
            inner[l] = cx::env(slot++);
        }
        inner[n.level] = cx::arg();
        return cx::close(comp(*n.kids[0], inner), std::move(caps));
    }
    }
    throw MalformedExpr("unknown lambda node");
}

}  // namespace

T lit(const Nat& v)
{
    auto n = mk(Kind::Lit);
    n->lit = v;
    return n;
}

T app(T f, T x) { return mk(Kind::App, {std::move(f), std::move(x)}); }

T app(T f, const std::vector<T>& xs)
{
    for (auto& x : xs) f = app(f, x);
    return f;
}

T pair(T a, T b) { return mk(Kind::Pair, {std::move(a), std::move(b)}); }

T proj(uint32_t i, T e)
{
    auto n = mk(Kind::Proj, {std::move(e)});
    n->index = i;
    return n;
}

T prim(Prim p, std::vector<T> args)
{
    if (args.size() != prim_arity(p)) throw MalformedExpr("prim arity");
    auto n = mk(Kind::Prim, std::move(args));
    n->index = (uint32_t)p;
    return n;
}

T ifz(T c, T t, T e) { return mk(Kind::IfZ, {std::move(c), std::move(t), std::move(e)}); }
T oracle(T e) { return mk(Kind::Oracle, {std::move(e)}); }

T tuple(const std::vector<T>& xs)
{
    if (xs.empty()) return lit(0);
    T acc = xs.back();
    for (size_t i = xs.size() - 1; i-- > 0;) acc = pair(xs[i], acc);
    return acc;
}

T component(T e, unsigned i, unsigned len)
{
    if (len == 0) return lit(0);
    for (unsigned k = 0; k < i && k + 1 < len; ++k) e = proj(1, e);
    if (i + 1 >= len) return e;
    return proj(0, e);
}

T lam(int n, const std::function<T(const std::vector<T>&)>& body)
{
    int base = g_depth;
    std::vector<T> vars;
    for (int i = 0; i < n; ++i) {
        auto v = mk(Kind::Var);
        v->level = base + i;
        vars.push_back(v);
    }
    g_depth += n;
    T b;
    try {
        b = body(vars);
    } catch (...) {
        g_depth = base;
        throw;
    }
    g_depth = base;
    for (int i = n; i-- > 0;) {
        auto l = mk(Kind::Lam, {b});
        l->level = base + i;
        b = l;
    }
    return b;
}

T let(T e, const std::function<T(T)>& body)
{
    return app(lam(1, [&](const std::vector<T>& v) { return body(v[0]); }), std::move(e));
}

ExprP compile(const T& t) { return comp(*t, {}); }

Nat build(const T& t)
{
    if (t->kind != Kind::Lam) throw MalformedExpr("build expects a lambda");
    std::set<int> fl;
    free_levels(*t->kids[0], t->level, fl);
    if (!fl.empty()) throw MalformedExpr("build of an open lambda");
    std::vector<ExprP> inner(t->level + 1);
    inner[t->level] = cx::arg();
    return encode_closure(comp(*t->kids[0], inner), {});
}

EvalResult eval(const T& t, const Oracle& p, uint64_t fuel)
{
    Machine m(p, fuel);
    return m.eval_closed(*compile(t));
}

}  // namespace ehaw::lam
