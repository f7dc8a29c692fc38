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

#include "ehaw/extraction.hpp"

#include <functional>
#include <map>

#include "ehaw/lam.hpp"
#include "ehaw/valuation.hpp"

namespace ehaw {

std::string mode_name(Mode m) { return m == Mode::Forcing ? "forcing" : "plain"; }

FormulaP ExtractionResult::closure() const { return universal_closure(conclusion, closure_vars); }

namespace {

using lam::T;
using Env = std::map<std::string, T>;

constexpr uint64_t kClosedFuel = 10000000;

class Extractor {
  public:
    explicit Extractor(Mode m) : mode_(m) {}

    Nat run(const CheckedP& n)
    {
        auto it = memo_.find(n.get());
        if (it != memo_.end()) return it->second;
        std::vector<Nat> prem;
        for (auto& p : n->premises) prem.push_back(run(p));
        Nat code = node_code(*n, prem);
        trace_.push_back({n->node->id, n->rule, recipe_, code});
        memo_.emplace(n.get(), code);
        return code;
    }

    std::vector<TraceEntry> trace_;

  private:
    // Premise code applied to its own variables (taken from env, or 0 when absent) and extra arguments.
    static T call(const Nat& code, const CheckedNode& prem, const Env& env, std::vector<T> extra = {})
    {
        std::vector<T> args;
        for (auto& [x, type] : prem.vars) {
            auto it = env.find(x);
            args.push_back(it == env.end() ? lam::lit(0) : it->second);
        }
        args.insert(args.end(), extra.begin(), extra.end());
        return args.empty() ? lam::lit(code) : lam::app(lam::lit(code), args);
    }

    // lambda over the node's variables and nextra recipe arguments.
    Nat make(const CheckedNode& n, int nextra, const std::function<T(const Env&, const std::vector<T>&)>& body)
    {
        int k = (int)n.vars.size();
        if (k + nextra == 0) {
            T e = body({}, {});
            static const Oracle none;
            EvalResult r = lam::eval(e, none, kClosedFuel);
            if (!r.ok())
                throw ExtractionError("step " + n.node->id + ": closed realizer did not evaluate (" + r.str() + ")");
            return r.value;
        }
        return lam::build(lam::lam(k + nextra, [&](const std::vector<T>& v) {
            Env env;
            for (int i = 0; i < k; ++i) env[n.vars[i].first] = v[i];
            return body(env, std::vector<T>(v.begin() + k, v.end()));
        }));
    }

    static bool in_vars(const CheckedNode& n)
    {
        for (auto& v : n.vars)
            if (v.first == n.var) return true;
        return false;
    }

    Nat constant_zero(const CheckedNode& n, int nextra)
    {
        return make(n, nextra, [](const Env&, const std::vector<T>&) { return lam::lit(0); });
    }

    Nat node_code(const CheckedNode& n, const std::vector<Nat>& c)
    {
        const FormulaP& C = n.node->conclusion;
        auto P = [&](size_t i) -> const CheckedNode& { return *n.premises[i]; };
        bool plain = mode_ == Mode::Plain;
        switch (n.rule) {
        case 1:
            recipe_ = "a n b = b";
            return make(n, 1, [](const Env&, auto& x) { return x[0]; });
        case 2:
            recipe_ = "a n = b n 0 (c n 0)";
            return make(n, 0, [&](const Env& env, auto&) { return call(c[1], P(1), env, {call(c[0], P(0), env)}); });
        case 3:
            recipe_ = "a n d = b n 0 (c n 0 d)";
            return make(n, 1, [&](const Env& env, auto& x) {
                return call(c[1], P(1), env, {call(c[0], P(0), env, {x[0]})});
            });
        case 4:
            recipe_ = "a n b = (b)_" + std::to_string(n.variant);
            return make(n, 1, [&](const Env&, auto& x) { return lam::proj(n.variant, x[0]); });
        case 5:
            if (!plain) {
                recipe_ = "a n b = <" + std::to_string(n.variant) + ",b>";
                return make(n, 1, [&](const Env&, auto& x) { return lam::pair(lam::lit(n.variant), x[0]); });
            }
            recipe_ = n.variant == 0 ? "a n b = <0,b,0>" : "a n b = <1,0,b>";
            return make(n, 1, [&](const Env&, auto& x) {
                return n.variant == 0 ? lam::tuple({lam::lit(0), x[0], lam::lit(0)})
                                      : lam::tuple({lam::lit(1), lam::lit(0), x[0]});
            });
        case 6:
            recipe_ = "a n d = <b n d, c n d>";
            return make(n, 1, [&](const Env& env, auto& x) {
                return lam::pair(call(c[0], P(0), env, {x[0]}), call(c[1], P(1), env, {x[0]}));
            });
        case 7:
            recipe_ = plain ? "a n d = b n (d)_1 if (d)_0 = 0, else c n (d)_2" : "a n d = b n (d)_1 if (d)_0 = 0, else c n (d)_1";
            return make(n, 1, [&](const Env& env, auto& x) {
                T l = plain ? lam::component(x[0], 1, 3) : lam::proj(1, x[0]);
                T r = plain ? lam::component(x[0], 2, 3) : lam::proj(1, x[0]);
                return lam::ifz(lam::proj(0, x[0]), call(c[0], P(0), env, {l}), call(c[1], P(1), env, {r}));
            });
        case 8:
            if (n.variant == 0) {
                recipe_ = "a n c e = b n <c,e>";
                return make(n, 2, [&](const Env& env, auto& x) { return call(c[0], P(0), env, {lam::pair(x[0], x[1])}); });
            }
            recipe_ = "a n c = b n (c)_0 (c)_1";
            return make(n, 1, [&](const Env& env, auto& x) {
                return call(c[0], P(0), env, {lam::proj(0, x[0]), lam::proj(1, x[0])});
            });
        case 9:
            recipe_ = "a n b = 0";
            return constant_zero(n, 1);
        case 10:
            recipe_ = in_vars(n) ? "a n c e = b n' c, x replaced by e" : "a n c e = b n e c";
            return make(n, 2, [&](const Env& env, auto& x) {
                Env inner = env;
                inner[n.var] = x[1];
                return call(c[0], P(0), inner, {x[0]});
            });
        case 11:
            recipe_ = in_vars(n) ? "a n c = b n' (c)_1, x replaced by (c)_0" : "a n c = b n (c)_0 (c)_1";
            return make(n, 1, [&](const Env& env, auto& x) {
                Env inner = env;
                inner[n.var] = lam::proj(0, x[0]);
                return call(c[0], P(0), inner, {lam::proj(1, x[0])});
            });
        case 12: {
            recipe_ = n.variant == 0 ? "a n b = b (d n), d n = |" + show(n.witness) + "|"
                                     : "a n b = <d n, b>, d n = |" + show(n.witness) + "|";
            return make(n, 1, [&](const Env& env, auto& x) {
                Env tenv = env;
                for (auto& [v, type] : free_vars(n.witness))
                    if (!tenv.count(v)) tenv[v] = lam::lit(0);
                T d = term_expr(n.witness, tenv);
                return n.variant == 0 ? lam::app(x[0], d) : lam::pair(d, x[0]);
            });
        }
        case 13:
            recipe_ = "a n b = 0";
            return constant_zero(n, 1);
        case 14:
        case 15:
        case 16:
        case 17:
        case 18:
        case 20:
            recipe_ = "a n = 0";
            return constant_zero(n, 0);
        case 19: return induction(n, c);
        case 21: {
            const std::string x = C->a->lhs->name, y = C->a->rhs->name;
            if (!plain) {
                recipe_ = "a n = <0,0> if n1 = n2, else <1,0>";
                return make(n, 0, [&](const Env& env, auto&) {
                    return lam::ifz(lam::prim(Prim::Eq, {env.at(x), env.at(y)}), lam::pair(lam::lit(1), lam::lit(0)),
                                    lam::pair(lam::lit(0), lam::lit(0)));
                });
            }
            Nat b = lam::build(lam::lam(1, [](auto&) { return lam::lit(0); }));
            recipe_ = "a n = <0,0,b> if n1 = n2, else <1,0,b>, b c = 0";
            return make(n, 0, [&](const Env& env, auto&) {
                return lam::ifz(lam::prim(Prim::Eq, {env.at(x), env.at(y)}),
                                lam::tuple({lam::lit(1), lam::lit(0), lam::lit(b)}),
                                lam::tuple({lam::lit(0), lam::lit(0), lam::lit(b)}));
            });
        }
        case 22:
            recipe_ = "a n b = (b)_1";
            return make(n, 1, [](const Env&, auto& x) { return lam::proj(1, x[0]); });
        case 23:
            recipe_ = "a n b = 0";
            return constant_zero(n, 1);
        case 24: return choice(n);
        case 25: return dependent_choice(n);
        }
        throw ExtractionError("step " + n.node->id + ": no recipe for rule " + std::to_string(n.rule));
    }

    Nat induction(const CheckedNode& n, const std::vector<Nat>& c)
    {
        const CheckedNode& base = *n.premises[0];
        const CheckedNode& step = *n.premises[1];
        VarList w;
        for (auto& v : n.vars)
            if (v.first != n.var) w.push_back(v);
        int kw = (int)w.size();
        // e w i = b w if i = 0, else c w (i-1) (e w (i-1))
        Nat body = lam::build(lam::lam(kw + 2, [&](const std::vector<T>& v) {
            T e = v[0], i = v[kw + 1];
            Env env;
            for (int j = 0; j < kw; ++j) env[w[j].first] = v[1 + j];
            return lam::ifz(i, call(c[0], base, env), lam::let(lam::prim(Prim::Pred, {i}), [&](T m) {
                                Env inner = env;
                                inner[n.var] = m;
                                std::vector<T> args(v.begin() + 1, v.begin() + 1 + kw);
                                args.push_back(m);
                                return call(c[1], step, inner, {lam::app(e, args)});
                            }));
        }));
        Nat E = fixpoint(body);
        recipe_ = "a n 0 = b n, a n (i+1) = c n i (a n i) [E=" + to_string(E) + "]";
        return make(n, 0, [&](const Env& env, auto&) {
            std::vector<T> args;
            for (auto& [x, type] : w) args.push_back(env.at(x));
            auto it = env.find(n.var);
            args.push_back(it == env.end() ? lam::lit(0) : it->second);
            return lam::app(lam::lit(E), args);
        });
    }

    Nat choice(const CheckedNode& n)
    {
        int k = (int)n.vars.size();
        Nat A[2];
        for (int i = 0; i < 2; ++i)
            A[i] = lam::build(lam::lam(k + 2, [&](const std::vector<T>& v) { return lam::proj(i, lam::app(v[k], v[k + 1])); }));
        recipe_ = "a n b = <a0 n b, a1 n b>, ai n b d = (b d)_i [a0=" + to_string(A[0]) + ", a1=" + to_string(A[1]) + "]";
        return make(n, 1, [&](const Env& env, auto& x) {
            std::vector<T> args;
            for (auto& [v, type] : n.vars) args.push_back(env.at(v));
            args.push_back(x[0]);
            return lam::pair(lam::app(lam::lit(A[0]), args), lam::app(lam::lit(A[1]), args));
        });
    }

    Nat dependent_choice(const CheckedNode& n)
    {
        // h b n d 0 = <n,d,0>, h b n d (i+1) = b (h b n d i)_0 (h b n d i)_1 on triples.
        Nat H = fixpoint(lam::build(lam::lam(5, [](const std::vector<T>& v) {
            T h = v[0], b = v[1], x = v[2], d = v[3], i = v[4];
            return lam::ifz(i, lam::tuple({x, d, lam::lit(0)}),
                            lam::let(lam::app(h, {b, x, d, lam::prim(Prim::Pred, {i})}), [&](T r) {
                                return lam::app(b, {lam::component(r, 0, 3), lam::component(r, 1, 3)});
                            }));
        })));
        Nat F = lam::build(lam::lam(4, [&](const std::vector<T>& v) {
            return lam::component(lam::app(lam::lit(H), {v[0], v[1], v[2], v[3]}), 0, 3);
        }));
        Nat G = lam::build(lam::lam(4, [&](const std::vector<T>& v) {
            return lam::component(lam::app(lam::lit(H), {v[0], v[1], v[2], lam::prim(Prim::Succ, {v[3]})}), 2, 3);
        }));
        recipe_ = "a m b n d = <f b n d, 0, g b n d>, f b n d i = (h b n d i)_0, g b n d i = (h b n d (i+1))_2, "
                  "h b n d 0 = <n,d,0>, h b n d (i+1) = b (h b n d i)_0 (h b n d i)_1 [h=" +
                  to_string(H) + ", f=" + to_string(F) + ", g=" + to_string(G) + "]";
        return make(n, 3, [&](const Env&, auto& x) {
            return lam::tuple({lam::app(lam::lit(F), {x[0], x[1], x[2]}), lam::lit(0), lam::app(lam::lit(G), {x[0], x[1], x[2]})});
        });
    }

    Mode mode_;
    std::string recipe_;
    std::map<const CheckedNode*, Nat> memo_;
};

}  // namespace

ExtractionResult extract(const DerivationP& d, Mode m)
{
    CheckedP root = check(d);
    Extractor ex(m);
    ExtractionResult r;
    r.code = ex.run(root);
    r.closure_vars = root->vars;
    r.mode = m;
    r.trace = std::move(ex.trace_);
    r.conclusion = d->conclusion;
    return r;
}

ExtractionResult extract(const DerivationP& d) { return extract(d, Mode::Forcing); }
ExtractionResult extract_plain(const DerivationP& d) { return extract(d, Mode::Plain); }

}  // namespace ehaw
