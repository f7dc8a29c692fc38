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

#include "ehaw/collection.hpp"

#include <stdexcept>

#include "ehaw/extraction.hpp"
#include "ehaw/lam.hpp"
#include "ehaw/selfreal.hpp"
#include "ehaw/tactics.hpp"

namespace ehaw {

namespace {

using tactics::Fact;
using tactics::Prover;

TypeP N() { return nat_t(); }
TermP V(const std::string& n) { return tm::var(n, nat_t()); }
TermP S(TermP t) { return tm::S(std::move(t)); }
TermP add(TermP a, TermP b) { return tm::prim(Prim::Add, {std::move(a), std::move(b)}); }
TermP sub(TermP a, TermP b) { return tm::prim(Prim::Sub, {std::move(a), std::move(b)}); }
TermP lt(TermP a, TermP b) { return tm::prim(Prim::Lt, {std::move(a), std::move(b)}); }
TermP sg(TermP a) { return tm::prim(Prim::Sg, {std::move(a)}); }
TermP pred(TermP a) { return tm::prim(Prim::Pred, {std::move(a)}); }
FormulaP eq(TermP a, TermP b) { return fm::eq(nat_t(), std::move(a), std::move(b)); }

// add(...add(t, e1)..., ek)
TermP sums(TermP t, int k)
{
    for (int j = 1; j <= k; ++j) t = add(t, V("e" + std::to_string(j)));
    return t;
}

bool allowed_phi(const FormulaP& f)
{
    switch (f->kind) {
    case FormulaKind::Eq: return f->type == nat_t() && is_first_order(f);
    case FormulaKind::And:
    case FormulaKind::Imp: return allowed_phi(f->a) && allowed_phi(f->b);
    default: return false;
    }
}

class Lemmas {
  public:
    explicit Lemmas(Prover& pr) : pr_(pr) {}

    Fact E(TermP l, TermP r) { return pr_.fact(pr_.equation(std::move(l), std::move(r))); }
    Fact cong(const Fact& f, const std::function<TermP(TermP)>& ctx)
    {
        std::string h = pr_.fresh_var();
        return pr_.cong(f, ctx(V(h)), h);
    }

    // sub(S(sa), S(sb)) = sub(sa, sb)
    DerivationP ss()
    {
        if (ss_) return ss_;
        TermP u = V("sa"), v = V("sb");
        auto theta = [&](TermP y) { return eq(sub(S(u), S(y)), sub(u, y)); };
        Fact base = pr_.chain({E(sub(S(u), S(tm::zero())), pred(sub(S(u), tm::zero()))),
                               cong(E(sub(S(u), tm::zero()), S(u)), [](TermP h) { return pred(h); }),
                               E(pred(S(u)), u), pr_.sym(E(sub(u, tm::zero()), u))});
        Fact hyp = pr_.assume(theta(v));
        Fact step = pr_.chain({pr_.lift(E(sub(S(u), S(S(v))), pred(sub(S(u), S(v)))), hyp.hyp),
                               cong(hyp, [](TermP h) { return pred(h); }),
                               pr_.lift(pr_.sym(E(sub(u, S(v)), pred(sub(u, v)))), hyp.hyp)});
        ss_ = pr_.induction(theta(v), "sb", base.d, step);
        return ss_;
    }

    // add(S(t0), e0) = S(add(t0, e0))
    DerivationP as()
    {
        if (as_) return as_;
        TermP t = V("t0"), e = V("e0");
        auto theta = [&](TermP y) { return eq(add(S(t), y), S(add(t, y))); };
        auto Sc = [](TermP h) { return S(h); };
        Fact base = pr_.chain({E(add(S(t), tm::zero()), S(t)), pr_.sym(cong(E(add(t, tm::zero()), t), Sc))});
        Fact hyp = pr_.assume(theta(e));
        Fact step = pr_.chain({pr_.lift(E(add(S(t), S(e)), S(add(S(t), e))), hyp.hyp), cong(hyp, Sc),
                               pr_.lift(pr_.sym(cong(E(add(t, S(e)), S(add(t, e))), Sc)), hyp.hyp)});
        as_ = pr_.induction(theta(e), "e0", base.d, step);
        return as_;
    }

    // sums(S(t), k) = S(sums(t, k))
    Fact shift(const TermP& t, int k)
    {
        if (k == 0) return pr_.fact(pr_.refl(S(t)));
        Fact prev = shift(t, k - 1);
        TermP ek = V("e" + std::to_string(k));
        Fact moved = cong(prev, [&](TermP h) { return add(h, ek); });
        Fact inst = pr_.fact(pr_.substitute(as(), {{"t0", sums(t, k - 1)}, {"e0", ek}}));
        return pr_.trans(moved, inst);
    }

    // sub(S(sums(add(w,u), k)), u) = S(sums(w, k))
    DerivationP gap(int k)
    {
        if (auto it = gap_.find(k); it != gap_.end()) return it->second;
        TermP w = V("w"), u = V("u");
        auto theta = [&](TermP y) { return eq(sub(S(sums(add(w, y), k)), y), S(sums(w, k))); };
        TermP z = tm::zero();
        Fact base = pr_.chain({E(sub(S(sums(add(w, z), k)), z), S(sums(add(w, z), k))),
                               cong(E(add(w, z), w), [&](TermP h) { return S(sums(h, k)); })});
        Fact hyp = pr_.assume(theta(u));
        Fact a = cong(E(add(w, S(u)), S(add(w, u))), [&](TermP h) { return sub(S(sums(h, k)), S(u)); });
        Fact b = cong(shift(add(w, u), k), [&](TermP h) { return sub(S(h), S(u)); });
        Fact c = pr_.fact(pr_.substitute(ss(), {{"sa", S(sums(add(w, u), k))}, {"sb", u}}));
        Fact step = pr_.chain({pr_.lift(a, hyp.hyp), pr_.lift(b, hyp.hyp), pr_.lift(c, hyp.hyp), hyp});
        DerivationP d = pr_.induction(theta(u), "u", base.d, step);
        gap_[k] = d;
        return d;
    }

    // lt(u, S(sums(add(w,u), k))) = S(0)
    DerivationP below(int k)
    {
        if (auto it = below_.find(k); it != below_.end()) return it->second;
        TermP w = V("w"), u = V("u");
        TermP top = S(sums(add(w, u), k));
        Fact d = pr_.chain({E(lt(u, top), sg(sub(top, u))), cong(pr_.fact(gap(k)), [](TermP h) { return sg(h); }),
                            E(sg(S(sums(w, k))), S(tm::zero()))});
        below_[k] = d.d;
        return d.d;
    }

  private:
    Prover& pr_;
    DerivationP ss_, as_;
    std::map<int, DerivationP> gap_, below_;
};

}  // namespace

CollectionDemo demo_collection(uint64_t a, const FormulaP& phi, uint64_t q)
{
    if (!allowed_phi(phi)) throw std::invalid_argument("phi must be built from equations, & and ->: " + show(phi));
    for (auto& [name, t] : free_vars(phi))
        if (name != "x" && name != "y") throw std::invalid_argument("phi may only mention x and y, not " + name);
    if (a > 64) throw std::invalid_argument("bound too large for the demo");

    CollectionDemo demo;
    demo.a = a;
    demo.phi = phi;
    TruthOracle oracle(q);
    for (uint64_t i = 0; i < a; ++i) {
        uint64_t y = 0;
        while (y <= q && !oracle.eval(phi, {{"x", Nat(i)}, {"y", Nat(y)}}).ok()) ++y;
        if (y > q) throw PremiseFalse("no y up to " + std::to_string(q) + " with " + show(phi) + " at x = " + std::to_string(i));
        demo.witnesses.push_back(y);
    }

    TermP A = tm::numeral(a);
    TypeP fun = arrow_t(nat_t(), nat_t());
    TermP z = tm::var("z", fun);
    auto zi = [&](uint64_t i) { return tm::app(z, tm::numeral(i)); };
    auto phi_at = [&](TermP x, TermP y) { return substitute_many(phi, {{"x", x}, {"y", y}}); };

    demo.premise = fm::forall("x", N(), fm::exists("y", N(), fm::imp(eq(lt(V("x"), A), tm::numeral(1)), phi)));
    FormulaP H = fm::forall("x", N(), fm::imp(eq(lt(V("x"), A), tm::numeral(1)), phi_at(V("x"), tm::app(z, V("x")))));
    auto body = [&](TermP b) {
        FormulaP acc;
        for (uint64_t i = 0; i < a; ++i) {
            FormulaP ci = fm::exists("y", N(), fm::conj(eq(lt(V("y"), b), tm::numeral(1)), phi_at(tm::numeral(i), V("y"))));
            acc = acc ? fm::conj(acc, ci) : ci;
        }
        return acc ? acc : eq(tm::zero(), tm::zero());
    };
    demo.conclusion = fm::exists("b", N(), body(V("b")));

    Prover pr("c");
    Lemmas lem(pr);
    TermP total = tm::zero();
    for (uint64_t i = 0; i < a; ++i) total = add(total, zi(i));
    TermP bound = S(total);

    Fact h = pr.assume(H);
    Fact acc;
    bool first = true;
    TermP prefix = tm::zero();  // z(0) + ... + z(i-1)
    for (uint64_t i = 0; i < a; ++i) {
        TermP n = tm::numeral(i);
        FormulaP inst = substitute(H->a, "x", n);
        Fact hi = pr.apply(h, pr.step(12, fm::imp(H, inst), {}, n, "", 0));
        auto [v, ltf] = pr.evaluate(lt(n, A));
        if (!term_equal(v, tm::numeral(1))) throw std::logic_error("demo_collection: lt(i,a) is not 1");
        Fact phi_i = pr.mp(ltf, hi);
        int k = (int)(a - 1 - i);
        std::vector<std::pair<std::string, TermP>> sigma{{"u", zi(i)}, {"w", prefix}};
        for (int j = 1; j <= k; ++j) sigma.emplace_back("e" + std::to_string(j), zi(i + j));
        Fact below = pr.fact(pr.substitute(lem.below(k), sigma));
        Fact both = pr.conj(below, phi_i);
        FormulaP ci = fm::exists("y", N(), fm::conj(eq(lt(V("y"), bound), tm::numeral(1)), phi_at(n, V("y"))));
        Fact ex = pr.apply(both, pr.step(12, fm::imp(both.goal, ci), {}, zi(i), "", 1));
        acc = first ? ex : pr.conj(acc, ex);
        first = false;
        prefix = add(prefix, zi(i));
    }
    if (first) acc = pr.lift(pr.fact(pr.refl(tm::zero())), H);
    Fact concl = pr.apply(acc, pr.step(12, fm::imp(acc.goal, demo.conclusion), {}, bound, "", 1));
    DerivationP elim = pr.step(11, fm::imp(fm::exists("z", fun, H), demo.conclusion), {concl.d});
    DerivationP ac = pr.step(24, fm::imp(demo.premise, fm::exists("z", fun, H)));
    demo.derivation = pr.step(3, fm::imp(demo.premise, demo.conclusion), {ac, elim});

    // x |-> <w_x, 0>; 0 realizes every true formula built from equations, & and ->.
    std::function<lam::T(lam::T, uint64_t)> table = [&](lam::T x, uint64_t i) -> lam::T {
        if (i == a) return lam::lit(0);
        return lam::ifz(x, lam::lit(demo.witnesses[i]),
                        lam::let(lam::prim(Prim::Pred, {x}), [&](lam::T p) { return table(p, i + 1); }));
    };
    demo.premise_realizer =
        lam::build(lam::lam(1, [&](auto& v) { return lam::pair(table(v[0], 0), lam::lit(0)); }));
    return demo;
}

bool collection_bound_holds(const FormulaP& phi, uint64_t a, const Nat& b)
{
    TruthOracle oracle(0);
    uint64_t limit = fits_u64(b) ? to_u64(b) : UINT64_MAX;
    if (limit > 1000000) throw std::invalid_argument("bound too large to check");
    for (uint64_t i = 0; i < a; ++i) {
        bool found = false;
        for (uint64_t y = 0; y < limit && !found; ++y)
            found = oracle.eval(phi, {{"x", Nat(i)}, {"y", Nat(y)}}).ok();
        if (!found) return false;
    }
    return true;
}

uint64_t minimal_collection_bound(const FormulaP& phi, uint64_t a, uint64_t q)
{
    for (uint64_t b = 0; b <= q + 1; ++b)
        if (collection_bound_holds(phi, a, b)) return b;
    throw PremiseFalse("no bound up to " + std::to_string(q + 1));
}

CollectionRun run_collection(const CollectionDemo& demo, uint64_t fuel)
{
    CollectionRun run;
    ExtractionResult ex = extract(demo.derivation);
    run.realizer = ex.code;
    EvalResult r = apply(ex.code, demo.premise_realizer, Oracle(), fuel);
    if (!r.ok()) throw std::runtime_error("running the extracted realizer: " + r.str());
    run.bound = proj0(r.value);
    run.bound_ok = collection_bound_holds(demo.phi, demo.a, run.bound);
    run.minimal_bound = minimal_collection_bound(demo.phi, demo.a);
    return run;
}

}  // namespace ehaw
