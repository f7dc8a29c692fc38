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

#include <gtest/gtest.h>

#include "ehaw/valuation.hpp"
#include "support.hpp"

namespace ehaw {
namespace {

using testing::Rng;
using testing::pick;

const TypeP N = nat_t();
const TypeP NN = arrow_t(nat_t(), nat_t());
const TypeP NNN = arrow_t(nat_t(), NN);

TEST(ConstantCodes, Laws)
{
    const ConstantCodes& c = constant_codes();
    Oracle p({{0, 3}});
    Nat a = testing::random_code(*new Rng(1));
    EXPECT_EQ(apply(c.S, 6, p, 100), EvalResult::val(7));
    EXPECT_EQ(apply_chain(c.K, {a, 99}, p, 100), EvalResult::val(a));
    EXPECT_EQ(apply_chain(c.D, {4, 9}, p, 100), EvalResult::val(pair(4, 9)));
    EXPECT_EQ(apply_chain(c.D0, {pair(4, 9)}, p, 100), EvalResult::val(4));
    EXPECT_EQ(apply_chain(c.D1, {pair(4, 9)}, p, 100), EvalResult::val(9));
    Nat add = testing::add_code();
    Nat succ = testing::succ_code();
    // Sig add succ n = n + (n + 1)
    EXPECT_EQ(apply_chain(c.Sig, {add, succ, 5}, p, 1000), EvalResult::val(11));
    EXPECT_EQ(constant_codes_plain().R, c.R);
}

TEST(ConstantCodes, RecursorEquations)
{
    const ConstantCodes& c = constant_codes();
    Rng rng(5);
    Oracle none;
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        Nat a(pick(rng, 10));
        static const Prim ops[] = {Prim::Add, Prim::Sub, Prim::Max, Prim::Eq, Prim::Lt};
        Prim op = ops[pick(rng, 5)];
        Nat k(pick(rng, 4));
        bool swap = pick(rng, 2);
        Nat b = lam::build(lam::lam(2, [&](auto& v) {
            return lam::prim(Prim::Succ, {lam::prim(op, {v[swap ? 1 : 0], lam::prim(Prim::Add, {v[swap ? 0 : 1], lam::lit(k)})})});
        }));
        Nat n(pick(rng, 5));
        EXPECT_EQ(apply_chain(c.R, {a, b, 0}, none, 1000), EvalResult::val(a));
        EvalResult prev = apply_chain(c.R, {a, b, n}, none, 100000);
        if (!prev.ok()) continue;
        EvalResult next = apply_chain(c.R, {a, b, n + 1}, none, 200000);
        EvalResult direct = apply_chain(b, {prev.value, n}, none, 100000);
        if (!next.ok() || !direct.ok()) continue;
        ++checked;
        EXPECT_EQ(next, direct);
    }
    EXPECT_EQ(checked, 200);
}

TEST(Value, Examples)
{
    Oracle none;
    EXPECT_EQ(value(tm::numeral(2), none, 100), EvalResult::val(2));
    EXPECT_EQ(value(parse_term("S(S(0))"), Oracle({{1, 1}}), 100), EvalResult::val(2));

    // g = \r n. r, so R 5 g 1 = g 5 0 = 5.
    Nat g = lam::build(lam::lam(2, [](auto& v) { return v[0]; }));
    TermP t = tm::app(tm::R(N), {tm::heo(5, N), tm::heo(g, NNN), tm::numeral(1)});
    EXPECT_EQ(value(t, none, 10000), EvalResult::val(5));

    TermP d = tm::app(tm::D0(N, N), tm::app(tm::D(N, N), {tm::numeral(1), tm::zero()}));
    EXPECT_EQ(value(d, none, 1000), EvalResult::val(1));
    EXPECT_EQ(value(parse_term("app(D1[N,N], app(app(D[N,N], S(0)), 0))"), none, 1000), EvalResult::val(0));
    EXPECT_EQ(value(parse_term("add(S(0), mul(S(S(0)), S(S(0))))"), none, 1000), EvalResult::val(5));

    EXPECT_THROW(value(parse_term("x"), none, 10), UnboundVariable);
    EXPECT_EQ(value(parse_term("S(x)"), none, 10, {{"x", 4}}), EvalResult::val(5));
}

TEST(Value, OracleConstants)
{
    Nat q = build(cx::oracle(cx::arg()));
    TermP t = tm::app(tm::heo(q, NN), tm::numeral(2));
    EXPECT_EQ(value(t, Oracle({{2, 7}}), 100), EvalResult::val(7));
    EXPECT_EQ(value(t, Oracle(), 100), EvalResult::miss(2));
    EXPECT_EQ(value(t, Oracle({{2, 7}}), 0).kind, EvalResult::FuelExhausted);
}

TEST(ValuePlain, IdentityFromCombinators)
{
    TermP skk = tm::app(tm::app(tm::Sig(N, NN, N), tm::K(N, NN)), tm::K(N, N));
    for (uint64_t n : {0, 3, 17})
        EXPECT_EQ(value_plain(tm::app(skk, tm::numeral(n)), 1000), EvalResult::val(n));
    EXPECT_EQ(value_plain(tm::zero(), 1), EvalResult::val(0));
}

TEST(TermIndex, V2Law)
{
    Oracle none;
    VarList x{{"x", N}};
    EXPECT_EQ(apply(term_index(parse_term("x"), x), 8, none, 100), EvalResult::val(8));
    EXPECT_EQ(apply(term_index(parse_term("S(x)"), x), 4, none, 100), EvalResult::val(5));
    Nat closed = term_index(tm::numeral(3), {});
    EXPECT_EQ(apply(closed, 0, none, 100), EvalResult::val(3));
    EXPECT_THROW(term_index(parse_term("S(y)"), x), UnboundVariable);

    VarTypes types{{"f", NN}};
    TermP fy = parse_term("app(f,y)", types);
    Nat d = term_index(fy, {{"f", NN}, {"y", N}});
    Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        Nat a = testing::random_code(rng);
        Nat b(pick(rng, 5));
        Oracle p = testing::random_oracle(rng);
        EvalResult direct = apply(a, b, p, 5000);
        EvalResult via = apply_chain(d, {a, b}, p, 20000);
        if (direct.kind == EvalResult::FuelExhausted || via.kind == EvalResult::FuelExhausted) continue;
        EXPECT_EQ(via, direct);
        EXPECT_EQ(value(fy, p, 20000, {{"f", a}, {"y", b}}).kind == EvalResult::Value, direct.ok());
    }
    EXPECT_EQ(term_index_plain(fy, {{"f", NN}, {"y", N}}), d);
}

// Random closed terms of type N over the constants and oracle-reading F constants.
TermP random_closed(Rng& rng, int depth)
{
    int c = depth <= 0 ? (int)pick(rng, 2) : (int)pick(rng, 8);
    switch (c) {
    case 0: return tm::zero();
    case 1: return tm::numeral(pick(rng, 4));
    case 2: return tm::S(random_closed(rng, depth - 1));
    case 3: return tm::prim(Prim::Add, {random_closed(rng, depth - 1), random_closed(rng, depth - 1)});
    case 4: return tm::app(tm::heo(testing::random_code(rng, 3), NN), random_closed(rng, depth - 1));
    case 5: return tm::app(tm::K(N, N), {random_closed(rng, depth - 1), random_closed(rng, depth - 1)});
    case 6:
        return tm::app(tm::R(N), {random_closed(rng, depth - 1), tm::heo(testing::random_code(rng, 3), NNN),
                                  tm::numeral(pick(rng, 3))});
    default:
        return tm::app(tm::D1(N, N), tm::app(tm::D(N, N), {random_closed(rng, depth - 1), random_closed(rng, depth - 1)}));
    }
}

TEST(ValuationProperties, MonotoneInOracleAndFuel)
{
    Rng rng(21);
    int defined = 0;
    for (int i = 0; i < 500; ++i) {
        TermP t = random_closed(rng, 3);
        Oracle p = testing::random_oracle(rng);
        Oracle q = testing::random_extension(rng, p);
        EvalResult r = value(t, p, 20000);
        if (!r.ok()) continue;
        ++defined;
        EXPECT_EQ(value(t, q, 20000), r) << show(t);
        EXPECT_EQ(value(t, p, 80000), r) << show(t);
        Machine m(Oracle(), 20000);
        EvalResult plain = value(m, t, {});
        if (plain.ok()) EXPECT_EQ(plain, r);
    }
    EXPECT_GT(defined, 150);
}

}  // namespace
}  // namespace ehaw
