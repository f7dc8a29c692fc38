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

#include <set>

#include "ehaw/codes.hpp"
#include "ehaw/lam.hpp"
#include "support.hpp"

namespace ehaw {
namespace {

using testing::Rng;

TEST(Pairing, MatchesDiagonalEnumeration)
{
    // Walk the diagonals a+b = s with b increasing and number the pairs in order.
    uint64_t counter = 0;
    for (uint64_t s = 0; s < 399; ++s) {
        for (uint64_t b = 0; b <= s; ++b, ++counter) {
            uint64_t a = s - b;
            if (a >= 200 || b >= 200) continue;
            Nat z = pair(Nat(a), Nat(b));
            ASSERT_EQ(z, Nat(counter)) << a << "," << b;
            ASSERT_EQ(proj0(z), Nat(a));
            ASSERT_EQ(proj1(z), Nat(b));
        }
    }
    EXPECT_EQ(pair(0, 0), Nat(0));
}

TEST(Pairing, LargeArgumentsRoundTrip)
{
    Nat a = Nat(1) << 300, b = (Nat(1) << 257) + 12345;
    Nat z = pair(a, b);
    EXPECT_EQ(proj0(z), a);
    EXPECT_EQ(proj1(z), b);
}

TEST(Pairing, TuplesAndComponents)
{
    Nat t = tuple({4, 5, 6});
    EXPECT_EQ(t, pair(4, pair(5, 6)));
    EXPECT_EQ(component(t, 0, 3), Nat(4));
    EXPECT_EQ(component(t, 1, 3), Nat(5));
    EXPECT_EQ(component(t, 2, 3), Nat(6));
    EXPECT_EQ(tuple({9}), Nat(9));
    EXPECT_EQ(tuple({}), Nat(0));
    EXPECT_EQ(proj(0, pair(7, 9)), Nat(7));
}

TEST(Machine, BasicApplications)
{
    Oracle none;
    EXPECT_EQ(apply(testing::id_code(), 5, none, 10), EvalResult::val(5));
    Nat q = build(cx::oracle(cx::arg()));
    EXPECT_EQ(apply(q, 3, Oracle({{3, 8}}), 10), EvalResult::val(8));
    EXPECT_EQ(apply(q, 3, none, 10), EvalResult::miss(3));
    EXPECT_EQ(apply(testing::succ_code(), 4, none, 10), EvalResult::val(5));
    EXPECT_EQ(apply(build(cx::pair(cx::num(1), cx::arg())), 9, none, 10), EvalResult::val(pair(1, 9)));
    EXPECT_EQ(apply(1, 0, none, 10).kind, EvalResult::InvalidCode);
    EXPECT_EQ(apply(testing::id_code(), 5, none, 0).kind, EvalResult::FuelExhausted);
}

TEST(Machine, ZeroIsTheConstantZeroFunction)
{
    auto cl = decode_closure(0);
    ASSERT_TRUE(cl);
    EXPECT_EQ(build(cx::num(0)), Nat(0));
    EXPECT_EQ(apply(0, 77, Oracle(), 5), EvalResult::val(0));
}

TEST(Machine, SmnLaws)
{
    Oracle none;
    Nat add = testing::add_code();
    EXPECT_EQ(apply(smn(add, {3}), 4, none, 100), EvalResult::val(7));
    Nat k = lam::build(lam::lam(2, [](auto& v) { return v[0]; }));
    EXPECT_EQ(apply(smn(k, {11}), 999, none, 100), EvalResult::val(11));
    Nat id = testing::id_code();
    EXPECT_EQ(apply(smn(id, {}), 42, none, 100), EvalResult::val(42));
    EXPECT_THROW(smn(1, {}), InvalidCodeError);
}

TEST(Machine, FixpointFactorial)
{
    using namespace lam;
    Nat a = build(lam::lam(2, [](auto& v) {
        return ifz(v[1], lit(1),
                   prim(Prim::Mul, {v[1], app(v[0], prim(Prim::Pred, {v[1]}))}));
    }));
    Nat e = fixpoint(a);
    uint64_t f = 1;
    for (uint64_t n = 0; n <= 8; ++n) {
        if (n) f *= n;
        EXPECT_EQ(apply(e, n, Oracle(), 10000), EvalResult::val(f)) << n;
    }
}

TEST(Machine, FixpointDivergesAtEveryFuel)
{
    using namespace lam;
    Nat a = build(lam::lam(2, [](auto& v) { return app(v[0], v[1]); }));
    Nat e = fixpoint(a);
    for (uint64_t fuel : {1, 10, 100, 1000, 100000})
        EXPECT_EQ(apply(e, 3, Oracle(), fuel).kind, EvalResult::FuelExhausted);
}

TEST(Machine, FixpointWithConstantFunctional)
{
    using namespace lam;
    Nat a = build(lam::lam(2, [](auto& v) { return prim(Prim::Succ, {v[1]}); }));
    Nat e = fixpoint(a);
    EXPECT_EQ(apply(e, 5, Oracle(), 100), apply_chain(a, {123, 5}, Oracle(), 100));
}

TEST(Machine, MalformedExpressionsAreRejected)
{
    EXPECT_THROW(build(cx::env(0)), MalformedExpr);
    EXPECT_THROW(cx::close(cx::env(2), {cx::arg()}), MalformedExpr);
}

TEST(Encoding, RoundTripOnRandomClosures)
{
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        size_t m = testing::pick(rng, 3);
        std::vector<Nat> caps;
        for (size_t j = 0; j < m; ++j) caps.push_back(Nat(testing::pick(rng, 1000)) << testing::pick(rng, 100));
        ExprP body = testing::random_expr(rng, m, 5);
        Nat n = encode_closure(body, caps);
        auto cl = decode_closure(n);
        ASSERT_TRUE(cl);
        EXPECT_EQ(cl->captured, caps);
        EXPECT_EQ(encode_closure(cl->body, cl->captured), n);
        EXPECT_EQ(show(*cl->body), show(*body));
    }
}

TEST(Encoding, DecodeIsTotalAndCanonical)
{
    int valid = 0;
    for (uint64_t n = 0; n < 20000; ++n) {
        auto cl = decode_closure(n);
        if (!cl) continue;
        ++valid;
        EXPECT_EQ(encode_closure(cl->body, cl->captured), Nat(n));
    }
    EXPECT_GT(valid, 0);
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        Nat n = Nat(rng()) * Nat(rng()) * Nat(rng());
        auto cl = decode_closure(n);
        if (cl) EXPECT_EQ(encode_closure(cl->body, cl->captured), n);
    }
}

TEST(Oracles, EncodingIsABijection)
{
    std::set<std::string> seen;
    for (uint64_t n = 0; n < 3000; ++n) {
        Oracle o = Oracle::decode(n);
        EXPECT_EQ(o.encode(), Nat(n));
        EXPECT_TRUE(seen.insert(o.str()).second);
    }
    Oracle p = Oracle::parse("{ 3:8, 1:2 }");
    EXPECT_EQ(p.str(), "{1:2,3:8}");
    EXPECT_EQ(Oracle::decode(p.encode()), p);
    EXPECT_TRUE(Oracle().subset_of(p));
    EXPECT_TRUE(Oracle({{1, 2}}).subset_of(p));
    EXPECT_FALSE(Oracle({{1, 3}}).subset_of(p));
    EXPECT_THROW(Oracle::parse("{1:2,1:3}"), std::invalid_argument);
}

TEST(MachineProperties, FuelAndOracleMonotonicity)
{
    Rng rng(11);
    int values = 0;
    for (int i = 0; i < 600; ++i) {
        Nat a = testing::random_code(rng);
        Nat n(testing::pick(rng, 6));
        Oracle p = testing::random_oracle(rng);
        Oracle q = testing::random_extension(rng, p);
        uint64_t f = 50 + testing::pick(rng, 500);
        EvalResult r = apply(a, n, p, f);
        EXPECT_EQ(r, apply(a, n, p, f)) << "determinism";
        if (!r.ok()) continue;
        ++values;
        EXPECT_EQ(apply(a, n, p, f * 4), r) << "fuel monotonicity";
        EXPECT_EQ(apply(a, n, q, f), r) << "oracle monotonicity";
    }
    EXPECT_GT(values, 50);
}

}  // namespace
}  // namespace ehaw
