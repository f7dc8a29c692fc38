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

#include <functional>

#include "ehaw/collection.hpp"
#include "ehaw/extraction.hpp"
#include "ehaw/lam.hpp"
#include "ehaw/realizability.hpp"
#include "ehaw/selfreal.hpp"

namespace ehaw {
namespace {

// Least b with: every x < a has some y < b and rel(x, y).
uint64_t brute_minimal_bound(uint64_t a, const std::function<bool(uint64_t, uint64_t)>& rel)
{
    uint64_t b = 0;
    for (uint64_t x = 0; x < a; ++x) {
        uint64_t y = 0;
        while (!rel(x, y)) ++y;
        b = std::max(b, y + 1);
    }
    return b;
}

bool brute_bound_ok(uint64_t a, uint64_t b, const std::function<bool(uint64_t, uint64_t)>& rel)
{
    for (uint64_t x = 0; x < a; ++x) {
        bool found = false;
        for (uint64_t y = 0; y < b; ++y) found = found || rel(x, y);
        if (!found) return false;
    }
    return true;
}

std::vector<ForcingUniverse> small_universes()
{
    std::vector<ForcingUniverse> out;
    for (auto keys : {std::vector<Nat>{0}, std::vector<Nat>{0, 1}, std::vector<Nat>{3, 7}}) {
        ForcingUniverse u;
        u.key_set = keys;
        u.val_bound = keys.size() == 1 ? 2 : 1;
        out.push_back(u);
    }
    return out;
}

TEST(Collection, DoublingUpToThree)
{
    auto rel = [](uint64_t x, uint64_t y) { return y == x + x; };
    EXPECT_EQ(brute_minimal_bound(3, rel), 5u);

    CollectionDemo d = demo_collection(3, parse_formula("y =N add(x,x)"));
    EXPECT_NO_THROW(check_derivation(d.derivation));
    EXPECT_EQ(d.witnesses, (std::vector<uint64_t>{0, 2, 4}));
    CollectionRun r = run_collection(d);
    ASSERT_TRUE(fits_u64(r.bound));
    EXPECT_TRUE(brute_bound_ok(3, to_u64(r.bound), rel));
    EXPECT_TRUE(r.bound_ok);
    EXPECT_EQ(r.bound, Nat(7));  // 1 + 0 + 2 + 4
    EXPECT_EQ(r.minimal_bound, 5u);
}

TEST(Collection, EmptyRange)
{
    CollectionDemo d = demo_collection(0, parse_formula("y =N add(x,x)"));
    EXPECT_NO_THROW(check_derivation(d.derivation));
    CollectionRun r = run_collection(d);
    EXPECT_TRUE(r.bound_ok);
    EXPECT_EQ(r.minimal_bound, 0u);
}

TEST(Collection, SuccessorUpToTwo)
{
    auto rel = [](uint64_t x, uint64_t y) { return y == x + 1; };
    CollectionDemo d = demo_collection(2, parse_formula("y =N S(x)"));
    CollectionRun r = run_collection(d);
    ASSERT_TRUE(fits_u64(r.bound));
    EXPECT_TRUE(brute_bound_ok(2, to_u64(r.bound), rel));
    EXPECT_TRUE(brute_bound_ok(2, 3, rel));
    EXPECT_EQ(r.minimal_bound, brute_minimal_bound(2, rel));
}

TEST(Collection, CompoundRelation)
{
    // y >= x and y*y > x: least witnesses 1, 2, 2, 3.
    auto rel = [](uint64_t x, uint64_t y) { return y >= x && y * y > x; };
    CollectionDemo d = demo_collection(4, parse_formula("(lt(y,x) =N 1 -> 0 =N 1) & lt(x, mul(y,y)) =N 1"));
    EXPECT_EQ(d.witnesses, (std::vector<uint64_t>{1, 2, 2, 3}));
    CollectionRun r = run_collection(d);
    ASSERT_TRUE(fits_u64(r.bound));
    EXPECT_TRUE(brute_bound_ok(4, to_u64(r.bound), rel));
    EXPECT_EQ(r.bound, Nat(9));
    EXPECT_EQ(r.minimal_bound, brute_minimal_bound(4, rel));
}

TEST(Collection, RejectsFalsePremisesAndOtherShapes)
{
    EXPECT_THROW(demo_collection(2, parse_formula("y =N add(x,x) & x =N S(y)")), PremiseFalse);
    EXPECT_THROW(demo_collection(2, parse_formula("y =N x | y =N 0")), std::invalid_argument);
    EXPECT_THROW(demo_collection(2, parse_formula("y =N w")), std::invalid_argument);
}

TEST(Collection, RealizerVerifiesInSmallUniverses)
{
    CollectionDemo d = demo_collection(3, parse_formula("y =N add(x,x)"));
    CollectionRun r = run_collection(d);
    RealizerRegistry reg;
    reg.add(d.premise, d.premise_realizer);
    FormulaP phi = d.derivation->conclusion;
    // A realizer that answers with the bound 0.
    Nat wrong = lam::build(lam::lam(1, [](auto&) { return lam::pair(lam::lit(0), lam::lit(0)); }));
    for (auto& u : small_universes()) {
        ForcingEngine e(u);
        ForcingRealizability fr(e, &reg);
        for (size_t p = 0; p < e.conditions().size(); ++p) {
            EXPECT_TRUE(fr.check_single((int)p, d.premise_realizer, d.premise).ok());
            Verdict v = fr.check_single((int)p, r.realizer, phi);
            EXPECT_TRUE(v.ok()) << e.conditions()[p].str() << ": " << v.str();
            EXPECT_TRUE(fr.check_single((int)p, wrong, phi).failed());
        }
    }
}

}  // namespace
}  // namespace ehaw
