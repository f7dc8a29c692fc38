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

#include "ehaw/serialize.hpp"
#include "support.hpp"

namespace ehaw {
namespace {

Json strip_indices(Json j)
{
    if (j.is_object()) {
        if (j.contains("closure")) j.erase("index");
        for (auto& [k, v] : j.items()) v = strip_indices(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_indices(v);
    }
    return j;
}

TEST(Serialize, ExpressionsRoundTrip)
{
    testing::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        ExprP e = testing::random_expr(rng, 2, 4);
        Json j = expr_to_json(*e);
        ExprP back = expr_from_json(Json::parse(j.dump()));
        EXPECT_EQ(encode_closure(back, {1, 2}), encode_closure(e, {1, 2})) << j.dump();
    }
}

TEST(Serialize, CodesRoundTripThroughTheClosure)
{
    testing::Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        Nat a = testing::random_code(rng);
        Json j = code_to_json(a, 2);
        EXPECT_EQ(j["schema"], "ehaw.code/1");
        EXPECT_EQ(code_from_json(j), a);
        EXPECT_EQ(code_from_json(strip_indices(j)), a) << j.dump();
    }
}

TEST(Serialize, NumbersThatAreNotClosures)
{
    Json j = code_to_json(Nat(0));
    EXPECT_EQ(j["index"], "0");
    EXPECT_EQ(code_from_json(Json("123456789012345678901234567890")), Nat("123456789012345678901234567890"));
}

TEST(Serialize, Oracles)
{
    Oracle p({{3, 1}, {0, 2}, {Nat("99999999999999999999"), 0}});
    Json j = oracle_to_json(p);
    EXPECT_EQ(j["schema"], "ehaw.oracle/1");
    EXPECT_EQ(oracle_from_json(Json::parse(j.dump())), p);
    EXPECT_EQ(oracle_from_json(Json("{0:2,3:1}")), Oracle({{0, 2}, {3, 1}}));
    EXPECT_TRUE(oracle_from_json(oracle_to_json(Oracle())).empty());
}

TEST(Serialize, Verdicts)
{
    EXPECT_EQ(verdict_to_json(Verdict::holds()), Json({{"verdict", "Holds"}}));
    Json f = verdict_to_json(Verdict::exhausted("fuel"));
    EXPECT_EQ(f["verdict"], "Exhausted");
    EXPECT_EQ(f["reason"], "fuel");
}

TEST(Serialize, MalformedInput)
{
    EXPECT_THROW(expr_from_json(Json::parse(R"({"op":"warp"})")), std::invalid_argument);
    EXPECT_THROW(expr_from_json(Json::parse(R"({"op":"pair","args":[{"op":"arg"}]})")), std::invalid_argument);
    EXPECT_THROW(expr_from_json(Json::parse(R"({"op":"num","value":"-4"})")), std::invalid_argument);
    EXPECT_THROW(expr_from_json(Json::parse(R"({"op":"prim","name":"frob","args":[]})")), std::invalid_argument);
    EXPECT_THROW(code_from_json(Json::parse(R"({"schema":"ehaw.code/1"})")), std::invalid_argument);
    EXPECT_THROW(oracle_from_json(Json::parse(R"({"entries":[[1]]})")), std::invalid_argument);
}

}  // namespace
}  // namespace ehaw
