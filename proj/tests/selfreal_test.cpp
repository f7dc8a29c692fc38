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

#include "ehaw/selfreal.hpp"
#include "support.hpp"

namespace ehaw {
namespace {

const std::string kSentences = std::string(EHAW_CORPUS_DIR) + "/sentences.txt";

FormulaP F(const std::string& s) { return parse_formula(s); }

TEST(TruthEval, SmallSentences)
{
    EXPECT_TRUE(truth_eval(F("0 =N 0"), 5).ok());
    EXPECT_TRUE(truth_eval(F("exists x:N. x =N S(S(0))"), 2).ok());
    EXPECT_TRUE(truth_eval(F("exists x:N. x =N S(S(0))"), 1).exhausted());
    Verdict v = truth_eval(F("forall x:N. mul(x,0) =N 0"), 10);
    EXPECT_TRUE(v.exhausted());
    EXPECT_EQ(v.reason, "bound");
    EXPECT_TRUE(truth_eval(F("forall x:N. mul(x,1) =N 0"), 10).failed());
    EXPECT_THROW(truth_eval(F("x =N 0"), 3), std::invalid_argument);
    EXPECT_THROW(truth_eval(F("forall f:N->N. app(f,0) =N 0"), 3), NotFirstOrder);
}

TEST(TruthEval, ExplicitBoundsAreExact)
{
    EXPECT_TRUE(truth_eval(F("forall x:N. lt(x,6) =N 1 -> lt(x,7) =N 1"), 10).ok());
    EXPECT_TRUE(truth_eval(F("exists x:N. lt(x,6) =N 1 & x =N 9"), 10).failed());
    // A bound beyond Q+1 is no longer exact.
    EXPECT_TRUE(truth_eval(F("forall x:N. lt(x,30) =N 1 -> lt(x,31) =N 1"), 10).exhausted());
    EXPECT_TRUE(truth_eval(F("exists x:N. lt(x,30) =N 1 & x =N 4"), 10).ok());
}

TEST(TruthEval, CorpusLabels)
{
    auto sentences = load_sentences(kSentences);
    ASSERT_GE(sentences.size(), 20u);
    int trues = 0;
    for (auto& s : sentences) {
        ASSERT_GE(s.label, 0) << s.text;
        Verdict v = truth_eval(s.formula, 20);
        EXPECT_EQ(v.kind, s.label ? Verdict::Holds : Verdict::Fails) << s.text;
        trues += s.label;
    }
    EXPECT_GT(trues, 5);
    EXPECT_LT(trues, (int)sentences.size() - 5);
}

TEST(TMembership, Examples)
{
    TDescription t(F("exists x:N. x =N S(S(0))"), 20);
    Nat k = TDescription::key(0, {});
    EXPECT_TRUE(t_membership(Oracle(), t));
    EXPECT_TRUE(t_membership(Oracle({{k, 2}}), t));
    EXPECT_FALSE(t_membership(Oracle({{k, 3}}), t));
    // The atom below the quantifier may not carry a key, nor may a key have the wrong length.
    EXPECT_FALSE(t_membership(Oracle({{TDescription::key(1, {2}), 0}}), t));
    EXPECT_FALSE(t_membership(Oracle({{TDescription::key(0, {5}), 2}}), t));

    TDescription c(F("0 =N 0 & 0 =N 0"), 20);
    EXPECT_FALSE(t_membership(Oracle({{TDescription::key(0, {}), 0}}), c));
}

TEST(TMembership, DisjunctionTags)
{
    TDescription t(F("0 =N S(0) | 0 =N 0"), 20);
    Nat k = TDescription::key(0, {});
    EXPECT_FALSE(t_membership(Oracle({{k, 0}}), t));
    EXPECT_TRUE(t_membership(Oracle({{k, 1}}), t));
    EXPECT_FALSE(t_membership(Oracle({{k, 2}}), t));
}

TEST(TMembership, UndecidedInstancesAreReported)
{
    TDescription t(F("exists x:N. forall y:N. add(x,y) =N y"), 20);
    EXPECT_THROW(t_membership(Oracle({{TDescription::key(0, {}), 0}}), t), OracleInconclusive);
}

TEST(TMembership, ClosedUnderRestriction)
{
    testing::Rng rng(5);
    for (auto& s : load_sentences(kSentences)) {
        TDescription t(s.formula, 20);
        std::vector<Nat> keys = t.demanded_keys({}, {0, 1, 2, 3, 4}, 4);
        for (int trial = 0; trial < 30 && !keys.empty(); ++trial) {
            std::vector<std::pair<Nat, Nat>> es;
            for (auto& k : keys)
                if (testing::pick(rng, 2)) es.emplace_back(k, Nat(testing::pick(rng, 3)));
            Oracle q(es);
            if (!t.contains(q)) continue;
            for (size_t drop = 0; drop < es.size(); ++drop) {
                auto fewer = es;
                fewer.erase(fewer.begin() + drop);
                EXPECT_TRUE(t.contains(Oracle(fewer))) << s.text;
            }
        }
    }
}

TEST(SelfIndex, Atoms)
{
    Nat a = self_index(F("0 =N S(0)"));
    EXPECT_EQ(apply_chain(a, {0}, Oracle(), 1000), EvalResult::val(0));
    Nat b = self_index(F("x =N y"));
    EXPECT_EQ(apply_chain(b, {0, 3, 4}, Oracle(), 1000), EvalResult::val(0));
}

TEST(SelfIndex, DisjunctionFollowsTheTag)
{
    Nat a = self_index(F("0 =N S(0) | 0 =N 0"));
    Nat k = TDescription::key(0, {});
    EXPECT_EQ(apply_chain(a, {0}, Oracle({{k, 1}}), 1000), EvalResult::val(pair(1, 0)));
    EXPECT_EQ(apply_chain(a, {0}, Oracle({{k, 0}}), 1000), EvalResult::val(pair(0, 0)));
    EXPECT_EQ(apply_chain(a, {0}, Oracle(), 1000), EvalResult::miss(k));
}

TEST(SelfIndex, ExistentialReadsTheWitness)
{
    Nat a = self_index(F("exists x:N. x =N S(S(0))"));
    EvalResult r = apply_chain(a, {0}, Oracle({{TDescription::key(0, {}), 2}}), 1000);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(proj0(r.value), Nat(2));
}

TEST(SelfIndex, KeysCarryTheFreeVariables)
{
    // exists y. y = S(x): the key of the quantifier at x = 3 is <0, 3>.
    Nat a = self_index(F("exists y:N. y =N S(x)"));
    Nat k = TDescription::key(0, {3});
    EXPECT_EQ(apply_chain(a, {0, 3}, Oracle(), 1000), EvalResult::miss(k));
    EvalResult r = apply_chain(a, {0, 3}, Oracle({{k, 4}}), 1000);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(proj0(r.value), Nat(4));
}

TEST(RealizeTrue, Examples)
{
    TDescription t0(F("0 =N 0"), 20);
    auto r0 = realize_true(t0, {}, Oracle(), selfreal_universe(t0, {}));
    EXPECT_TRUE(r0.q.empty());
    EXPECT_TRUE(r0.verdict.ok()) << r0.verdict.str();

    TDescription t1(F("exists x:N. x =N S(S(0))"), 20);
    auto r1 = realize_true(t1, {}, Oracle(), selfreal_universe(t1, {}));
    EXPECT_EQ(r1.q, Oracle({{TDescription::key(0, {}), 2}}));
    EXPECT_EQ(proj0(r1.realizer), Nat(2));
    EXPECT_TRUE(r1.verdict.ok()) << r1.verdict.str();

    TDescription t2(F("0 =N S(0) | 0 =N 0"), 20);
    auto r2 = realize_true(t2, {}, Oracle(), selfreal_universe(t2, {}));
    EXPECT_EQ(r2.q, Oracle({{TDescription::key(0, {}), 1}}));
    EXPECT_TRUE(r2.verdict.ok()) << r2.verdict.str();
}

TEST(RealizeTrue, FalseAndUndecidedPremises)
{
    TDescription f(F("0 =N S(0)"), 20);
    EXPECT_THROW(realize_true(f, {}, Oracle(), selfreal_universe(f, {})), PremiseFalse);
    TDescription u(F("forall x:N. add(x,0) =N x"), 20);
    ForcingUniverse any;
    EXPECT_THROW(realize_true(u, {}, Oracle(), any), OracleInconclusive);
}

TEST(RealizeTrue, ExtendsTheGivenCondition)
{
    TDescription t(F("exists x:N. lt(x,5) =N 1 & mul(x,x) =N 4"), 20);
    Nat k = TDescription::key(0, {});
    auto r = realize_true(t, {}, Oracle({{k, 2}}), selfreal_universe(t, {}));
    EXPECT_EQ(r.q, Oracle({{k, 2}}));
    EXPECT_TRUE(r.verdict.ok());
    EXPECT_THROW(realize_true(t, {}, Oracle({{k, 3}}), selfreal_universe(t, {})), std::invalid_argument);
}

TEST(RealizeTrue, OpenFormulaAtArguments)
{
    TDescription t(F("exists y:N. lt(y,9) =N 1 & y =N add(x,x)"), 20);
    for (uint64_t x : {0, 1, 2}) {
        auto r = realize_true(t, {Nat(x)}, Oracle(), selfreal_universe(t, {Nat(x)}));
        EXPECT_EQ(proj0(r.realizer), Nat(2 * x));
        EXPECT_TRUE(r.verdict.ok()) << x;
    }
}

TEST(TruthFromRealizer, FabricatedLeftTag)
{
    TDescription t(F("0 =N S(0) | 0 =N 0"), 20);
    ForcingUniverse u = selfreal_universe(t, {});
    ForcingEngine e(u);
    for (const Oracle& p : e.conditions())
        for (uint64_t c : {0, 1, 2}) {
            TruthReport rep = truth_from_realizer(t, {}, p, pair(0, c), pair(0, c), u);
            EXPECT_TRUE(rep.check.failed()) << p.str() << " " << c;
            EXPECT_TRUE(rep.agreement.ok());
        }
}

TEST(TruthFromRealizer, RealizedOutputAgrees)
{
    TDescription t(F("exists x:N. lt(x,3) =N 1 & (x =N 2 | x =N 7)"), 20);
    ForcingUniverse u = selfreal_universe(t, {});
    auto r = realize_true(t, {}, Oracle(), u);
    TruthReport rep = truth_from_realizer(t, {}, r.q, r.realizer, r.realizer, u);
    EXPECT_TRUE(rep.check.ok());
    EXPECT_TRUE(rep.truth.ok());
    EXPECT_TRUE(rep.agreement.ok());
}

TEST(SelfrealProperties, RoundTripOnCorpus)
{
    for (auto& s : load_sentences(kSentences)) {
        TDescription t(s.formula, 20);
        if (s.label == 1) {
            auto r = realize_true(t, {}, Oracle(), selfreal_universe(t, {}));
            EXPECT_TRUE(r.verdict.ok()) << s.text << ": " << r.verdict.str();
            EXPECT_TRUE(t.contains(r.q));
        } else {
            EXPECT_THROW(realize_true(t, {}, Oracle(), selfreal_universe(t, {})), PremiseFalse) << s.text;
        }
        ForcingUniverse small = selfreal_universe(t, {});
        bool whole = small.key_set.size() <= 2;
        if (!whole) small.key_set.resize(2);
        RealizerSearch found = search_realizers(t, small);
        EXPECT_EQ(found.disagreements, 0u) << s.text << ": " << found.first_disagreement;
        if (s.label == 0) EXPECT_EQ(found.holds, 0u) << s.text;
        else if (whole) EXPECT_GT(found.holds, 0u) << s.text;
    }
}

}  // namespace
}  // namespace ehaw
