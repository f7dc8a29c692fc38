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

#include <filesystem>
#include <set>

#include "ehaw/extraction.hpp"
#include "ehaw/lam.hpp"
#include "ehaw/realizability.hpp"
#include "support.hpp"

namespace ehaw {
namespace {

namespace fs = std::filesystem;

DerivationP corpus(const std::string& name) { return load_derivation(std::string(EHAW_CORPUS_DIR) + "/" + name); }

std::vector<std::string> corpus_files()
{
    std::vector<std::string> out;
    for (auto& e : fs::directory_iterator(EHAW_CORPUS_DIR))
        if (e.path().extension() == ".proof") out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

EvalResult run(const Nat& a, const std::vector<Nat>& args, uint64_t fuel = 100000)
{
    return apply_chain(a, args, Oracle(), fuel);
}

TEST(Extraction, CorpusCoversEveryRule)
{
    std::set<int> rules;
    for (auto& f : corpus_files()) {
        SCOPED_TRACE(f);
        DerivationP d = corpus(f);
        for (Mode m : {Mode::Forcing, Mode::Plain}) {
            ExtractionResult r = extract(d, m);
            EXPECT_EQ(r.trace.size(), step_count(d));
            std::set<std::string> ids;
            for (auto& t : r.trace) {
                ids.insert(t.node);
                rules.insert(t.rule);
            }
            EXPECT_EQ(ids.size(), r.trace.size());
            EXPECT_EQ(show(r.closure_vars), show(check_derivation(d)));
        }
    }
    for (int i = 1; i <= 25; ++i) EXPECT_TRUE(rules.count(i)) << "rule " << i;
}

TEST(Extraction, Deterministic)
{
    for (auto& f : corpus_files()) {
        EXPECT_EQ(extract(corpus(f)).code, extract(corpus(f)).code) << f;
        EXPECT_EQ(extract_plain(corpus(f)).code, extract_plain(corpus(f)).code) << f;
    }
}

TEST(Extraction, IdentityAxiom)
{
    ExtractionResult r = extract(corpus("identity.proof"));
    EXPECT_TRUE(r.closure_vars.empty());
    ASSERT_EQ(r.trace.size(), 1u);
    EXPECT_EQ(r.trace[0].rule, 1);
    for (uint64_t b : {0, 7, 123456}) EXPECT_EQ(run(r.code, {b}), EvalResult::val(b));
}

TEST(Extraction, WitnessOfExistsTwo)
{
    for (Mode m : {Mode::Forcing, Mode::Plain}) {
        ExtractionResult r = extract(corpus("exists_two.proof"), m);
        EXPECT_EQ(proj0(r.code), Nat(2));
    }
}

TEST(Extraction, ChoiceFunctionDoubles)
{
    ExtractionResult r = extract(corpus("ac_double.proof"));
    Nat b = lam::build(lam::lam(1, [](auto& v) { return lam::pair(lam::prim(Prim::Add, {v[0], v[0]}), lam::lit(0)); }));
    EvalResult res = run(r.code, {b});
    ASSERT_TRUE(res.ok());
    Nat z = proj0(res.value);
    for (uint64_t n = 0; n <= 6; ++n) EXPECT_EQ(run(z, {n}), EvalResult::val(2 * n));
    Nat w = proj1(res.value);
    for (uint64_t n = 0; n <= 6; ++n) EXPECT_EQ(run(w, {n}), EvalResult::val(0));
}

TEST(Extraction, DependentChoiceSequence)
{
    ExtractionResult r = extract(corpus("dc_successor.proof"));
    Nat step = lam::build(lam::lam(2, [](auto& v) {
        return lam::tuple({lam::prim(Prim::Succ, {v[0]}), lam::lit(0), lam::lit(0)});
    }));
    for (uint64_t n0 : {0, 3}) {
        EvalResult res = run(r.code, {step, n0, 0});
        ASSERT_TRUE(res.ok());
        Nat f = component(res.value, 0, 3), g = component(res.value, 2, 3);
        EXPECT_EQ(component(res.value, 1, 3), Nat(0));
        for (uint64_t i = 0; i <= 5; ++i) {
            EXPECT_EQ(run(f, {i}), EvalResult::val(n0 + i));
            EXPECT_EQ(run(g, {i}), EvalResult::val(0));
        }
    }
    bool listed = false;
    for (auto& t : r.trace) listed |= t.rule == 25 && t.recipe.find("h b n d 0 = <n,d,0>") != std::string::npos;
    EXPECT_TRUE(listed);
}

TEST(Extraction, InductionWitness)
{
    ExtractionResult r = extract(corpus("induction.proof"));
    ASSERT_EQ(r.closure_vars.size(), 1u);
    for (uint64_t n = 0; n <= 6; ++n) {
        EvalResult res = run(r.code, {n});
        ASSERT_TRUE(res.ok());
        EXPECT_EQ(proj0(res.value), Nat(n));
    }
}

TEST(Extraction, PlainDisjunctionShapes)
{
    DerivationP inl = make_step("a", 5, parse_formula("0 =N 0 -> 0 =N 0 | (exists x:N. x =N 0)"));
    Nat a = extract_plain(inl).code;
    EXPECT_EQ(run(a, {9}), EvalResult::val(tuple({0, 9, 0})));
    EXPECT_EQ(run(extract(inl).code, {9}), EvalResult::val(pair(0, 9)));

    DerivationP dec = make_step("a", 21, parse_formula("x =N y | ~ x =N y"));
    Nat c = extract_plain(dec).code;
    Nat zero_fn = lam::build(lam::lam(1, [](auto&) { return lam::lit(0); }));
    EXPECT_EQ(run(c, {4, 4}), EvalResult::val(tuple({0, 0, zero_fn})));
    EXPECT_EQ(run(c, {4, 5}), EvalResult::val(tuple({1, 0, zero_fn})));
    Nat cf = extract(dec).code;
    EXPECT_EQ(run(cf, {2, 2}), EvalResult::val(pair(0, 0)));
    EXPECT_EQ(run(cf, {2, 3}), EvalResult::val(pair(1, 0)));

    DerivationP ext = corpus("extensionality.proof");
    Nat e = extract_plain(ext).code;
    EXPECT_EQ(run(e, {testing::id_code(), testing::id_code(), 5}), EvalResult::val(0));
}

TEST(Extraction, ChoiceReadBackFromSevenSteps)
{
    DerivationP d = corpus("ac_instance.proof");
    EXPECT_EQ(step_count(d), 7u);
    ExtractionResult r = extract(d);
    Nat b = lam::build(lam::lam(1, [](auto& v) { return lam::pair(v[0], lam::lit(0)); }));
    EvalResult res = run(r.code, {b});
    ASSERT_TRUE(res.ok());
    Nat z = proj0(proj0(res.value)), u = proj0(proj1(res.value));
    EXPECT_EQ(run(z, {5}), EvalResult::val(5));
    EXPECT_EQ(run(u, {0}), EvalResult::val(0));
}

TEST(Extraction, CheckerErrorsPropagate)
{
    DerivationP bad = make_step("m", 2, parse_formula("0 =N 0"),
                                {make_step("a", 20, parse_formula("x =N x")), make_step("b", 1, parse_formula("0 =N 0 -> 0 =N 0"))});
    EXPECT_THROW(extract(bad), RuleShapeError);
}

}  // namespace
}  // namespace ehaw

namespace ehaw {
namespace {

std::vector<ForcingUniverse> small_universes()
{
    std::vector<ForcingUniverse> out;
    for (auto keys : {std::vector<Nat>{0}, std::vector<Nat>{0, 1}, std::vector<Nat>{3, 7}}) {
        ForcingUniverse u;
        u.key_set = keys;
        u.val_bound = keys.size() == 1 ? 2 : 1;
        u.num_set = {0, 1, 2, 3, 4};
        u.fuel = 100000;
        out.push_back(u);
    }
    return out;
}

TEST(ExtractionProperties, ForcingSoundnessOnCorpus)
{
    for (auto& f : corpus_files()) {
        ExtractionResult r = extract(corpus(f));
        FormulaP phi = r.closure();
        for (auto& u : small_universes()) {
            ForcingEngine e(u);
            ForcingRealizability fr(e);
            for (size_t p = 0; p < e.conditions().size(); ++p) {
                Verdict v = fr.check_single((int)p, r.code, phi);
                EXPECT_FALSE(v.failed()) << f << " at " << e.conditions()[p].str() << ": " << v.str();
            }
        }
    }
}

TEST(ExtractionProperties, PlainSoundnessOnCorpus)
{
    for (auto& f : corpus_files()) {
        ExtractionResult r = extract_plain(corpus(f));
        FormulaP phi = r.closure();
        Verdict v = check_plain(r.code, phi, {0, 1, 2, 3, 4}, 100000);
        EXPECT_TRUE(v.ok()) << f << ": " << v.str();
        Verdict t = plain_eq(formula_type(phi), r.code, r.code, {0, 1, 2, 3, 4}, 100000);
        EXPECT_TRUE(t.ok()) << f << ": " << t.str();
    }
}

}  // namespace
}  // namespace ehaw
