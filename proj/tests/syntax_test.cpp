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

#include "ehaw/syntax.hpp"
#include "support.hpp"

namespace ehaw {
namespace {

using testing::Rng;
using testing::pick;

TEST(Types, InterningAndRoundTrip)
{
    TypeP f = arrow_t(nat_t(), nat_t());
    EXPECT_EQ(f, arrow_t(nat_t(), nat_t()));
    EXPECT_EQ(parse_type("N->N->N"), arrow_t(nat_t(), f));
    EXPECT_EQ(parse_type("N*N->N"), arrow_t(prod_t(nat_t(), nat_t()), nat_t()));
    for (const char* s : {"N", "N->N", "(N->N)->N", "N*N", "(N*N)*N", "N*(N->N)", "(N->N)*N->N"}) {
        TypeP t = parse_type(s);
        EXPECT_EQ(show(t), s);
        EXPECT_EQ(parse_type(show(t)), t);
    }
}

TEST(Parser, BasicFormulas)
{
    FormulaP f = parse_formula("forall x:N. x =N x");
    ASSERT_EQ(f->kind, FormulaKind::Forall);
    EXPECT_EQ(f->var, "x");
    EXPECT_EQ(f->type, nat_t());
    EXPECT_EQ(f->a->kind, FormulaKind::Eq);
    EXPECT_EQ(f->a->lhs->name, "x");

    FormulaP g = parse_formula("0 =N S(0)");
    EXPECT_TRUE(is_falsum(g));
    EXPECT_EQ(g->rhs->kind, TermKind::App);
    EXPECT_EQ(g->rhs->args[0]->kind, TermKind::Succ);

    FormulaP h = parse_formula("forall x:N->N. exists e:N. forall y:N. app(x,y) =N app(x,y)");
    EXPECT_EQ(h->type, arrow_t(nat_t(), nat_t()));
    EXPECT_EQ(h->a->a->a->lhs->sort, nat_t());
}

TEST(Parser, ErrorsCarryPositions)
{
    try {
        parse_formula("forall x:N. x =N");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.pos, 16u);
    }
    EXPECT_THROW(parse_formula("x =N ?"), SyntaxError);
    EXPECT_THROW(parse_formula("forall f:N->N. f =N 0"), SortError);
    EXPECT_THROW(parse_formula("app(0,0) =N 0"), SortError);
    EXPECT_THROW(parse_formula("add(0) =N 0"), SortError);
}

TEST(Parser, PrecedenceAndNegation)
{
    FormulaP f = parse_formula("0 =N 0 & 0 =N 0 | 0 =N 0 -> 0 =N 0 -> 0 =N 0");
    ASSERT_EQ(f->kind, FormulaKind::Imp);
    EXPECT_EQ(f->a->kind, FormulaKind::Or);
    EXPECT_EQ(f->a->a->kind, FormulaKind::And);
    EXPECT_EQ(f->b->kind, FormulaKind::Imp);
    FormulaP n = parse_formula("~ x =N 0");
    EXPECT_EQ(n->kind, FormulaKind::Imp);
    EXPECT_TRUE(is_falsum(n->b));
    EXPECT_EQ(show(n), "~(x =N 0)");
}

TEST(Parser, CombinatorsAndConstants)
{
    TermP k = parse_term("K[N,N->N]");
    EXPECT_EQ(show(k->sort), "N->(N->N)->N");
    TermP s = parse_term("app(app(app(Sig[N,N->N,N],K[N,N->N]),K[N,N]),0)");
    EXPECT_EQ(s->sort, nat_t());
    EXPECT_THROW(parse_term("app(app(Sig[N,N,N],K[N,N]),0)"), SortError);
    TermP f = parse_term("F[12345678901234567890:N->N]");
    EXPECT_EQ(f->heo, parse_nat("12345678901234567890"));
    EXPECT_TRUE(has_heo(f));
    EXPECT_EQ(parse_term("3")->kind, TermKind::App);
    EXPECT_EQ(show(parse_term("2")), "S(S(0))");
    TermP r = parse_term("app(app(app(R[N],0),K[N,N]),n)");
    EXPECT_EQ(r->sort, nat_t());
    VarTypes ctx{{"f", arrow_t(nat_t(), nat_t())}};
    EXPECT_EQ(parse_term("app(f,x)", ctx)->sort, nat_t());
}

const char* kSamples[] = {
    "forall x:N. x =N x",
    "0 =N S(0)",
    "forall x:N. exists y:N. y =N add(x,x)",
    "(x =N 0 | exists z:N. x =N S(z)) & ~(x =N S(x))",
    "forall f:N->N. exists g:N->N. forall n:N. app(g,n) =N app(f,S(n))",
    "forall x:N*N. app(D0[N,N],x) =N app(D0[N,N],x) -> (exists y:N. y =N y -> 0 =N 0)",
    "(forall x:N. x =N x) -> exists y:N. y =N y",
    "F[7:N] =N F[7:N]",
    "app(K[N,N],0) =N->N app(K[N,N],S(0))",
};

TEST(Parser, PrintParseRoundTrip)
{
    for (const char* s : kSamples) {
        FormulaP f = parse_formula(s);
        std::string shown = show(f);
        FormulaP g = parse_formula(shown);
        EXPECT_TRUE(syntactic_equal(f, g)) << s << " => " << shown;
        EXPECT_EQ(show(g), shown);
    }
}

TEST(Substitution, Examples)
{
    FormulaP f = parse_formula("x =N x");
    EXPECT_EQ(show(substitute(f, "x", tm::S(tm::zero()))), "S(0) =N S(0)");
    FormulaP g = parse_formula("forall x:N. x =N y");
    FormulaP h = substitute(g, "y", tm::var("x", nat_t()));
    EXPECT_EQ(show(h), "forall x1:N. x1 =N x");
    EXPECT_FALSE(free_for(tm::var("x", nat_t()), "y", g));
    EXPECT_TRUE(free_for(tm::var("z", nat_t()), "y", g));
    FormulaP p = substitute(f, "x", tm::heo(7, nat_t()));
    EXPECT_TRUE(has_heo(p));
    EXPECT_THROW(substitute(f, "x", tm::succ()), SortError);
    EXPECT_TRUE(syntactic_equal(substitute(g, "x", tm::zero()), g));
}

TEST(Substitution, AlphaEquivalence)
{
    EXPECT_TRUE(alpha_equal(parse_formula("forall x:N. x =N y"), parse_formula("forall z:N. z =N y")));
    EXPECT_FALSE(alpha_equal(parse_formula("forall x:N. x =N y"), parse_formula("forall y:N. y =N y")));
    EXPECT_FALSE(alpha_equal(parse_formula("forall x:N. x =N 0"), parse_formula("exists x:N. x =N 0")));
    EXPECT_FALSE(alpha_equal(parse_formula("forall x:N. forall y:N. x =N y"),
                             parse_formula("forall x:N. forall y:N. y =N x")));
}

TEST(SubformulaTable, Examples)
{
    auto t1 = subformula_table(parse_formula("0 =N 0 | 0 =N S(0)"));
    ASSERT_EQ(t1.size(), 3u);
    EXPECT_EQ(show(t1[1].formula), "0 =N 0");
    EXPECT_EQ(show(t1[2].formula), "0 =N S(0)");
    EXPECT_EQ(t1[0].child0, 1);
    EXPECT_EQ(t1[0].child1, 2);
    for (auto& e : t1) EXPECT_TRUE(e.vars.empty());

    auto t2 = subformula_table(parse_formula("exists x:N. x =N S(S(0))"));
    ASSERT_EQ(t2.size(), 2u);
    EXPECT_TRUE(t2[0].vars.empty());
    EXPECT_EQ(show(t2[1].vars), "x:N");

    auto t3 = subformula_table(parse_formula("forall x:N. exists y:N. y =N add(x,x)"));
    ASSERT_EQ(t3.size(), 3u);
    EXPECT_EQ(show(t3[2].vars), "x:N, y:N");

    auto t4 = subformula_table(parse_formula("(forall x:N. x =N x) & forall x:N. x =N 0"));
    ASSERT_EQ(t4.size(), 5u);
    EXPECT_EQ(t4[3].formula->var, "x1");

    EXPECT_THROW(subformula_table(parse_formula("forall f:N->N. 0 =N 0")), NotFirstOrder);
}

// Random first-order formulas over a small pool of names.
TermP random_fo_term(Rng& rng, int depth)
{
    static const char* names[] = {"x", "y", "z"};
    switch (depth <= 0 ? pick(rng, 2) : pick(rng, 4)) {
    case 0: return tm::var(names[pick(rng, 3)], nat_t());
    case 1: return tm::zero();
    case 2: return tm::S(random_fo_term(rng, depth - 1));
    default: return tm::prim(Prim::Add, {random_fo_term(rng, depth - 1), random_fo_term(rng, depth - 1)});
    }
}

FormulaP random_fo_formula(Rng& rng, int depth)
{
    static const char* names[] = {"x", "y", "z"};
    switch (depth <= 0 ? 0 : pick(rng, 6)) {
    case 0: return fm::eq(random_fo_term(rng, 2), random_fo_term(rng, 2));
    case 1: return fm::conj(random_fo_formula(rng, depth - 1), random_fo_formula(rng, depth - 1));
    case 2: return fm::disj(random_fo_formula(rng, depth - 1), random_fo_formula(rng, depth - 1));
    case 3: return fm::imp(random_fo_formula(rng, depth - 1), random_fo_formula(rng, depth - 1));
    case 4: return fm::exists(names[pick(rng, 3)], nat_t(), random_fo_formula(rng, depth - 1));
    default: return fm::forall(names[pick(rng, 3)], nat_t(), random_fo_formula(rng, depth - 1));
    }
}

std::vector<std::string> fv_names(const VarList& vs)
{
    std::vector<std::string> r;
    for (auto& v : vs) r.push_back(v.first);
    std::sort(r.begin(), r.end());
    return r;
}

TEST(SyntaxProperties, SubstitutionAndFreeVariables)
{
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        FormulaP f = random_fo_formula(rng, 4);
        TermP t = random_fo_term(rng, 2);
        std::string x = std::string(1, "xyz"[pick(rng, 3)]);
        FormulaP g = substitute(f, x, t);
        if (!occurs_free(x, f)) {
            EXPECT_TRUE(syntactic_equal(f, g));
            continue;
        }
        std::set<std::string> expect;
        for (auto& v : free_vars(f))
            if (v.first != x) expect.insert(v.first);
        for (auto& v : free_vars(t)) expect.insert(v.first);
        auto got = fv_names(free_vars(g));
        EXPECT_EQ(std::vector<std::string>(expect.begin(), expect.end()), got) << show(f) << " [" << show(t) << "/" << x << "]";
    }
}

TEST(SyntaxProperties, RoundTripRenamingAndTables)
{
    Rng rng(9);
    for (int i = 0; i < 400; ++i) {
        FormulaP f = random_fo_formula(rng, 4);
        FormulaP g = parse_formula(show(f));
        EXPECT_TRUE(syntactic_equal(f, g)) << show(f);
        FormulaP r = rename_apart(f);
        EXPECT_TRUE(alpha_equal(f, r)) << show(f) << " vs " << show(r);
        auto table = subformula_table(f);
        EXPECT_LE(table.size(), node_count(f));
        auto again = subformula_table(f);
        ASSERT_EQ(table.size(), again.size());
        for (size_t j = 0; j < table.size(); ++j) {
            EXPECT_TRUE(syntactic_equal(table[j].formula, again[j].formula));
            for (auto& v : free_vars(table[j].formula)) {
                bool listed = std::any_of(table[j].vars.begin(), table[j].vars.end(),
                                          [&](auto& w) { return w.first == v.first; });
                EXPECT_TRUE(listed) << show(table[j].formula);
            }
        }
    }
}

}  // namespace
}  // namespace ehaw
