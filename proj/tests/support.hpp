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

#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "ehaw/codes.hpp"
#include "ehaw/lam.hpp"

namespace ehaw {
inline void PrintTo(const EvalResult& r, std::ostream* os) { *os << r.str(); }
}  // namespace ehaw

namespace ehaw::testing {

using Rng = std::mt19937_64;

inline uint64_t pick(Rng& rng, uint64_t n) { return std::uniform_int_distribution<uint64_t>(0, n - 1)(rng); }

// Random machine expression over ncaps captured slots. No multiplication so that
// values stay small under recursion.
inline ExprP random_expr(Rng& rng, size_t ncaps, int depth)
{
    static const Prim safe[] = {Prim::Succ, Prim::Pred, Prim::Add, Prim::Sub, Prim::Eq,
                                Prim::Max, Prim::Lt, Prim::Sg, Prim::Nsg};
    int choice = depth <= 0 ? (int)pick(rng, 3) : (int)pick(rng, 13);
    switch (choice) {
    case 0: return cx::arg();
    case 1: return ncaps ? cx::env((uint32_t)pick(rng, ncaps)) : cx::num(pick(rng, 4));
    case 2: return cx::num(pick(rng, 6));
    case 3: {
        Prim p = safe[pick(rng, std::size(safe))];
        std::vector<ExprP> args;
        for (unsigned i = 0; i < prim_arity(p); ++i) args.push_back(random_expr(rng, ncaps, depth - 1));
        return cx::prim(p, args);
    }
    case 4: return cx::pair(random_expr(rng, ncaps, depth - 1), random_expr(rng, ncaps, depth - 1));
    case 5: return cx::proj((uint32_t)pick(rng, 2), random_expr(rng, ncaps, depth - 1));
    case 6:
        return cx::ifz(random_expr(rng, ncaps, depth - 1), random_expr(rng, ncaps, depth - 1),
                       random_expr(rng, ncaps, depth - 1));
    case 7: return cx::apply(random_expr(rng, ncaps, depth - 1), random_expr(rng, ncaps, depth - 1));
    case 8: return cx::oracle(random_expr(rng, ncaps, depth - 1));
    case 9: {
        size_t m = pick(rng, 3);
        std::vector<ExprP> caps;
        for (size_t i = 0; i < m; ++i) caps.push_back(random_expr(rng, ncaps, depth - 1));
        return cx::close(random_expr(rng, m, depth - 1), caps);
    }
    case 10: return pick(rng, 4) == 0 ? cx::self() : cx::arg();
    case 11: return cx::oracle(cx::num(pick(rng, 4)));
    default: return cx::apply(cx::num(pick(rng, 3)), random_expr(rng, ncaps, depth - 1));
    }
}

inline Nat random_code(Rng& rng, int depth = 4)
{
    size_t m = pick(rng, 3);
    std::vector<Nat> caps;
    for (size_t i = 0; i < m; ++i) caps.push_back(Nat(pick(rng, 8)));
    return encode_closure(random_expr(rng, m, depth), caps);
}

inline Oracle random_oracle(Rng& rng, unsigned max_keys = 4, unsigned key_bound = 6, unsigned val_bound = 6)
{
    std::vector<std::pair<Nat, Nat>> es;
    for (unsigned k = 0; k < key_bound && es.size() < max_keys; ++k)
        if (pick(rng, 2)) es.emplace_back(Nat(k), Nat(pick(rng, val_bound)));
    return Oracle(es);
}

inline Oracle random_extension(Rng& rng, const Oracle& p, unsigned key_bound = 6, unsigned val_bound = 6)
{
    Oracle q = p;
    for (unsigned k = 0; k < key_bound; ++k)
        if (!q.defined(Nat(k)) && pick(rng, 2)) q = q.with(Nat(k), Nat(pick(rng, val_bound)));
    return q;
}

// Curried addition and similar fixtures.
inline Nat add_code()
{
    using namespace lam;
    return build(lam::lam(2, [](auto& v) { return prim(Prim::Add, {v[0], v[1]}); }));
}

inline Nat id_code() { return build(cx::arg()); }
inline Nat succ_code() { return build(cx::prim(Prim::Succ, {cx::arg()})); }

}  // namespace ehaw::testing
