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

#include "ehaw/heo.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ehaw/lam.hpp"

namespace ehaw {

std::string Verdict::str() const
{
    switch (kind) {
    case Holds: return "Holds";
    case Fails: return reason.empty() ? "Fails" : "Fails (" + reason + ")";
    default: return "Exhausted (" + reason + ")";
    }
}

Verdict operator&&(const Verdict& a, const Verdict& b)
{
    if (a.failed()) return a;
    if (b.failed()) return b;
    if (a.exhausted()) return a;
    return b;
}

Verdict operator||(const Verdict& a, const Verdict& b)
{
    if (a.ok()) return a;
    if (b.ok()) return b;
    if (a.exhausted()) return a;
    return b;
}

Verdict implies(const Verdict& a, const Verdict& b)
{
    if (a.failed() || b.ok()) return Verdict::holds();
    if (a.ok()) return b;
    return a;  // Exhausted premise, conclusion not Holds
}

std::string ForcingUniverse::digest() const
{
    std::ostringstream os;
    os << "keys={";
    for (size_t i = 0; i < key_set.size(); ++i) os << (i ? "," : "") << key_set[i];
    os << "} vals<=" << val_bound << " nums={";
    for (size_t i = 0; i < num_set.size(); ++i) os << (i ? "," : "") << num_set[i];
    os << "} fuel=" << fuel << " T=" << tset.name;
    return os.str();
}

namespace {

void add_unique(std::vector<Nat>& out, const Nat& n, size_t cap)
{
    if (out.size() >= cap) return;
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
}

Nat const_fn(const Nat& c)
{
    return lam::build(lam::lam(1, [&](auto&) { return lam::lit(c); }));
}

}  // namespace

std::vector<Nat> sample_values(TypeP t, const std::vector<Nat>& num_set,
                               const std::map<TypeP, std::vector<Nat>>& extra, size_t cap)
{
    std::vector<Nat> out;
    auto ex = extra.find(t);
    if (ex != extra.end())
        for (auto& v : ex->second) add_unique(out, v, cap);
    switch (t->kind) {
    case TypeKind::Nat:
        for (auto& n : num_set) add_unique(out, n, std::max(cap, out.size() + num_set.size()));
        break;
    case TypeKind::Prod: {
        auto l = sample_values(t->left, num_set, extra, cap);
        auto r = sample_values(t->right, num_set, extra, cap);
        if (l.empty() || r.empty()) break;
        // Diagonal first so that small caps still see every component.
        for (size_t i = 0; i < std::max(l.size(), r.size()); ++i)
            add_unique(out, pair(l[std::min(i, l.size() - 1)], r[std::min(i, r.size() - 1)]), cap);
        for (auto& a : l)
            for (auto& b : r) add_unique(out, pair(a, b), cap);
        break;
    }
    case TypeKind::Arrow: {
        add_unique(out, 0, cap);
        auto cod = sample_values(t->right, num_set, extra, cap);
        if (t->left == t->right) add_unique(out, build(cx::arg()), cap);
        if (t->left == nat_t() && t->right == nat_t()) add_unique(out, build(cx::prim(Prim::Succ, {cx::arg()})), cap);
        for (auto& c : cod) add_unique(out, const_fn(c), cap);
        for (auto& n : num_set) add_unique(out, n, cap);
        break;
    }
    }
    return out;
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Forcing:

bool ConditionSet::contains(const Oracle& p) const
{
    if (entry)
        for (auto& [k, v] : p.entries())
            if (!entry(k, v)) return false;
    return !member || member(p);
}

ForcingEngine::ForcingEngine(ForcingUniverse u) : u_(std::move(u))
{
    std::vector<Nat> keys = u_.key_set;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    u_.key_set = keys;
    if (!fits_u64(u_.val_bound) || u_.val_bound > 1000) throw std::invalid_argument("value bound too large");
    // Values each key may take, after the per-entry test.
    std::vector<std::vector<Nat>> vals(keys.size());
    double total = 1;
    for (size_t i = 0; i < keys.size(); ++i) {
        for (uint64_t v = 0; v <= to_u64(u_.val_bound); ++v)
            if (!u_.tset.entry || u_.tset.entry(keys[i], Nat(v))) vals[i].push_back(Nat(v));
        total *= double(vals[i].size() + 1);
    }
    if (total > 200000) throw std::invalid_argument("forcing universe too large: " + u_.digest());
    std::vector<size_t> digits(keys.size(), 0);
    while (true) {
        std::vector<std::pair<Nat, Nat>> es;
        for (size_t i = 0; i < keys.size(); ++i)
            if (digits[i]) es.emplace_back(keys[i], vals[i][digits[i] - 1]);
        Oracle p(es);
        if (!u_.tset.member || u_.tset.member(p)) conds_.push_back(p);
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == vals[i].size() + 1) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    std::vector<std::pair<Nat, Oracle>> sorted;
    for (auto& p : conds_) sorted.emplace_back(p.encode(), p);
    std::sort(sorted.begin(), sorted.end(), [](auto& x, auto& y) { return x.first < y.first; });
    conds_.clear();
    for (auto& [code, p] : sorted) {
        index_[code] = (int)conds_.size();
        conds_.push_back(p);
    }
}

int ForcingEngine::index_of(const Oracle& p) const
{
    auto it = index_.find(p.encode());
    return it == index_.end() ? -1 : it->second;
}

int ForcingEngine::require(const Oracle& p) const
{
    int i = index_of(p);
    if (i < 0) throw UniverseEmpty("condition " + p.str() + " is not in the universe " + u_.digest());
    return i;
}

const std::vector<int>& ForcingEngine::extensions(int p)
{
    auto it = ext_.find(p);
    if (it != ext_.end()) return it->second;
    std::vector<int> out;
    for (size_t i = 0; i < conds_.size(); ++i)
        if (conds_[p].subset_of(conds_[i])) out.push_back((int)i);
    return ext_[p] = out;
}

Applied ForcingEngine::apply(int r, const Nat& a, const Nat& n)
{
    auto key = std::make_pair(a, n);
    auto pit = pure_apply_.find(key);
    if (pit != pure_apply_.end()) return pit->second;
    auto ckey = std::make_tuple(r, a, n);
    auto cit = cond_apply_.find(ckey);
    if (cit != cond_apply_.end()) return cit->second;

    Machine m(conds_[r], u_.fuel);
    Applied out = classify(m.apply(a, n));
    if (!m.queried())
        pure_apply_[key] = out;
    else
        cond_apply_[ckey] = out;
    return out;
}

Applied ForcingEngine::classify(const EvalResult& res) const
{
    switch (res.kind) {
    case EvalResult::Value: return {Applied::Value, res.value, ""};
    case EvalResult::InvalidCode: return {Applied::Undefined, 0, ""};
    case EvalResult::FuelExhausted: return {Applied::Exhausted, 0, "fuel"};
    default:
        if (std::binary_search(u_.key_set.begin(), u_.key_set.end(), res.value)) return {Applied::Undefined, 0, ""};
        return {Applied::Exhausted, 0, "oracle"};
    }
}

const std::vector<Nat>& ForcingEngine::samples(TypeP t)
{
    auto it = samples_.find(t);
    if (it != samples_.end()) return it->second;
    return samples_[t] = sample_values(t, u_.num_set, u_.extra_samples, u_.sample_cap);
}

Verdict ForcingEngine::force_eq(int p, TypeP t, const Nat& a, const Nat& b)
{
    switch (t->kind) {
    case TypeKind::Nat:
        return a == b ? Verdict::holds() : Verdict::fails(to_string(a) + " != " + to_string(b));
    case TypeKind::Prod:
        return force_eq(p, t->left, proj0(a), proj0(b)) && force_eq(p, t->right, proj1(a), proj1(b));
    case TypeKind::Arrow: break;
    }
    auto key = std::make_tuple(p, t->id, a, b);
    auto it = eq_memo_.find(key);
    if (it != eq_memo_.end()) return it->second;

    Verdict all = Verdict::holds();
    const std::vector<Nat> dom = samples(t->left);
    const std::vector<int> qs = extensions(p);
    for (int q : qs) {
        for (auto& n : dom) {
            for (auto& m : dom) {
                Verdict same = force_eq(q, t->left, n, m);
                if (same.failed()) continue;
                Verdict some = Verdict::fails();
                for (int r : extensions(q)) {
                    Applied x = apply(r, a, n), y = apply(r, b, m);
                    Verdict here;
                    if (x.kind == Applied::Exhausted) here = Verdict::exhausted(x.reason);
                    else if (y.kind == Applied::Exhausted) here = Verdict::exhausted(y.reason);
                    else if (x.kind == Applied::Undefined || y.kind == Applied::Undefined) here = Verdict::fails();
                    else here = force_eq(r, t->right, x.value, y.value);
                    some = some || here;
                    if (some.ok()) break;
                }
                if (some.failed())
                    some = Verdict::fails("at " + conds_[q].str() + " on " + to_string(n) + "," + to_string(m));
                all = all && implies(same, some);
                if (all.failed()) return eq_memo_[key] = all;
            }
        }
    }
    return eq_memo_[key] = all;
}

Verdict force_eq(const ForcingUniverse& u, const Oracle& p, TypeP t, const Nat& a, const Nat& b)
{
    ForcingEngine e(u);
    return e.force_eq(e.require(p), t, a, b);
}

Verdict force_in(const ForcingUniverse& u, const Oracle& p, TypeP t, const Nat& a)
{
    return force_eq(u, p, t, a, a);
}

Nat default_code(TypeP)
{
    return 0;
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Oracle-free:

PlainEngine::PlainEngine(std::vector<Nat> num_set, uint64_t fuel, std::map<TypeP, std::vector<Nat>> extra,
                         size_t sample_cap)
    : num_set_(std::move(num_set)), fuel_(fuel), extra_(std::move(extra)), cap_(sample_cap)
{
}

Applied PlainEngine::apply(const Nat& a, const Nat& n)
{
    auto key = std::make_pair(a, n);
    auto it = apply_memo_.find(key);
    if (it != apply_memo_.end()) return it->second;
    static const Oracle none;
    EvalResult res = ehaw::apply(a, n, none, fuel_);
    Applied out;
    if (res.ok()) out = {Applied::Value, res.value, ""};
    else if (res.kind == EvalResult::FuelExhausted) out = {Applied::Exhausted, 0, "fuel"};
    else out = {Applied::Undefined, 0, ""};
    return apply_memo_[key] = out;
}

const std::vector<Nat>& PlainEngine::samples(TypeP t)
{
    auto it = samples_.find(t);
    if (it != samples_.end()) return it->second;
    return samples_[t] = sample_values(t, num_set_, extra_, cap_);
}

Verdict PlainEngine::eq(TypeP t, const Nat& a, const Nat& b)
{
    switch (t->kind) {
    case TypeKind::Nat:
        return a == b ? Verdict::holds() : Verdict::fails(to_string(a) + " != " + to_string(b));
    case TypeKind::Prod: return eq(t->left, proj0(a), proj0(b)) && eq(t->right, proj1(a), proj1(b));
    case TypeKind::Arrow: break;
    }
    auto key = std::make_tuple(t->id, a, b);
    auto it = eq_memo_.find(key);
    if (it != eq_memo_.end()) return it->second;
    Verdict all = Verdict::holds();
    const std::vector<Nat> dom = samples(t->left);
    for (auto& n : dom) {
        for (auto& m : dom) {
            Verdict same = eq(t->left, n, m);
            if (same.failed()) continue;
            Applied x = apply(a, n), y = apply(b, m);
            Verdict res;
            if (x.kind == Applied::Exhausted || y.kind == Applied::Exhausted) res = Verdict::exhausted("fuel");
            else if (x.kind == Applied::Undefined || y.kind == Applied::Undefined)
                res = Verdict::fails("undefined on " + to_string(n) + "," + to_string(m));
            else res = eq(t->right, x.value, y.value);
            all = all && implies(same, res);
            if (all.failed()) return eq_memo_[key] = all;
        }
    }
    return eq_memo_[key] = all;
}

Verdict plain_eq(TypeP t, const Nat& a, const Nat& b, const std::vector<Nat>& num_set, uint64_t fuel)
{
    PlainEngine e(num_set, fuel);
    return e.eq(t, a, b);
}

}  // namespace ehaw
