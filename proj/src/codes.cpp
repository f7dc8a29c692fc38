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

#include "ehaw/codes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <iterator>
#include <sstream>
#include <unordered_map>

namespace ehaw {

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Bit strings:

class BitString {
  public:
    std::vector<uint64_t> w;
    size_t n = 0;

    void put_bits(uint64_t v, unsigned cnt)
    {
        if (cnt == 0) return;
        if (cnt < 64) v &= (uint64_t(1) << cnt) - 1;
        size_t off = n & 63;
        if (off == 0) w.push_back(0);
        w.back() |= v << off;
        if (off + cnt > 64) w.push_back(v >> (64 - off));
        n += cnt;
    }
    void put(bool b) { put_bits(b ? 1 : 0, 1); }

    void gamma(uint64_t x)
    {
        unsigned len = 64 - __builtin_clzll(x);
        for (unsigned i = 1; i < len; ++i) put(false);
        put(true);
        put_bits(x, len - 1);
    }

    void nat(const Nat& v)
    {
        size_t len = bit_length(v);
        gamma(len + 1);
        if (len <= 1) return;
        std::vector<uint64_t> limbs;
        boost::multiprecision::export_bits(v, std::back_inserter(limbs), 64, false);
        size_t rest = len - 1;
        for (size_t i = 0; rest > 0; ++i) {
            unsigned c = rest >= 64 ? 64 : (unsigned)rest;
            put_bits(limbs[i], c);
            rest -= c;
        }
    }

    void append(const BitString& o)
    {
        size_t rest = o.n;
        for (size_t i = 0; rest > 0; ++i) {
            unsigned c = rest >= 64 ? 64 : (unsigned)rest;
            put_bits(o.w[i], c);
            rest -= c;
        }
    }

    Nat with_sentinel() const
    {
        BitString t = *this;
        t.put(true);
        Nat r;
        boost::multiprecision::import_bits(r, t.w.begin(), t.w.end(), 64, false);
        return r;
    }
};

namespace {

class BitReader {
  public:
    explicit BitReader(const Nat& n)
    {
        boost::multiprecision::export_bits(n, std::back_inserter(w_), 64, false);
        end_ = bit_length(n) - 1;  // drop the sentinel
    }

    bool failed() const { return fail_; }
    bool at_end() const { return pos_ == end_; }

    bool get()
    {
        if (pos_ >= end_) { fail_ = true; return false; }
        bool b = (w_[pos_ >> 6] >> (pos_ & 63)) & 1;
        ++pos_;
        return b;
    }

    uint64_t bits(unsigned cnt)
    {
        if (cnt == 0) return 0;
        if (pos_ + cnt > end_) { fail_ = true; return 0; }
        size_t off = pos_ & 63, wi = pos_ >> 6;
        uint64_t v = w_[wi] >> off;
        if (off + cnt > 64) v |= w_[wi + 1] << (64 - off);
        if (cnt < 64) v &= (uint64_t(1) << cnt) - 1;
        pos_ += cnt;
        return v;
    }

    uint64_t gamma()
    {
        unsigned z = 0;
        while (!fail_ && !get()) {
            if (++z > 62) { fail_ = true; return 0; }
        }
        if (fail_) return 0;
        return (uint64_t(1) << z) | bits(z);
    }

    Nat nat()
    {
        uint64_t g = gamma();
        if (fail_) return Nat(0);
        uint64_t len = g - 1;
        if (len == 0) return Nat(0);
        if (len - 1 > end_ - pos_) { fail_ = true; return Nat(0); }
        std::vector<uint64_t> limbs;
        uint64_t rest = len - 1;
        while (rest > 0) {
            unsigned c = rest >= 64 ? 64 : (unsigned)rest;
            limbs.push_back(bits(c));
            rest -= c;
        }
        Nat r;
        if (!limbs.empty()) boost::multiprecision::import_bits(r, limbs.begin(), limbs.end(), 64, false);
        boost::multiprecision::bit_set(r, (unsigned)(len - 1));
        return r;
    }

  private:
    std::vector<uint64_t> w_;
    size_t pos_ = 0, end_ = 0;
    bool fail_ = false;
};

void write_expr(BitString& out, const Expr& e)
{
    out.put_bits((uint64_t)e.op, 4);
    switch (e.op) {
    case Op::Arg: case Op::SelfRef: break;
    case Op::Env: out.gamma(uint64_t(e.index) + 1); break;
    case Op::Num: out.nat(e.num); break;
    case Op::PrimOp:
        out.gamma(uint64_t(e.index) + 1);
        for (auto& k : e.kids) write_expr(out, *k);
        break;
    case Op::Proj:
        out.put(e.index != 0);
        write_expr(out, *e.kids[0]);
        break;
    case Op::Close:
        out.gamma(e.kids.size());
        for (size_t i = 1; i < e.kids.size(); ++i) write_expr(out, *e.kids[i]);
        out.append(*e.body_bits);
        break;
    default:
        for (auto& k : e.kids) write_expr(out, *k);
    }
}

void validate(const Expr& e, size_t ncaps)
{
    switch (e.op) {
    case Op::Env:
        if (e.index >= ncaps) throw MalformedExpr("Env(" + std::to_string(e.index) + ") outside captured list");
        return;
    case Op::Close:
        for (size_t i = 1; i < e.kids.size(); ++i) validate(*e.kids[i], ncaps);
        return;  // the body was checked when the node was made
    default:
        for (auto& k : e.kids) validate(*k, ncaps);
    }
}

std::shared_ptr<Expr> mk(Op op)
{
    auto e = std::make_shared<Expr>();
    e->op = op;
    return e;
}

const Nat kZero(0);

}  // namespace

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Constructors:

namespace cx {

ExprP arg() { static ExprP a = mk(Op::Arg); return a; }
ExprP self() { static ExprP s = mk(Op::SelfRef); return s; }

ExprP env(uint32_t i)
{
    auto e = mk(Op::Env);
    e->index = i;
    return e;
}

ExprP num(const Nat& n)
{
    auto e = mk(Op::Num);
    e->num = n;
    return e;
}

ExprP prim(Prim p, std::vector<ExprP> args)
{
    if (args.size() != prim_arity(p)) throw MalformedExpr("prim arity");
    auto e = mk(Op::PrimOp);
    e->index = (uint32_t)p;
    e->kids = std::move(args);
    return e;
}

ExprP pair(ExprP a, ExprP b)
{
    auto e = mk(Op::Pair);
    e->kids = {std::move(a), std::move(b)};
    return e;
}

ExprP proj(uint32_t i, ExprP x)
{
    if (i > 1) throw MalformedExpr("projection index must be 0 or 1");
    auto e = mk(Op::Proj);
    e->index = i;
    e->kids = {std::move(x)};
    return e;
}

ExprP ifz(ExprP c, ExprP t, ExprP f)
{
    auto e = mk(Op::IfZero);
    e->kids = {std::move(c), std::move(t), std::move(f)};
    return e;
}

ExprP apply(ExprP f, ExprP x)
{
    auto e = mk(Op::Apply);
    e->kids = {std::move(f), std::move(x)};
    return e;
}

ExprP oracle(ExprP x)
{
    auto e = mk(Op::OracleQ);
    e->kids = {std::move(x)};
    return e;
}

ExprP close(ExprP body, std::vector<ExprP> captured)
{
    validate(*body, captured.size());
    auto e = mk(Op::Close);
    auto bits = std::make_shared<BitString>();
    write_expr(*bits, *body);
    e->body_bits = bits;
    e->kids.reserve(captured.size() + 1);
    e->kids.push_back(std::move(body));
    for (auto& c : captured) e->kids.push_back(std::move(c));
    return e;
}

}  // namespace cx

std::string show(const Expr& e)
{
    auto kids = [&](size_t from) {
        std::string s;
        for (size_t i = from; i < e.kids.size(); ++i) {
            if (i > from) s += ", ";
            s += show(*e.kids[i]);
        }
        return s;
    };
    switch (e.op) {
    case Op::Arg: return "arg";
    case Op::SelfRef: return "self";
    case Op::Env: return "env" + std::to_string(e.index);
    case Op::Num: return e.num.str();
    case Op::PrimOp: return std::string(prim_name((Prim)e.index)) + "(" + kids(0) + ")";
    case Op::Pair: return "<" + kids(0) + ">";
    case Op::Proj: return "(" + show(*e.kids[0]) + ")_" + std::to_string(e.index);
    case Op::IfZero: return "ifz(" + kids(0) + ")";
    case Op::Apply: return "{" + show(*e.kids[0]) + "}(" + show(*e.kids[1]) + ")";
    case Op::OracleQ: return "p(" + show(*e.kids[0]) + ")";
    case Op::Close: return "close[" + kids(1) + "](" + show(*e.kids[0]) + ")";
    }
    return "?";
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Closure numbering:

namespace {

bool is_zero_closure(const Expr& body, size_t ncaps)
{
    return ncaps == 0 && body.op == Op::Num && body.num == 0;
}

Nat encode_bits(const BitString& body, const std::vector<Nat>& captured)
{
    BitString out;
    out.gamma(captured.size() + 1);
    for (auto& c : captured) out.nat(c);
    out.append(body);
    return out.with_sentinel();
}

using DecodeCache = std::unordered_map<Nat, std::shared_ptr<const Closure>>;

DecodeCache& cache()
{
    thread_local DecodeCache c;
    return c;
}

void remember(const Nat& n, std::shared_ptr<const Closure> cl)
{
    DecodeCache& c = cache();
    if (c.size() > 200000) c.clear();
    c.emplace(n, std::move(cl));
}

ExprP parse_expr(BitReader& r, size_t ncaps, unsigned depth)
{
    if (depth > 4000) return nullptr;
    uint64_t op = r.bits(4);
    if (r.failed() || op >= kNumOps) return nullptr;
    auto sub = [&](size_t n) { return parse_expr(r, n, depth + 1); };
    switch ((Op)op) {
    case Op::Arg: return cx::arg();
    case Op::SelfRef: return cx::self();
    case Op::Env: {
        uint64_t i = r.gamma() - 1;
        if (r.failed() || i >= ncaps) return nullptr;
        return cx::env((uint32_t)i);
    }
    case Op::Num: {
        Nat v = r.nat();
        if (r.failed()) return nullptr;
        return cx::num(v);
    }
    case Op::PrimOp: {
        uint64_t id = r.gamma() - 1;
        if (r.failed() || id >= kNumPrims) return nullptr;
        std::vector<ExprP> args;
        for (unsigned i = 0; i < prim_arity((Prim)id); ++i) {
            ExprP a = sub(ncaps);
            if (!a) return nullptr;
            args.push_back(a);
        }
        return cx::prim((Prim)id, std::move(args));
    }
    case Op::Proj: {
        bool i = r.get();
        ExprP x = sub(ncaps);
        if (!x) return nullptr;
        return cx::proj(i ? 1 : 0, x);
    }
    case Op::Pair: case Op::Apply: {
        ExprP a = sub(ncaps);
        if (!a) return nullptr;
        ExprP b = sub(ncaps);
        if (!b) return nullptr;
        return (Op)op == Op::Pair ? cx::pair(a, b) : cx::apply(a, b);
    }
    case Op::IfZero: {
        ExprP c = sub(ncaps);
        if (!c) return nullptr;
        ExprP t = sub(ncaps);
        if (!t) return nullptr;
        ExprP f = sub(ncaps);
        if (!f) return nullptr;
        return cx::ifz(c, t, f);
    }
    case Op::OracleQ: {
        ExprP x = sub(ncaps);
        if (!x) return nullptr;
        return cx::oracle(x);
    }
    case Op::Close: {
        uint64_t m = r.gamma() - 1;
        if (r.failed()) return nullptr;
        std::vector<ExprP> caps;
        for (uint64_t i = 0; i < m; ++i) {
            ExprP c = sub(ncaps);
            if (!c) return nullptr;
            caps.push_back(c);
        }
        ExprP body = sub(m);
        if (!body) return nullptr;
        return cx::close(body, std::move(caps));
    }
    }
    return nullptr;
}

}  // namespace

Nat encode_closure(const ExprP& body, const std::vector<Nat>& captured)
{
    validate(*body, captured.size());
    if (is_zero_closure(*body, captured.size())) return Nat(0);
    BitString bits;
    write_expr(bits, *body);
    return encode_bits(bits, captured);
}

std::shared_ptr<const Closure> decode_closure(const Nat& n)
{
    if (n < 0) return nullptr;
    auto it = cache().find(n);
    if (it != cache().end()) return it->second;
    std::shared_ptr<const Closure> res;
    if (n == 0) {
        res = std::make_shared<Closure>(Closure{cx::num(0), {}});
    } else if (n >= 2) {
        BitReader r(n);
        uint64_t m = r.gamma() - 1;
        if (r.failed()) return nullptr;
        std::vector<Nat> caps;
        for (uint64_t i = 0; i < m && !r.failed(); ++i) caps.push_back(r.nat());
        if (r.failed()) return nullptr;
        ExprP body = parse_expr(r, m, 0);
        if (!body || r.failed() || !r.at_end()) return nullptr;
        if (is_zero_closure(*body, m)) return nullptr;
        res = std::make_shared<Closure>(Closure{body, std::move(caps)});
    } else {
        return nullptr;
    }
    remember(n, res);
    return res;
}

Nat build(const ExprP& body) { return encode_closure(body, {}); }

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Machine:

std::string EvalResult::str() const
{
    switch (kind) {
    case Value: return "Value(" + value.str() + ")";
    case OracleMiss: return "OracleMiss(" + value.str() + ")";
    case InvalidCode: return "InvalidCode";
    case FuelExhausted: return "FuelExhausted";
    }
    return "?";
}

namespace {
inline EvalResult sized(Nat v)
{
    if (bit_length(v) > kMaxNatBits) return EvalResult::exhausted();
    return EvalResult::val(std::move(v));
}
}  // namespace

EvalResult Machine::eval(const Expr& e, const Frame& f)
{
    if (fuel_ == 0) return EvalResult::exhausted();
    --fuel_;
    switch (e.op) {
    case Op::Arg: return EvalResult::val(*f.arg);
    case Op::SelfRef: return EvalResult::val(*f.self);
    case Op::Env:
        if (!f.env || e.index >= f.env->size()) return EvalResult::invalid();
        return EvalResult::val((*f.env)[e.index]);
    case Op::Num: return EvalResult::val(e.num);
    case Op::PrimOp: {
        std::vector<Nat> args;
        args.reserve(e.kids.size());
        for (auto& k : e.kids) {
            EvalResult r = eval(*k, f);
            if (!r.ok()) return r;
            args.push_back(std::move(r.value));
        }
        return sized(prim_eval((Prim)e.index, args));
    }
    case Op::Pair: {
        EvalResult a = eval(*e.kids[0], f);
        if (!a.ok()) return a;
        EvalResult b = eval(*e.kids[1], f);
        if (!b.ok()) return b;
        return sized(ehaw::pair(a.value, b.value));
    }
    case Op::Proj: {
        EvalResult a = eval(*e.kids[0], f);
        if (!a.ok()) return a;
        return EvalResult::val(ehaw::proj(e.index, a.value));
    }
    case Op::IfZero: {
        EvalResult c = eval(*e.kids[0], f);
        if (!c.ok()) return c;
        return eval(c.value == 0 ? *e.kids[1] : *e.kids[2], f);
    }
    case Op::Apply: {
        EvalResult a = eval(*e.kids[0], f);
        if (!a.ok()) return a;
        EvalResult b = eval(*e.kids[1], f);
        if (!b.ok()) return b;
        return call(a.value, b.value);
    }
    case Op::OracleQ: {
        EvalResult k = eval(*e.kids[0], f);
        if (!k.ok()) return k;
        queried_ = true;
        const Nat* v = p_.get(k.value);
        if (!v) return EvalResult::miss(std::move(k.value));
        return EvalResult::val(*v);
    }
    case Op::Close: {
        std::vector<Nat> caps;
        caps.reserve(e.kids.size() - 1);
        for (size_t i = 1; i < e.kids.size(); ++i) {
            EvalResult r = eval(*e.kids[i], f);
            if (!r.ok()) return r;
            caps.push_back(std::move(r.value));
        }
        if (is_zero_closure(*e.kids[0], caps.size())) return EvalResult::val(Nat(0));
        Nat n = encode_bits(*e.body_bits, caps);
        if (cache().find(n) == cache().end())
            remember(n, std::make_shared<Closure>(Closure{e.kids[0], std::move(caps)}));
        return EvalResult::val(std::move(n));
    }
    }
    return EvalResult::invalid();
}

EvalResult Machine::call(const Nat& a, const Nat& n)
{
    std::shared_ptr<const Closure> cl = decode_closure(a);
    if (!cl) return EvalResult::invalid();
    if (depth_ >= kMaxApplyDepth) return EvalResult::exhausted();
    ++depth_;
    EvalResult r = eval(*cl->body, Frame{&n, &cl->captured, &a});
    --depth_;
    return r;
}

EvalResult Machine::apply(const Nat& a, const Nat& n)
{
    if (fuel_ == 0) return EvalResult::exhausted();
    --fuel_;
    return call(a, n);
}

EvalResult Machine::apply(const Nat& a, const std::vector<Nat>& args)
{
    EvalResult cur = EvalResult::val(a);
    for (const Nat& x : args) {
        cur = apply(cur.value, x);
        if (!cur.ok()) return cur;
    }
    return cur;
}

EvalResult Machine::eval_closed(const Expr& e)
{
    static const std::vector<Nat> no_env;
    return eval(e, Frame{&kZero, &no_env, &kZero});
}

EvalResult apply(const Nat& a, const Nat& n, const Oracle& p, uint64_t fuel)
{
    Machine m(p, fuel);
    return m.apply(a, n);
}

EvalResult apply_chain(const Nat& a, const std::vector<Nat>& args, const Oracle& p, uint64_t fuel)
{
    Machine m(p, fuel);
    return m.apply(a, args);
}

Nat smn(const Nat& a, const std::vector<Nat>& fixed)
{
    if (!decode_closure(a)) throw InvalidCodeError("smn: " + a.str() + " is not a code");
    ExprP body = cx::env(0);
    for (size_t i = 0; i < fixed.size(); ++i) body = cx::apply(body, cx::env((uint32_t)i + 1));
    body = cx::apply(body, cx::arg());
    std::vector<Nat> caps{a};
    caps.insert(caps.end(), fixed.begin(), fixed.end());
    return encode_closure(body, caps);
}

Nat fixpoint(const Nat& a)
{
    if (!decode_closure(a)) throw InvalidCodeError("fixpoint: " + a.str() + " is not a code");
    static const ExprP body = cx::apply(cx::apply(cx::env(0), cx::self()), cx::arg());
    return encode_closure(body, {a});
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Oracles:

Oracle::Oracle(std::vector<std::pair<Nat, Nat>> entries) : entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(),
              [](auto& x, auto& y) { return x.first < y.first; });
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].first == entries_[i - 1].first)
            throw std::invalid_argument("oracle key " + entries_[i].first.str() + " bound twice");
}

const Nat* Oracle::get(const Nat& k) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](auto& e, const Nat& key) { return e.first < key; });
    if (it == entries_.end() || it->first != k) return nullptr;
    return &it->second;
}

Oracle Oracle::with(const Nat& k, const Nat& v) const
{
    if (const Nat* old = get(k)) {
        if (*old != v) throw std::invalid_argument("oracle already maps " + k.str());
        return *this;
    }
    auto e = entries_;
    e.emplace_back(k, v);
    return Oracle(std::move(e));
}

bool Oracle::subset_of(const Oracle& q) const
{
    for (auto& [k, v] : entries_) {
        const Nat* w = q.get(k);
        if (!w || *w != v) return false;
    }
    return true;
}

Nat Oracle::encode() const
{
    Nat code(0);
    for (size_t i = entries_.size(); i-- > 0;) {
        Nat gap = i == 0 ? entries_[0].first : Nat(entries_[i].first - entries_[i - 1].first - 1);
        code = 1 + ehaw::pair(ehaw::pair(gap, entries_[i].second), code);
    }
    return code;
}

Oracle Oracle::decode(const Nat& n)
{
    std::vector<std::pair<Nat, Nat>> es;
    Nat cur = n, key(0);
    bool first = true;
    while (cur != 0) {
        Nat head, rest, gap, v;
        unpair(cur - 1, head, rest);
        unpair(head, gap, v);
        key = first ? gap : Nat(key + gap + 1);
        first = false;
        es.emplace_back(key, v);
        cur = rest;
    }
    return Oracle(std::move(es));
}

std::string Oracle::str() const
{
    std::string s = "{";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += entries_[i].first.str() + ":" + entries_[i].second.str();
    }
    return s + "}";
}

Oracle Oracle::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("oracle must look like {k:v,...}");
    std::vector<std::pair<Nat, Nat>> es;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("oracle entry without ':'");
        es.emplace_back(parse_nat(item.substr(0, colon)), parse_nat(item.substr(colon + 1)));
    }
    return Oracle(std::move(es));
}

}  // namespace ehaw
