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

#include "ehaw/serialize.hpp"

#include <stdexcept>

namespace ehaw {

namespace {

Json kids_json(const Expr& e, size_t from)
{
    Json a = Json::array();
    for (size_t i = from; i < e.kids.size(); ++i) a.push_back(expr_to_json(*e.kids[i]));
    return a;
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field ") + name);
    return j.at(name);
}

std::vector<ExprP> args_of(const Json& j, size_t n)
{
    const Json& a = field(j, "args");
    if (!a.is_array() || a.size() != n) throw std::invalid_argument("wrong number of args");
    std::vector<ExprP> out;
    for (auto& x : a) out.push_back(expr_from_json(x));
    return out;
}

Nat nat_of(const Json& j)
{
    if (j.is_number_unsigned()) return Nat(j.get<uint64_t>());
    if (!j.is_string()) throw std::invalid_argument("expected a decimal string");
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a natural number: " + s);
    return Nat(s);
}

}  // namespace

Json expr_to_json(const Expr& e)
{
    switch (e.op) {
    case Op::Arg: return {{"op", "arg"}};
    case Op::SelfRef: return {{"op", "self"}};
    case Op::Env: return {{"op", "env"}, {"index", e.index}};
    case Op::Num: return {{"op", "num"}, {"value", e.num.str()}};
    case Op::PrimOp: return {{"op", "prim"}, {"name", std::string(prim_name((Prim)e.index))}, {"args", kids_json(e, 0)}};
    case Op::Pair: return {{"op", "pair"}, {"args", kids_json(e, 0)}};
    case Op::Proj: return {{"op", "proj"}, {"index", e.index}, {"args", kids_json(e, 0)}};
    case Op::IfZero: return {{"op", "ifz"}, {"args", kids_json(e, 0)}};
    case Op::Apply: return {{"op", "apply"}, {"args", kids_json(e, 0)}};
    case Op::OracleQ: return {{"op", "oracle"}, {"args", kids_json(e, 0)}};
    case Op::Close: return {{"op", "close"}, {"body", expr_to_json(*e.kids[0])}, {"captured", kids_json(e, 1)}};
    }
    throw std::logic_error("unknown op");
}

ExprP expr_from_json(const Json& j)
{
    std::string op = field(j, "op").get<std::string>();
    if (op == "arg") return cx::arg();
    if (op == "self") return cx::self();
    if (op == "env") return cx::env(field(j, "index").get<uint32_t>());
    if (op == "num") return cx::num(nat_of(field(j, "value")));
    if (op == "prim") {
        auto p = prim_by_name(field(j, "name").get<std::string>());
        if (!p) throw std::invalid_argument("unknown primitive");
        return cx::prim(*p, args_of(j, prim_arity(*p)));
    }
    if (op == "pair") {
        auto a = args_of(j, 2);
        return cx::pair(a[0], a[1]);
    }
    if (op == "proj") return cx::proj(field(j, "index").get<uint32_t>(), args_of(j, 1)[0]);
    if (op == "ifz") {
        auto a = args_of(j, 3);
        return cx::ifz(a[0], a[1], a[2]);
    }
    if (op == "apply") {
        auto a = args_of(j, 2);
        return cx::apply(a[0], a[1]);
    }
    if (op == "oracle") return cx::oracle(args_of(j, 1)[0]);
    if (op == "close") {
        std::vector<ExprP> caps;
        for (auto& c : field(j, "captured")) caps.push_back(expr_from_json(c));
        return cx::close(expr_from_json(field(j, "body")), caps);
    }
    throw std::invalid_argument("unknown op " + op);
}

Json code_to_json(const Nat& code, int depth)
{
    Json j = {{"schema", "ehaw.code/1"}, {"index", code.str()}};
    auto cl = decode_closure(code);
    if (!cl) return j;
    Json caps = Json::array();
    for (auto& c : cl->captured) {
        if (depth > 0 && decode_closure(c)) {
            Json sub = code_to_json(c, depth - 1);
            sub.erase("schema");
            caps.push_back(sub);
        } else {
            caps.push_back({{"index", c.str()}});
        }
    }
    j["closure"] = {{"body", expr_to_json(*cl->body)}, {"captured", caps}};
    return j;
}

Nat code_from_json(const Json& j)
{
    if (j.is_string() || j.is_number_unsigned()) return nat_of(j);
    if (j.contains("index")) return nat_of(j.at("index"));
    const Json& cl = field(j, "closure");
    std::vector<Nat> caps;
    for (auto& c : field(cl, "captured")) caps.push_back(code_from_json(c));
    return encode_closure(expr_from_json(field(cl, "body")), caps);
}

Json oracle_to_json(const Oracle& p)
{
    Json es = Json::array();
    for (auto& [k, v] : p.entries()) es.push_back({k.str(), v.str()});
    return {{"schema", "ehaw.oracle/1"}, {"entries", es}};
}

Oracle oracle_from_json(const Json& j)
{
    if (j.is_string()) return Oracle::parse(j.get<std::string>());
    std::vector<std::pair<Nat, Nat>> es;
    for (auto& e : field(j, "entries")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("oracle entries are [key, value]");
        es.emplace_back(nat_of(e[0]), nat_of(e[1]));
    }
    return Oracle(es);
}

Json verdict_to_json(const Verdict& v)
{
    const char* k = v.ok() ? "Holds" : v.failed() ? "Fails" : "Exhausted";
    Json j = {{"verdict", k}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

}  // namespace ehaw
