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

// Command-line front end: check, extract, run, verify, selfreal, demo.
//
// Exit codes: 0 holds/accepted, 1 fails/rejected, 2 exhausted/inconclusive, 3 usage or I/O.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ehaw/collection.hpp"
#include "ehaw/derivation.hpp"
#include "ehaw/extraction.hpp"
#include "ehaw/realizability.hpp"
#include "ehaw/selfreal.hpp"
#include "ehaw/serialize.hpp"

namespace {

using namespace ehaw;

enum Exit { kOk = 0, kFails = 1, kExhausted = 2, kUsage = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string mode = "forcing";
    uint64_t fuel = 100000;
    std::string numset = "0..4";
    std::string keys = "auto";
    uint64_t valbound = 2;
    uint64_t q = 20;
    std::string emit = "text";
    std::string out;
    std::string oracle = "{}";
};

int exit_for(const Verdict& v) { return v.ok() ? kOk : v.failed() ? kFails : kExhausted; }

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A formula file: '#' comments, lines joined.
FormulaP read_formula(const std::string& path)
{
    std::istringstream in(read_file(path));
    std::string line, text;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        text += line + " ";
    }
    return parse_formula(text);
}

std::vector<Nat> parse_numset(const std::string& s)
{
    std::vector<Nat> out;
    if (auto dots = s.find(".."); dots != std::string::npos) {
        uint64_t lo = std::stoull(s.substr(0, dots)), hi = std::stoull(s.substr(dots + 2));
        if (hi < lo || hi - lo > 1000) throw CLI::ValidationError("--numset", "bad range " + s);
        for (uint64_t n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Nat(std::stoull(item)));
    if (out.empty()) throw CLI::ValidationError("--numset", "empty set");
    return out;
}

struct Universe {
    ForcingUniverse u;
    std::shared_ptr<TDescription> t;  // set when the condition set is the self-realizing one
};

// Universe file (JSON): key_set, val_bound, num_set, fuel, tset ("all" or "selfreal:<formula-file>").
// Flags given on the command line override the file.
Universe load_universe(const std::string& path, const RunConfig& cfg, const CLI::App& app, const FormulaP& phi)
{
    Universe out;
    ForcingUniverse& u = out.u;
    u.val_bound = cfg.valbound;
    u.num_set = parse_numset(cfg.numset);
    u.fuel = cfg.fuel;
    std::string tset = "all";
    bool file_keys = false;
    if (!path.empty()) {
        Json j;
        try {
            j = Json::parse(read_file(path));
        } catch (const Json::parse_error& e) {
            throw IoError(path + ": " + e.what());
        }
        if (j.contains("key_set")) {
            for (auto& k : j["key_set"]) u.key_set.push_back(Nat(k.get<uint64_t>()));
            file_keys = true;
        }
        if (j.contains("val_bound") && !app.count("--valbound")) u.val_bound = j["val_bound"].get<uint64_t>();
        if (j.contains("num_set") && !app.count("--numset")) {
            u.num_set.clear();
            for (auto& n : j["num_set"]) u.num_set.push_back(Nat(n.get<uint64_t>()));
        }
        if (j.contains("fuel") && !app.count("--fuel")) u.fuel = j["fuel"].get<uint64_t>();
        if (j.contains("tset")) tset = j["tset"].get<std::string>();
    }
    if (tset.rfind("selfreal:", 0) == 0) {
        out.t = std::make_shared<TDescription>(read_formula(tset.substr(9)), cfg.q);
    } else if (tset == "selfreal") {
        out.t = std::make_shared<TDescription>(phi, cfg.q);
    } else if (tset != "all") {
        throw CLI::ValidationError("tset", "unknown condition set " + tset);
    }
    if (out.t) u.tset = out.t->condition_set();
    if (app.count("--keys") || !file_keys) {
        u.key_set.clear();
        if (cfg.keys == "auto") {
            if (out.t) u.key_set = out.t->demanded_keys({}, u.num_set, u.val_bound);
            else u.key_set = {0, 1};
        } else if (cfg.keys != "none") {
            u.key_set = parse_numset(cfg.keys);
        }
    }
    return out;
}

class Output {
  public:
    explicit Output(const RunConfig& cfg) : cfg_(cfg) {}
    bool json() const { return cfg_.emit == "json"; }
    std::ostringstream text;
    Json data = Json::object();

    void flush() const
    {
        std::string s = json() ? data.dump(2) + "\n" : text.str();
        if (cfg_.out.empty()) {
            std::cout << s;
            return;
        }
        std::ofstream f(cfg_.out);
        if (!f) throw IoError("cannot write " + cfg_.out);
        f << s;
    }

  private:
    const RunConfig& cfg_;
};

Nat read_code(const std::string& spec)
{
    if (!spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos) return Nat(spec);
    Json j;
    try {
        j = Json::parse(read_file(spec));
    } catch (const Json::parse_error& e) {
        throw IoError(spec + ": " + e.what());
    }
    return code_from_json(j.contains("code") ? j["code"] : j);
}

std::string short_number(const Nat& n)
{
    std::string s = n.str();
    if (s.size() <= 60) return s;
    return s.substr(0, 24) + "..." + s.substr(s.size() - 12) + " (" + std::to_string(s.size()) + " digits)";
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Commands:

int cmd_check(const std::string& path, Output& out)
{
    DerivationP d = load_derivation(path);
    try {
        check(d);
    } catch (const DerivationError& e) {
        out.text << "rejected: " << e.what() << "\n";
        out.data = {{"accepted", false}, {"node", e.node}, {"error", e.what()}};
        return kFails;
    }
    size_t n = step_count(d);
    out.text << "accepted, " << n << " steps\n";
    out.data = {{"accepted", true}, {"steps", n}, {"conclusion", show(d->conclusion)}};
    return kOk;
}

int cmd_extract(const std::string& path, const RunConfig& cfg, Output& out)
{
    DerivationP d = load_derivation(path);
    ExtractionResult r = extract(d, cfg.mode == "plain" ? Mode::Plain : Mode::Forcing);
    out.data["mode"] = mode_name(r.mode);
    out.data["realizes"] = show(r.closure());
    out.data["code"] = code_to_json(r.code);
    Json trace = Json::array();
    for (auto& t : r.trace) trace.push_back({{"node", t.node}, {"rule", t.rule}, {"recipe", t.recipe}, {"index", t.code.str()}});
    out.data["trace"] = trace;
    out.text << "mode: " << mode_name(r.mode) << "\nrealizes: " << show(r.closure()) << "\ncode: " << r.code.str()
             << "\ntrace:\n";
    for (auto& t : r.trace)
        out.text << "  " << t.node << "  rule " << t.rule << "  " << t.recipe << "  index " << short_number(t.code) << "\n";
    return kOk;
}

int cmd_run(const std::string& code_spec, const std::vector<std::string>& args, const RunConfig& cfg, Output& out)
{
    Nat a = read_code(code_spec);
    std::vector<Nat> xs;
    for (auto& s : args) xs.push_back(read_code(s));
    Oracle p = Oracle::parse(cfg.oracle);
    EvalResult r = xs.empty() ? EvalResult::val(a) : apply_chain(a, xs, p, cfg.fuel);
    out.data = {{"result", r.str()}, {"oracle", oracle_to_json(p)}};
    out.text << r.str() << "\n";
    if (r.ok()) {
        out.data["value"] = r.value.str();
        return kOk;
    }
    return r.kind == EvalResult::InvalidCode ? kFails : kExhausted;
}

int cmd_verify(const std::string& code_spec, const std::string& formula_path, const std::string& universe_path,
               bool all_conditions, const RunConfig& cfg, const CLI::App& app, Output& out)
{
    Nat a = read_code(code_spec);
    FormulaP phi = read_formula(formula_path);
    phi = universal_closure(phi, free_vars(phi));
    out.data["formula"] = show(phi);
    if (cfg.mode == "plain") {
        Verdict v = check_plain(a, phi, parse_numset(cfg.numset), cfg.fuel);
        out.data["relation"] = "plain";
        out.data["verdict"] = verdict_to_json(v);
        out.text << "plain: " << v.str() << "\n";
        return exit_for(v);
    }
    Universe un = load_universe(universe_path, cfg, app, phi);
    ForcingEngine e(un.u);
    ForcingRealizability fr(e);
    out.data["relation"] = "forcing";
    out.data["universe"] = un.u.digest();
    std::vector<int> at;
    if (all_conditions) {
        for (size_t i = 0; i < e.conditions().size(); ++i) at.push_back((int)i);
    } else {
        at.push_back(e.require(Oracle::parse(cfg.oracle)));
    }
    Verdict total = Verdict::holds();
    Json per = Json::array();
    out.text << "universe: " << un.u.digest() << "\n";
    for (int i : at) {
        Verdict v = fr.check_single(i, a, phi);
        total = total && v;
        per.push_back({{"condition", e.conditions()[i].str()}, {"verdict", verdict_to_json(v)}});
        out.text << e.conditions()[i].str() << ": " << v.str() << "\n";
    }
    out.data["conditions"] = per;
    out.data["verdict"] = verdict_to_json(total);
    out.text << "verdict: " << total.str() << "\n";
    return exit_for(total);
}

int cmd_selfreal(const std::string& formula_path, const std::string& universe_path, const RunConfig& cfg,
                 const CLI::App& app, Output& out)
{
    FormulaP phi = read_formula(formula_path);
    if (!free_vars(phi).empty()) throw CLI::ValidationError("selfreal", "the formula must be a sentence");
    TDescription t(phi, cfg.q);
    Universe un = load_universe(universe_path, cfg, app, phi);
    if (!un.t) {
        un.t = std::make_shared<TDescription>(t);
        un.u.tset = t.condition_set();
        if (cfg.keys == "auto") un.u.key_set = t.demanded_keys({}, un.u.num_set, un.u.val_bound);
    }
    Verdict truth = t.truth(0, {});
    out.data["formula"] = show(phi);
    out.data["truth"] = verdict_to_json(truth);
    out.data["universe"] = un.u.digest();
    out.text << "formula: " << show(phi) << "\ntruth (Q=" << cfg.q << "): " << truth.str() << "\n";
    int code = kOk;
    if (truth.ok()) {
        SelfRealization r = realize_true(t, {}, Oracle::parse(cfg.oracle), un.u);
        TruthReport rep = truth_from_realizer(t, {}, r.q, r.realizer, r.realizer, un.u);
        out.data["q"] = oracle_to_json(r.q);
        out.data["realizer"] = code_to_json(r.realizer);
        out.data["check"] = verdict_to_json(r.verdict);
        out.data["agreement"] = verdict_to_json(rep.agreement);
        out.text << "q: " << r.q.str() << "\nrealizer: " << short_number(r.realizer) << "\ncheck: " << r.verdict.str()
                 << "\nagreement: " << rep.agreement.str() << "\n";
        code = std::max(exit_for(r.verdict), exit_for(rep.agreement));
    } else if (truth.failed()) {
        ForcingUniverse small = un.u;
        if (small.key_set.size() > 2) small.key_set.resize(2);
        RealizerSearch s = search_realizers(t, small);
        out.data["search"] = {{"conditions", s.conditions}, {"pairs", s.pairs},      {"holds", s.holds},
                              {"exhausted", s.exhausted},   {"disagreements", s.disagreements}};
        out.text << "no realizer expected; searched " << s.pairs << " (condition, a, b) triples over "
                 << s.conditions << " conditions, " << s.holds << " realize it\n";
        if (s.disagreements) out.text << "disagreement: " << s.first_disagreement << "\n";
        code = s.disagreements ? kFails : kOk;
    } else {
        code = kExhausted;
    }
    return code;
}

int cmd_demo(uint64_t a, const std::string& phi_text, const RunConfig& cfg, Output& out)
{
    FormulaP phi = parse_formula(phi_text);
    CollectionDemo d = demo_collection(a, phi, cfg.q);
    CollectionRun r = run_collection(d);
    out.data = {{"a", a},
                {"phi", show(phi)},
                {"derivation_steps", step_count(d.derivation)},
                {"realizes", show(d.derivation->conclusion)},
                {"realizer", code_to_json(r.realizer, 0)},
                {"bound", r.bound.str()},
                {"brute_force_confirms", r.bound_ok},
                {"minimal_bound", r.minimal_bound}};
    out.text << "premise: " << show(d.premise) << "\nconclusion: " << show(d.conclusion) << "\nderivation: "
             << step_count(d.derivation) << " steps\nrealizer: " << short_number(r.realizer) << "\nbound b = "
             << r.bound.str() << "\nbrute force: " << (r.bound_ok ? "confirmed" : "REFUTED")
             << "\nminimal bound: " << r.minimal_bound << "\n";
    return r.bound_ok ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Realizability toolkit: proof checking, program extraction and bounded verification."};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--mode", cfg.mode, "forcing or plain")->check(CLI::IsMember({"forcing", "plain"}));
    app.add_option("--fuel", cfg.fuel, "machine steps per evaluation")->check(CLI::PositiveNumber);
    app.add_option("--numset", cfg.numset, "numerals tested: lo..hi or a list");
    app.add_option("--keys", cfg.keys, "oracle keys: auto, none, lo..hi or a list");
    app.add_option("--valbound", cfg.valbound, "largest oracle value")->check(CLI::PositiveNumber);
    app.add_option("--Q", cfg.q, "quantifier bound of the truth oracle")->check(CLI::PositiveNumber);
    app.add_option("--emit", cfg.emit, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", cfg.out, "write the report here");
    app.add_option("--oracle", cfg.oracle, "condition as {k:v,...}");

    std::string path, code, formula, universe, phi;
    std::vector<std::string> args;
    bool all = false;
    uint64_t a = 0;
    auto* check_c = app.add_subcommand("check", "check a proof file");
    check_c->add_option("proof", path)->required();
    auto* extract_c = app.add_subcommand("extract", "extract a realizer from a proof file");
    extract_c->add_option("proof", path)->required();
    auto* run_c = app.add_subcommand("run", "apply a code to arguments");
    run_c->add_option("code", code, "decimal index or code file")->required();
    run_c->add_option("args", args);
    auto* verify_c = app.add_subcommand("verify", "check that a code realizes a formula");
    verify_c->add_option("code", code, "decimal index or code file")->required();
    verify_c->add_option("formula", formula, "formula file")->required();
    verify_c->add_option("universe", universe, "universe file");
    verify_c->add_flag("--all", all, "check at every condition of the universe");
    auto* self_c = app.add_subcommand("selfreal", "self-realize a first-order sentence");
    self_c->add_option("formula", formula, "formula file")->required();
    self_c->add_option("universe", universe, "universe file");
    auto* demo_c = app.add_subcommand("demo", "collection from choice: extract and run the bound");
    demo_c->add_option("a", a, "range bound")->required();
    demo_c->add_option("phi", phi, "relation in x and y")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    Output out(cfg);
    int rc = kUsage;
    try {
        if (*check_c) rc = cmd_check(path, out);
        else if (*extract_c) rc = cmd_extract(path, cfg, out);
        else if (*run_c) rc = cmd_run(code, args, cfg, out);
        else if (*verify_c) rc = cmd_verify(code, formula, universe, all, cfg, app, out);
        else if (*self_c) rc = cmd_selfreal(formula, universe, cfg, app, out);
        else if (*demo_c) rc = cmd_demo(a, phi, cfg, out);
        out.flush();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ProofFileError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kFails;
    } catch (const SyntaxError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kFails;
    } catch (const DerivationError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kFails;
    } catch (const PremiseFalse& e) {
        std::cerr << "premise false: " << e.what() << "\n";
        return kFails;
    } catch (const OracleInconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExhausted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return rc;
}
