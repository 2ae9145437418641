// llk: check, normalize and interpret proofs; run law suites.
// Exit status: 0 ok, 1 a check failed, 2 bad configuration or I/O.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "llk/corpus.hpp"
#include "llk/cutelim.hpp"
#include "llk/distlaw.hpp"
#include "llk/finset.hpp"
#include "llk/kleisli.hpp"
#include "llk/relational.hpp"
#include "llk/semantics.hpp"
#include "llk/suites.hpp"
#include "llk/summability.hpp"

using namespace llk;
using nlohmann::json;

namespace {

constexpr int kSchema = 1;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::vector<std::string> files;
    std::string system, model = "finset", suite, strategy = "innermost", output, sequent, corpus;
    std::vector<std::string> assign, mutate;
    int size = 2, degree = 2, fuel = 10000, depth = 4, samples = 200;
    uint64_t seed = 1;
    bool verify = false;
};

// A model together with whatever it is built on.
struct Built {
    std::unique_ptr<Model> base;
    std::unique_ptr<Env> base_env;
    std::unique_ptr<Model> model;
    const Model& get() const { return *model; }
};

const std::set<std::string> kMutations = {"dig", "m2", "dbar", "theta", "dcoh", "derive-nofilter"};

std::set<std::string> mutations(const Config& c) {
    std::set<std::string> out;
    for (const auto& m : c.mutate) {
        if (!kMutations.count(m)) throw ConfigError("unknown mutation " + m);
        out.insert(m);
    }
    return out;
}

Built build_model(const Config& c) {
    if (c.size < 0 || c.degree < 1) throw ConfigError("size must be ≥ 0 and degree ≥ 1");
    Built b;
    const std::string& n = c.model;
    if (n == "finset") {
        b.model = std::make_unique<FinSet>(c.size);
    } else if (n == "rel") {
        b.model = std::make_unique<Relational>(rel_options(c.size, c.degree));
    } else if (n == "fincoh") {
        b.model = std::make_unique<Relational>(coh_options(c.size));
    } else if (n == "kleisli-bang" || n == "kleisli-s") {
        b.base = std::make_unique<Relational>(rel_options(c.size, c.degree));
        b.base_env = std::make_unique<Env>(*b.base);
        b.base_env->mutated = mutations(c);
        if (n == "kleisli-bang")
            b.model = std::make_unique<KleisliBang>(*b.base_env);
        else
            b.model = std::make_unique<KleisliS>(*b.base_env);
    } else if (n == "pfn") {
        b.model = std::make_unique<PartialFns>(c.size);
    } else {
        throw ConfigError("unknown model " + n + " (finset, rel, fincoh, kleisli-bang, kleisli-s, pfn)");
    }
    return b;
}

std::vector<Obj> objects_upto(const Model& m, int size) {
    std::vector<Obj> out;
    for (Obj x : m.objects())
        if (x->kind == OK::Base && x->n <= size) out.push_back(x);
    return out;
}

std::string slurp(const std::string& path) {
    try {
        return read_file(path);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

P load_proof(const std::string& path) {
    std::string text = slurp(path);
    try {
        return parse_proof(text);
    } catch (const std::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

// The system named on the command line, else the manifest entry next to the
// file, else the first system that accepts the proof.
System pick_system(const Config& c, const std::string& file, const P& p) {
    if (!c.system.empty()) {
        auto s = system_from_name(c.system);
        if (!s) throw ConfigError("unknown system " + c.system + " (lj, imall, ill, dill)");
        return *s;
    }
    namespace fs = std::filesystem;
    fs::path dir = fs::path(file).parent_path();
    if (fs::exists(dir / "manifest.json")) {
        try {
            for (const auto& e : json::parse(read_file((dir / "manifest.json").string())))
                if (e.value("file", "") == fs::path(file).filename().string())
                    if (auto s = system_from_name(e.value("system", ""))) return *s;
        } catch (const json::exception&) {
        }
    }
    for (System s : {System::LJ, System::IMALL, System::ILL, System::DILL})
        if (validate_proof(p, s).valid()) return s;
    return System::LJ;
}

Strategy pick_strategy(const std::string& s) {
    if (s == "innermost" || s == "leftmost-innermost") return Strategy::LeftmostInnermost;
    if (s == "outermost" || s == "leftmost-outermost") return Strategy::LeftmostOutermost;
    throw ConfigError("unknown strategy " + s + " (innermost, outermost)");
}

json violations_json(const ValidationReport& r) {
    json out = json::array();
    for (const auto& v : r.violations) out.push_back({{"path", path_str(v.path)}, {"rule", v.rule}, {"message", v.message}});
    return out;
}

// ---- commands; each returns the exit status and fills `out`

int cmd_check(const Config& c, json& out) {
    out["results"] = json::array();
    bool ok = true;
    for (const auto& f : c.files) {
        P p = load_proof(f);
        System s = pick_system(c, f, p);
        auto r = validate_proof(p, s);
        ok &= r.valid();
        out["results"].push_back({{"file", f},
                                  {"system", system_name(s)},
                                  {"valid", r.valid()},
                                  {"sequent", p->concl.str()},
                                  {"violations", violations_json(r)}});
    }
    return ok ? 0 : 1;
}

int cmd_normalize(const Config& c, json& out) {
    if (c.files.size() != 1) throw ConfigError("normalize takes one proof file");
    const std::string& f = c.files[0];
    P p = load_proof(f);
    System s = pick_system(c, f, p);
    Strategy st = pick_strategy(c.strategy);
    if (c.fuel < 1) throw ConfigError("fuel must be positive");
    out["file"] = f;
    out["system"] = system_name(s);
    out["strategy"] = strategy_name(st);
    auto v = validate_proof(p, s);
    if (!v.valid()) {
        out["violations"] = violations_json(v);
        return 1;
    }
    NormalizeResult r;
    try {
        r = normalize(p, s, st, c.fuel);
    } catch (const StepError& e) {
        out["error"] = e.what();
        return 1;
    }
    json trace = json::array();
    for (const auto& t : r.trace)
        trace.push_back({{"path", path_str(t.redex.path)},
                         {"kind", t.redex.kind_str()},
                         {"cuts_before", t.cuts_before},
                         {"cuts_after", t.cuts_after},
                         {"size_before", t.size_before},
                         {"size_after", t.size_after}});
    out["trace"] = trace;
    out["complete"] = r.complete;
    out["normal_form"] = print_proof(r.proof);
    out["cut_free"] = count_cuts(r.proof) == 0;
    int status = r.complete && count_cuts(r.proof) == 0 ? 0 : 1;
    if (c.verify) {
        Built b = build_model(c);
        InvarianceOptions o;
        o.objects = objects_upto(b.get(), c.size);
        o.fuel = c.fuel;
        o.strategies = {st};
        auto inv = check_invariance(b.get(), p, s, o);
        json j = inv.to_json();
        j["model"] = b.get().name();
        out["invariance"] = j;
        if (!inv.error.empty()) throw ConfigError("invariance: " + inv.error);
        if (!inv.ok) status = 1;
    }
    return status;
}

Assignment parse_assignment(const Config& c, const P& p) {
    Assignment a;
    for (const auto& v : proof_vars(p)) a[v] = obj_base(c.size);
    for (const auto& kv : c.assign) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--assign expects NAME=SIZE, got " + kv);
        int n = 0;
        try {
            n = std::stoi(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw ConfigError("--assign expects NAME=SIZE, got " + kv);
        }
        if (n < 0) throw ConfigError("negative size in " + kv);
        a[kv.substr(0, eq)] = obj_base(n);
    }
    return a;
}

int cmd_interpret(const Config& c, json& out) {
    if (c.files.size() != 1) throw ConfigError("interpret takes one proof file");
    P p = load_proof(c.files[0]);
    System s = pick_system(c, c.files[0], p);
    auto v = validate_proof(p, s);
    if (!v.valid()) {
        out["violations"] = violations_json(v);
        return 1;
    }
    Built b = build_model(c);
    Env e(b.get());
    Assignment a = parse_assignment(c, p);
    Mor d;
    try {
        d = interpret_proof(e, p, s, a);
    } catch (const std::exception& ex) {
        throw ConfigError(std::string("cannot interpret in ") + b.get().name() + ": " + ex.what());
    }
    json as = json::object();
    for (const auto& [k, x] : a) as[k] = obj_str(x);
    out["file"] = c.files[0];
    out["system"] = system_name(s);
    out["model"] = b.get().name();
    out["assignment"] = as;
    out["domain"] = obj_str(d->dom);
    out["codomain"] = obj_str(d->cod);
    out["morphism"] = b.get().to_json(d);
    return 0;
}

int cmd_enumerate(const Config& c, json& out) {
    if (c.sequent.empty()) throw ConfigError("enumerate needs --sequent");
    Sequent sq;
    try {
        sq = sequent_from_sexpr(parse_sexpr(c.sequent));
    } catch (const std::exception& e) {
        throw ConfigError(std::string("sequent: ") + e.what());
    }
    auto s = system_from_name(c.system.empty() ? "lj" : c.system);
    if (!s) throw ConfigError("unknown system " + c.system);
    EnumerateOptions o;
    o.max_depth = c.depth;
    std::vector<P> ps;
    try {
        ps = enumerate_proofs(sq, *s, o);
    } catch (const ResourceLimit& e) {
        throw ConfigError(e.what());
    }
    out["sequent"] = sq.str();
    out["system"] = system_name(*s);
    out["depth"] = c.depth;
    out["count"] = ps.size();
    out["proofs"] = json::array();
    for (const auto& p : ps) out["proofs"].push_back(print_proof(p));
    return 0;
}

SuiteReport run_named(const Config& c, const Built& b, const std::string& suite) {
    CheckOptions o;
    o.seed = c.seed;
    o.samples = c.samples;
    o.workers = default_workers();
    // Kleisli structure is perturbed through its base env instead
    if (!b.base_env) o.mutated = mutations(c);
    const Model& m = b.get();
    if (m.name() == "pfn") {
        if (suite != "summability") throw ConfigError("model pfn only runs the summability suite");
        return run_summability_suite(build_pfn(dynamic_cast<const PartialFns&>(m)), m.objects());
    }
    if (suite == "distlaw") {
        if (c.model != "rel") throw ConfigError("suite distlaw runs in rel only");
        Env e(m);
        e.mutated = o.mutated;
        LawOptions lo;
        lo.objects = objects_upto(m, c.size);
        lo.seed = c.seed;
        return distlaw_report(e, lo, o);
    }
    const SuiteSpec* spec = nullptr;
    try {
        spec = &builtin_suite(suite);
    } catch (const std::out_of_range&) {
        std::string names;
        for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
        throw ConfigError("unknown suite " + suite + " (" + names + ")");
    }
    return run_suite(m, *spec, o);
}

int cmd_laws(const Config& c, json& out) {
    Built b = build_model(c);
    auto r = run_named(c, b, c.suite);
    out = r.to_json();
    return r.pass() ? 0 : 1;
}

int cmd_report(const Config& c, json& out) {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> plan = {
        {"finset", {"category", "monoidal", "cartesian", "closed"}},
        {"fincoh", {"category", "monoidal", "cartesian", "closed", "comonad", "seely"}},
        {"rel",
         {"category", "monoidal", "cartesian", "closed", "comonad", "seely", "differential", "summability", "monad",
          "smf", "cohdiff", "cohdiff-reduced", "distlaw"}},
        {"kleisli-bang", {"category", "cartesian", "closed"}},
        {"kleisli-s", {"category", "monoidal", "kleisli-s"}},
        {"pfn", {"summability"}},
    };
    bool ok = true;
    out["reports"] = json::array();
    for (const auto& [model, suites] : plan) {
        if (!c.model.empty() && c.model != "all" && c.model != model) continue;
        Config mc = c;
        mc.model = model;
        Built b = build_model(mc);
        for (const auto& s : suites) {
            if (!c.suite.empty() && c.suite != s) continue;
            auto r = run_named(mc, b, s);
            ok &= r.pass();
            out["reports"].push_back(r.to_json());
        }
    }
    if (!c.corpus.empty()) {
        std::vector<CorpusEntry> entries;
        try {
            entries = load_corpus(c.corpus);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("corpus: ") + e.what());
        }
        json rows = json::array();
        for (const auto& e : entries) {
            bool valid = validate_proof(e.proof, e.system).valid();
            ok &= valid == e.valid;
            rows.push_back({{"file", e.file}, {"expected", e.valid}, {"valid", valid}, {"system", system_name(e.system)}});
        }
        out["corpus"] = rows;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"llk: linear logic proofs and their categorical models"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("-o,--output", c.output, "write the JSON report here");
        s->add_option("--seed", c.seed, "seed for sampled checks");
    };
    auto model_opts = [&](CLI::App* s) {
        s->add_option("--model", c.model, "finset, rel, fincoh, kleisli-bang, kleisli-s, pfn");
        s->add_option("--size", c.size, "largest base object (default 2)");
        s->add_option("--degree", c.degree, "mass bound on ! webs in rel (default 2)");
    };

    auto* check = app.add_subcommand("check", "validate proofs against a system's rules");
    check->add_option("files", c.files, "proof files")->required();
    check->add_option("--system", c.system, "lj, imall, ill, dill");
    common(check);

    auto* norm = app.add_subcommand("normalize", "eliminate cuts and print the trace");
    norm->add_option("file", c.files, "proof file")->required();
    norm->add_option("--system", c.system, "lj, imall, ill, dill");
    norm->add_option("--strategy", c.strategy, "innermost or outermost");
    norm->add_option("--fuel", c.fuel, "step budget (default 10000)");
    norm->add_flag("--verify-invariance", c.verify, "compare denotations before and after every step");
    model_opts(norm);
    common(norm);

    auto* interp = app.add_subcommand("interpret", "compute the denotation of a proof");
    interp->add_option("file", c.files, "proof file")->required();
    interp->add_option("--system", c.system, "lj, imall, ill, dill");
    interp->add_option("--assign", c.assign, "NAME=SIZE; unassigned variables get --size")->delimiter(',');
    model_opts(interp);
    common(interp);

    auto* en = app.add_subcommand("enumerate", "list cut-free proofs of a sequent");
    en->add_option("--sequent", c.sequent, "(seq A1 ... An B)")->required();
    en->add_option("--system", c.system, "lj, imall, ill, dill");
    en->add_option("--depth", c.depth, "height bound (default 4)");
    common(en);

    auto* laws = app.add_subcommand("laws", "check a suite of diagrams in a model");
    laws->add_option("--suite", c.suite, "suite name")->required();
    laws->add_option("--samples", c.samples, "assignments per object tuple when sampling");
    laws->add_option("--mutate", c.mutate, "perturb primitives: dig, m2, dbar, theta, dcoh, derive-nofilter")
        ->delimiter(',');
    model_opts(laws);
    common(laws);

    auto* rep = app.add_subcommand("report", "run every suite in every model");
    model_opts(rep);
    rep->add_option("--suite", c.suite, "only this suite");
    rep->add_option("--corpus", c.corpus, "also classify the corpus in this directory");
    rep->add_option("--samples", c.samples, "assignments per object tuple when sampling");
    common(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (rep->parsed() && rep->count("--model") == 0) c.model = "all";

    json out;
    int status = 0;
    try {
        if (check->parsed()) status = cmd_check(c, out);
        else if (norm->parsed()) status = cmd_normalize(c, out);
        else if (interp->parsed()) status = cmd_interpret(c, out);
        else if (en->parsed()) status = cmd_enumerate(c, out);
        else if (laws->parsed()) status = cmd_laws(c, out);
        else status = cmd_report(c, out);
    } catch (const ConfigError& e) {
        std::cerr << "llk: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "llk: " << e.what() << "\n";
        return 2;
    }
    out["version"] = kSchema;
    std::string text = out.dump(2) + "\n";
    if (c.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.output);
        if (!f || !(f << text)) {
            std::cerr << "llk: cannot write " << c.output << "\n";
            return 2;
        }
    }
    return status;
}
