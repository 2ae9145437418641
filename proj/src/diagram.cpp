#include "llk/diagram.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>

#include "llk/proof.hpp"

namespace llk {

namespace {

[[noreturn]] void bad(const Sexpr& x, const std::string& msg) { throw ParseError(msg, x.pos); }

const Sexpr& item(const Sexpr& x, size_t i, const char* what) {
    if (!x.is_list() || x.items.size() <= i) bad(x, std::string("expected ") + what);
    return x.items[i];
}

std::string sym(const Sexpr& x, const char* what) {
    if (!x.is_atom()) bad(x, std::string("expected a name for ") + what);
    return x.atom;
}

DiagramSpec::MorVar parse_var(const Sexpr& v) {
    if (!v.is_list() || v.items.size() < 3 || v.items.size() > 4) bad(v, "morphism variable needs (name Dom Cod [base])");
    DiagramSpec::MorVar r;
    r.name = sym(v.items[0], "morphism variable");
    r.dom = v.items[1];
    r.cod = v.items[2];
    if (v.items.size() == 4) {
        if (!v.items[3].is_atom("base")) bad(v.items[3], "expected 'base'");
        r.base = true;
    }
    return r;
}

DiagramSpec parse_diagram(const Sexpr& x) {
    DiagramSpec d;
    const std::string& h = x.head();
    if (h == "diagram") d.kind = DiagramSpec::Kind::Eq;
    else if (h == "unique") d.kind = DiagramSpec::Kind::Unique;
    else bad(x, "expected (diagram ...) or (unique ...)");
    d.name = sym(item(x, 1, "a diagram name"), "diagram");
    bool have_eq = false, have_map = false;
    for (size_t i = 2; i < x.items.size(); ++i) {
        const Sexpr& c = x.items[i];
        const std::string& k = c.head();
        if (k == "objects") {
            for (size_t j = 1; j < c.items.size(); ++j) d.objects.push_back(sym(c.items[j], "object variable"));
        } else if (k == "morphisms") {
            for (size_t j = 1; j < c.items.size(); ++j) d.morphisms.push_back(parse_var(c.items[j]));
        } else if (k == "eq" && d.kind == DiagramSpec::Kind::Eq) {
            if (c.items.size() != 3 || have_eq) bad(c, "a diagram has exactly one (eq LHS RHS)");
            d.lhs = c.items[1];
            d.rhs = c.items[2];
            have_eq = true;
        } else if (k == "map" && d.kind == DiagramSpec::Kind::Unique) {
            if (c.items.size() != 4) bad(c, "expected (map h Dom Cod)");
            d.map = parse_var(Sexpr{Sexpr::Kind::List, "", {c.items[1], c.items[2], c.items[3]}, c.pos});
            have_map = true;
        } else if (k == "keys" && d.kind == DiagramSpec::Kind::Unique) {
            for (size_t j = 1; j < c.items.size(); ++j) d.keys.push_back(c.items[j]);
        } else {
            bad(c, "unexpected clause in " + h + " " + d.name);
        }
    }
    if (d.kind == DiagramSpec::Kind::Eq && !have_eq) bad(x, "diagram " + d.name + " has no (eq ...)");
    if (d.kind == DiagramSpec::Kind::Unique && (!have_map || d.keys.empty()))
        bad(x, "unique " + d.name + " needs (map ...) and (keys ...)");
    return d;
}

SuiteSpec parse_one(const Sexpr& x) {
    if (x.head() != "suite") bad(x, "expected (suite NAME ...)");
    SuiteSpec s;
    s.name = sym(item(x, 1, "a suite name"), "suite");
    std::set<std::string> seen;
    for (size_t i = 2; i < x.items.size(); ++i) {
        s.diagrams.push_back(parse_diagram(x.items[i]));
        if (!seen.insert(s.diagrams.back().name).second)
            bad(x.items[i], "duplicate diagram name " + s.diagrams.back().name);
    }
    return s;
}

// ---- evaluation

struct Op {
    std::string kinds;  // one letter per argument: o object, m morphism; "*" variadic morphisms
    std::function<Mor(const Env&, const std::vector<Obj>&, const std::vector<Mor>&)> f;
};

const std::map<std::string, Op>& ops() {
    using O = std::vector<Obj>;
    using M = std::vector<Mor>;
    static const std::map<std::string, Op> t = {
        {"id", {"o", [](const Env& e, const O& o, const M&) { return e.id(o[0]); }}},
        {"comp", {"*", [](const Env& e, const O&, const M& m) {
             Mor r = m.back();
             for (size_t i = m.size() - 1; i-- > 0;) r = e.comp(m[i], r);
             return r;
         }}},
        {"tensor", {"mm", [](const Env& e, const O&, const M& m) { return e.tensor(m[0], m[1]); }}},
        {"pair", {"mm", [](const Env& e, const O&, const M& m) { return e.pair(m[0], m[1]); }}},
        {"with", {"mm", [](const Env& e, const O&, const M& m) { return e.with_map(m[0], m[1]); }}},
        {"pr0", {"oo", [](const Env& e, const O& o, const M&) { return e.pr0(o[0], o[1]); }}},
        {"pr1", {"oo", [](const Env& e, const O& o, const M&) { return e.pr1(o[0], o[1]); }}},
        {"term", {"o", [](const Env& e, const O& o, const M&) { return e.term(o[0]); }}},
        {"alpha", {"ooo", [](const Env& e, const O& o, const M&) { return e.alpha(o[0], o[1], o[2]); }}},
        {"alpha-inv", {"ooo", [](const Env& e, const O& o, const M&) { return e.alpha_inv(o[0], o[1], o[2]); }}},
        {"lambda", {"o", [](const Env& e, const O& o, const M&) { return e.lambda(o[0]); }}},
        {"lambda-inv", {"o", [](const Env& e, const O& o, const M&) { return e.lambda_inv(o[0]); }}},
        {"rho", {"o", [](const Env& e, const O& o, const M&) { return e.rho(o[0]); }}},
        {"rho-inv", {"o", [](const Env& e, const O& o, const M&) { return e.rho_inv(o[0]); }}},
        {"gamma", {"oo", [](const Env& e, const O& o, const M&) { return e.gamma(o[0], o[1]); }}},
        {"ev", {"oo", [](const Env& e, const O& o, const M&) { return e.ev(o[0], o[1]); }}},
        {"cur", {"m", [](const Env& e, const O&, const M& m) { return e.cur(m[0]); }}},
        {"bang", {"m", [](const Env& e, const O&, const M& m) { return e.bang(m[0]); }}},
        {"der", {"o", [](const Env& e, const O& o, const M&) { return e.der(o[0]); }}},
        {"dig", {"o", [](const Env& e, const O& o, const M&) { return e.dig(o[0]); }}},
        {"m0", {"", [](const Env& e, const O&, const M&) { return e.m0(); }}},
        {"m0-inv", {"", [](const Env& e, const O&, const M&) { return e.m0_inv(); }}},
        {"m2", {"oo", [](const Env& e, const O& o, const M&) { return e.m2(o[0], o[1]); }}},
        {"m2-inv", {"oo", [](const Env& e, const O& o, const M&) { return e.m2_inv(o[0], o[1]); }}},
        {"coder", {"o", [](const Env& e, const O& o, const M&) { return e.coder(o[0]); }}},
        {"coweak", {"o", [](const Env& e, const O& o, const M&) { return e.coweak(o[0]); }}},
        {"cocontr", {"o", [](const Env& e, const O& o, const M&) { return e.cocontr(o[0]); }}},
        {"dbar", {"o", [](const Env& e, const O& o, const M&) { return e.dbar(o[0]); }}},
        {"zero", {"oo", [](const Env& e, const O& o, const M&) { return e.zero(o[0], o[1]); }}},
        {"sum", {"mm", [](const Env& e, const O&, const M& m) { return e.sum(m[0], m[1]); }}},
        {"alpha-with", {"ooo", [](const Env& e, const O& o, const M&) { return e.with_alpha(o[0], o[1], o[2]); }}},
        {"gamma-with", {"oo", [](const Env& e, const O& o, const M&) { return e.with_gamma(o[0], o[1]); }}},
        {"delta", {"o", [](const Env& e, const O& o, const M&) { return e.delta(o[0]); }}},
        {"weak", {"o", [](const Env& e, const O& o, const M&) { return e.weak(o[0]); }}},
        {"contr", {"o", [](const Env& e, const O& o, const M&) { return e.contr(o[0]); }}},
        {"promote", {"m", [](const Env& e, const O&, const M& m) { return e.promote(m[0]); }}},
        {"S", {"m", [](const Env& e, const O&, const M& m) { return e.Smap(m[0]); }}},
        {"pi0", {"o", [](const Env& e, const O& o, const M&) { return e.pi0(o[0]); }}},
        {"pi1", {"o", [](const Env& e, const O& o, const M&) { return e.pi1(o[0]); }}},
        {"sigma", {"o", [](const Env& e, const O& o, const M&) { return e.sigma(o[0]); }}},
        {"iota0", {"o", [](const Env& e, const O& o, const M&) { return e.iota0(o[0]); }}},
        {"iota1", {"o", [](const Env& e, const O& o, const M&) { return e.iota1(o[0]); }}},
        {"swap", {"o", [](const Env& e, const O& o, const M&) { return e.swap(o[0]); }}},
        {"flip", {"o", [](const Env& e, const O& o, const M&) { return e.flip(o[0]); }}},
        {"psi", {"oo", [](const Env& e, const O& o, const M&) { return e.psi(o[0], o[1]); }}},
        {"theta", {"o", [](const Env& e, const O& o, const M&) { return e.theta(o[0]); }}},
        {"phi0", {"oo", [](const Env& e, const O& o, const M&) { return e.phi0(o[0], o[1]); }}},
        {"phi1", {"oo", [](const Env& e, const O& o, const M&) { return e.phi1(o[0], o[1]); }}},
        {"L", {"oo", [](const Env& e, const O& o, const M&) { return e.L(o[0], o[1]); }}},
        {"L-alt", {"oo", [](const Env& e, const O& o, const M&) { return e.L_alt(o[0], o[1]); }}},
        {"derive", {"o", [](const Env& e, const O& o, const M&) { return e.derive(o[0]); }}},
        {"dcoh", {"o", [](const Env& e, const O& o, const M&) { return e.dcoh(o[0]); }}},
        {"kappa", {"m", [](const Env& e, const O&, const M& m) { return e.kappa(m[0]); }}},
    };
    return t;
}

}  // namespace

SuiteSpec parse_suite(const std::string& text) { return parse_one(parse_sexpr(text)); }

std::vector<SuiteSpec> parse_suites(const std::string& text) {
    std::vector<SuiteSpec> out;
    for (const auto& x : parse_sexprs(text)) out.push_back(parse_one(x));
    return out;
}

std::vector<std::string> morphism_ops() {
    std::vector<std::string> out;
    for (const auto& [k, v] : ops()) out.push_back(k);
    return out;
}

Obj eval_object(const Env& e, const Sexpr& x, const Bindings& b) {
    if (x.is_atom()) {
        if (x.atom == "one") return e.one();
        if (x.atom == "top") return e.top();
        auto it = b.objects.find(x.atom);
        if (it == b.objects.end()) bad(x, "unbound object " + x.atom);
        return it->second;
    }
    const std::string& h = x.head();
    auto arg = [&](size_t i) { return eval_object(e, item(x, i, "an object argument"), b); };
    if ((h == "tensor" || h == "with" || h == "lolli") && x.items.size() == 3) {
        Obj l = arg(1), r = arg(2);
        return h == "tensor" ? e.tensor(l, r) : h == "with" ? e.with(l, r) : e.lolli(l, r);
    }
    if ((h == "bang" || h == "S") && x.items.size() == 2) return h == "bang" ? e.bang(arg(1)) : e.S(arg(1));
    bad(x, "malformed object expression " + x.str());
}

Mor eval_morphism(const Env& e, const Sexpr& x, const Bindings& b) {
    if (x.is_atom()) {
        auto it = b.morphisms.find(x.atom);
        if (it != b.morphisms.end()) return it->second;
        auto op = ops().find(x.atom);
        if (op != ops().end() && op->second.kinds.empty()) return op->second.f(e, {}, {});
        bad(x, "unbound morphism " + x.atom);
    }
    const std::string& h = x.head();
    if (h == "base") {
        // evaluate in the base model of a Kleisli category
        if (x.items.size() != 2) bad(x, "expected (base EXPR)");
        const Model* bm = e.model().base();
        if (!bm) throw Unsupported(e.model().name() + ": (base ...) outside a Kleisli model");
        Env be(*bm, e.tracking());
        be.mutated = e.mutated;
        return eval_morphism(be, x.items[1], b);
    }
    auto op = ops().find(h);
    if (op == ops().end()) bad(x, "unknown operator " + (h.empty() ? x.str() : h));
    const std::string& k = op->second.kinds;
    std::vector<Obj> os;
    std::vector<Mor> ms;
    size_t n = x.items.size() - 1;
    if (k == "*") {
        if (n == 0) bad(x, "comp needs at least one argument");
        for (size_t i = 1; i <= n; ++i) ms.push_back(eval_morphism(e, x.items[i], b));
    } else {
        if (n != k.size()) bad(x, h + " expects " + std::to_string(k.size()) + " arguments");
        for (size_t i = 0; i < n; ++i) {
            if (k[i] == 'o') os.push_back(eval_object(e, x.items[i + 1], b));
            else ms.push_back(eval_morphism(e, x.items[i + 1], b));
        }
    }
    return op->second.f(e, os, ms);
}

// ---- checking

namespace {

uint64_t fnv(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

// Tuples of indices < n of length k, ordered by sum then lexicographically.
std::vector<std::vector<int>> tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(k, 0);
    if (n == 0 && k > 0) return out;
    std::function<void(int)> go = [&](int i) {
        if (i == k) {
            out.push_back(t);
            return;
        }
        for (int v = 0; v < n; ++v) {
            t[i] = v;
            go(i + 1);
        }
    };
    go(0);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        return sa < sb;
    });
    return out;
}

struct Inst {
    Bindings b;
    nlohmann::json objects = nlohmann::json::object();
};

const Model& carrier(const Model& m, const DiagramSpec::MorVar& v) {
    if (!v.base) return m;
    if (!m.base()) throw Unsupported(m.name() + ": base morphism variable " + v.name + " outside a Kleisli model");
    return *m.base();
}

// Tracks linearity of every morphism variable in both sides.
bool all_linear(const Model& m, const Inst& in, const std::vector<DiagramSpec::MorVar>& vars,
                const std::vector<const Sexpr*>& sides) {
    Env t(m, true);
    Bindings b = in.b;
    for (const auto& v : vars)
        b.morphisms[v.name] = t.var(v.name, eval_object(t, v.dom, b), eval_object(t, v.cod, b));
    for (const Sexpr* s : sides) {
        Mor r = eval_morphism(t, *s, b);
        auto* tm = dynamic_cast<const TrackMor*>(r.get());
        if (!tm) continue;
        for (const auto& [name, cl] : tm->vars)
            if (cl.first > 1 || !cl.second) return false;
    }
    return true;
}


void check_eq(const Model& m, const DiagramSpec& d, const CheckOptions& o, const Inst& in, CheckResult& r,
              std::mt19937_64& rng) {
    Env e(m);
    e.mutated = o.mutated;
    Bindings b = in.b;
    std::vector<Obj> dom, cod;
    for (const auto& v : d.morphisms) {
        dom.push_back(eval_object(e, v.dom, b));
        cod.push_back(eval_object(e, v.cod, b));
    }
    // type check both sides once with tracking stand-ins
    {
        Env t(m, true);
        Bindings tb = b;
        for (size_t i = 0; i < d.morphisms.size(); ++i) tb.morphisms[d.morphisms[i].name] = t.var(d.morphisms[i].name, dom[i], cod[i]);
        Mor l = eval_morphism(t, d.lhs, tb), rr = eval_morphism(t, d.rhs, tb);
        if (l->dom != rr->dom || l->cod != rr->cod)
            throw TypeError("sides differ: " + obj_str(l->dom) + " -> " + obj_str(l->cod) + " vs " + obj_str(rr->dom) +
                            " -> " + obj_str(rr->cod));
    }

    size_t k = d.morphisms.size();
    std::vector<std::vector<Mor>> choices(k);
    bool sampled = false;
    std::string method = k == 0 ? "none" : "exhaustive";
    bool linear = k > 0 && m.relational();
    for (const auto& v : d.morphisms) linear = linear && carrier(m, v).relational();
    if (linear) linear = all_linear(m, in, d.morphisms, {&d.lhs, &d.rhs});
    if (linear) {
        method = "atoms";
        for (size_t i = 0; i < k; ++i) choices[i] = carrier(m, d.morphisms[i]).atoms(dom[i], cod[i]);
    } else if (k > 0) {
        double total = 1;
        bool known = true;
        for (size_t i = 0; i < k; ++i) {
            auto c = carrier(m, d.morphisms[i]).hom_count(dom[i], cod[i]);
            if (!c) known = false;
            else total *= *c;
        }
        if (known && total <= o.exhaustive_limit) {
            for (size_t i = 0; i < k; ++i) choices[i] = carrier(m, d.morphisms[i]).homs(dom[i], cod[i]);
        } else {
            sampled = true;
            method = "sampled";
        }
    }
    if (r.method.empty() || r.method == "none" || (method == "sampled")) r.method = method;
    if (sampled) r.exhaustive = false;

    auto test = [&](const std::vector<Mor>& pick) -> bool {
        for (size_t i = 0; i < k; ++i) b.morphisms[d.morphisms[i].name] = pick[i];
        Mor l = eval_morphism(e, d.lhs, b), rr = eval_morphism(e, d.rhs, b);
        ++r.cases;
        if (m.equal(l, rr)) return true;
        nlohmann::json ce;
        ce["objects"] = in.objects;
        nlohmann::json ms = nlohmann::json::object();
        for (size_t i = 0; i < k; ++i) ms[d.morphisms[i].name] = carrier(m, d.morphisms[i]).to_json(pick[i]);
        ce["morphisms"] = ms;
        ce["difference"] = mor_difference(m, l, rr);
        r.status = "fail";
        r.counterexample = ce;
        return false;
    };

    std::vector<Mor> pick(k);
    if (sampled) {
        for (int s = 0; s < o.samples; ++s) {
            for (size_t i = 0; i < k; ++i) pick[i] = carrier(m, d.morphisms[i]).random_hom(dom[i], cod[i], rng);
            if (!test(pick)) return;
        }
        return;
    }
    for (const auto& c : choices)
        if (c.empty()) return;  // empty hom-set: nothing to check
    std::vector<size_t> idx(k, 0);
    while (true) {
        for (size_t i = 0; i < k; ++i) pick[i] = choices[i][idx[i]];
        if (!test(pick)) return;
        size_t i = k;
        while (i > 0) {
            --i;
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

void check_unique(const Model& m, const DiagramSpec& d, const CheckOptions& o, const Inst& in, CheckResult& r,
                  std::mt19937_64& rng) {
    Env e(m);
    e.mutated = o.mutated;
    Bindings b = in.b;
    const auto& v = d.map;
    Obj dom = eval_object(e, v.dom, b), cod = eval_object(e, v.cod, b);
    const Model& cm = carrier(m, v);

    auto keys_of = [&](const Mor& h) {
        b.morphisms[v.name] = h;
        std::vector<Mor> ks;
        for (const auto& k : d.keys) ks.push_back(eval_morphism(e, k, b));
        return ks;
    };
    auto fail = [&](const Mor& h1, const Mor& h2) {
        nlohmann::json ce;
        ce["objects"] = in.objects;
        ce["h1"] = cm.to_json(h1);
        ce["h2"] = cm.to_json(h2);
        r.status = "fail";
        r.counterexample = ce;
    };

    std::vector<const Sexpr*> sides;
    for (const auto& k : d.keys) sides.push_back(&k);
    bool linear = m.relational() && cm.relational() && all_linear(m, in, {v}, sides);
    if (linear) {
        // A union-preserving key map is injective on relations iff every
        // atom owns a key pair that no other atom produces.
        auto atoms = cm.atoms(dom, cod);
        std::vector<std::set<std::string>> ks;
        std::map<std::string, int> count;
        for (size_t i = 1; i < atoms.size(); ++i) {
            std::set<std::string> s;
            auto kv = keys_of(atoms[i]);
            for (size_t j = 0; j < kv.size(); ++j)
                for (const auto& [x, y] : m.pairs(kv[j])) s.insert(std::to_string(j) + "|" + x + "|" + y);
            for (const auto& x : s) ++count[x];
            ks.push_back(std::move(s));
        }
        bool ok = true;
        for (size_t i = 0; i < ks.size() && ok; ++i) {
            ++r.cases;
            bool priv = false;
            for (const auto& x : ks[i]) priv = priv || count[x] == 1;
            if (!priv) {
                ok = false;
                if (cm.full_powerset()) {
                    // then all atoms and all atoms but this one share their keys
                    nlohmann::json ce;
                    ce["objects"] = in.objects;
                    ce["atom"] = cm.to_json(atoms[i + 1]);
                    ce["reason"] = "keys of this pair are covered by the other pairs";
                    r.status = "fail";
                    r.counterexample = ce;
                    return;
                }
            }
        }
        if (ok) {
            if (r.method.empty() || r.method == "none") r.method = "certificate";
            return;
        }
        // not a powerset (cliques): fall through to enumeration
    }

    auto c = cm.hom_count(dom, cod);
    bool sampled = !c || *c > o.exhaustive_limit;
    std::unordered_map<std::string, Mor> seen;
    auto probe = [&](const Mor& h) -> bool {
        ++r.cases;
        std::string key;
        for (const auto& k : keys_of(h)) key += m.to_json(k).dump() + "#";
        auto [it, fresh] = seen.emplace(key, h);
        if (fresh || cm.equal(it->second, h)) return true;
        fail(it->second, h);
        return false;
    };
    if (sampled) {
        r.exhaustive = false;
        r.method = "sampled";
        for (int s = 0; s < o.samples * 4; ++s)
            if (!probe(cm.random_hom(dom, cod, rng))) return;
        return;
    }
    if (r.method != "sampled") r.method = "exhaustive";
    for (const auto& h : cm.homs(dom, cod))
        if (!probe(h)) return;
}

}  // namespace

nlohmann::json mor_difference(const Model& m, const Mor& l, const Mor& r) {
    nlohmann::json jl = m.to_json(l), jr = m.to_json(r);
    nlohmann::json out;
    if (m.relational()) {
        std::set<nlohmann::json> sl(jl.begin(), jl.end()), sr(jr.begin(), jr.end());
        nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
        for (const auto& x : sl)
            if (!sr.count(x) && a.size() < 8) a.push_back(x);
        for (const auto& x : sr)
            if (!sl.count(x) && b.size() < 8) b.push_back(x);
        out["only_lhs"] = a;
        out["only_rhs"] = b;
    } else {
        out["lhs"] = jl;
        out["rhs"] = jr;
    }
    return out;
}

CheckResult check_diagram(const Model& m, const DiagramSpec& d, const CheckOptions& o) {
    CheckResult r;
    r.name = d.name;
    r.status = "pass";
    std::mt19937_64 rng(o.seed ^ fnv(d.name));
    std::vector<Obj> objs = o.objects.empty() ? m.objects() : o.objects;
    try {
        for (const auto& t : tuples(static_cast<int>(objs.size()), static_cast<int>(d.objects.size()))) {
            Inst in;
            for (size_t i = 0; i < t.size(); ++i) {
                in.b.objects[d.objects[i]] = objs[t[i]];
                in.objects[d.objects[i]] = obj_str(objs[t[i]]);
            }
            if (d.kind == DiagramSpec::Kind::Eq) check_eq(m, d, o, in, r, rng);
            else check_unique(m, d, o, in, r, rng);
            if (r.status != "pass") break;
        }
    } catch (const Unsupported& e) {
        r.status = "error";
        r.error = e.what();
    } catch (const TypeError& e) {
        r.status = "error";
        r.error = std::string("ill-typed: ") + e.what();
    } catch (const ParseError& e) {
        r.status = "error";
        r.error = e.what();
    } catch (const ResourceLimit& e) {
        r.status = "error";
        r.error = std::string("budget: ") + e.what();
    }
    if (r.method.empty()) r.method = "none";
    return r;
}

SuiteReport run_suite(const Model& m, const SuiteSpec& s, const CheckOptions& o) {
    SuiteReport rep;
    rep.suite = s.name;
    rep.model = m.name();
    rep.diagrams.resize(s.diagrams.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < s.diagrams.size();) rep.diagrams[i] = check_diagram(m, s.diagrams[i], o);
    };
    int n = std::max(1, std::min<int>(o.workers, static_cast<int>(s.diagrams.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rep;
}

bool SuiteReport::pass() const {
    for (const auto& d : diagrams)
        if (!d.pass()) return false;
    return true;
}

const CheckResult* SuiteReport::find(const std::string& name) const {
    for (const auto& d : diagrams)
        if (d.name == name) return &d;
    return nullptr;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["model"] = model;
    j["diagrams"] = nlohmann::json::array();
    for (const auto& d : diagrams) {
        nlohmann::json x;
        x["name"] = d.name;
        x["status"] = d.status;
        x["exhaustive"] = d.exhaustive;
        x["method"] = d.method;
        x["cases"] = d.cases;
        if (!d.counterexample.is_null()) x["counterexample"] = d.counterexample;
        if (!d.error.empty()) x["error"] = d.error;
        j["diagrams"].push_back(x);
    }
    return j;
}

int default_workers() {
    const char* w = std::getenv("LLK_WORKERS");
    if (!w) return 1;
    int n = std::atoi(w);
    return n > 0 ? n : 1;
}

}  // namespace llk
