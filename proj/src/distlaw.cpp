#include "llk/distlaw.hpp"

#include <random>

#include "llk/suites.hpp"

namespace llk {

namespace {

Obj unS(Obj sx) {
    if (sx->kind != OK::With || sx->a != sx->b) throw TypeError("not of the form SX: " + obj_str(sx));
    return sx->a;
}

// g ∘_K f = θ ∘ Sg ∘ f for f : X → SY, g : Y → SZ
Mor kcomp(const Env& e, const Mor& g, const Mor& f) { return e.comp({e.theta(unS(g->cod)), e.Smap(g), f}); }

// κ f = ι0 ∘ f, in the base category
Mor embed(const Env& e, const Mor& f) { return e.comp(e.iota0(f->cod), f); }

CheckResult fresh(const std::string& name) {
    CheckResult r;
    r.name = name;
    r.status = "pass";
    r.method = "exhaustive";
    return r;
}

void fail(CheckResult& r, const Model& m, nlohmann::json ce, const Mor& l, const Mor& rr) {
    if (r.status != "pass") return;
    r.status = "fail";
    ce["difference"] = mor_difference(m, l, rr);
    r.counterexample = std::move(ce);
}

// Runs fn on every morphism a → b, or on a seeded sample when there are too many.
template <class Fn>
void each_hom(const Model& m, Obj a, Obj b, const LawOptions& o, CheckResult& r, Fn&& fn) {
    auto n = m.hom_count(a, b);
    if (n && *n <= o.exhaustive_limit) {
        for (const Mor& f : m.homs(a, b)) {
            ++r.cases;
            fn(f);
        }
        return;
    }
    r.exhaustive = false;
    r.method = "sampled";
    std::mt19937_64 rng(o.seed ^ std::hash<std::string>{}(r.name + obj_str(a) + obj_str(b)));
    for (int i = 0; i < o.samples; ++i) {
        ++r.cases;
        fn(m.random_hom(a, b, rng));
    }
}

nlohmann::json objs(std::initializer_list<std::pair<const char*, Obj>> os) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, x] : os) j[k] = obj_str(x);
    return j;
}

template <class Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
    CheckResult r = fresh(name);
    try {
        fn(r);
    } catch (const std::exception& ex) {
        r.status = "error";
        r.error = ex.what();
    }
    return r;
}

Functor identity_functor() {
    return {"Id", [](const Env&, Obj x) { return x; }, [](const Env&, const Mor& f) { return f; }};
}

Functor bang_functor() {
    return {"!", [](const Env& e, Obj x) { return e.bang(x); }, [](const Env& e, const Mor& f) { return e.bang(f); }};
}

}  // namespace

DistLaw law_identity() {
    return {"Id", identity_functor(), [](const Env& e, Obj x) { return e.id(e.S(x)); }};
}

DistLaw law_bang() {
    return {"!", bang_functor(), [](const Env& e, Obj x) { return e.dcoh(x); }};
}

DistLaw law_bangbang() {
    Functor f{"!!", [](const Env& e, Obj x) { return e.bang(e.bang(x)); },
              [](const Env& e, const Mor& g) { return e.bang(e.bang(g)); }};
    return {"!!", f, [](const Env& e, Obj x) { return e.comp(e.dcoh(e.bang(x)), e.bang(e.dcoh(x))); }};
}

SuiteReport is_dist_law(const Env& e, const DistLaw& d, const LawOptions& o) {
    const Model& m = e.model();
    SuiteReport rep;
    rep.suite = "distlaw[" + d.name + "]";
    rep.model = m.name();
    const auto& F = d.F;
    rep.diagrams.push_back(guarded("lift-unit", [&](CheckResult& r) {
        for (Obj x : o.objects) {
            ++r.cases;
            Mor l = e.comp(d.lam(e, x), F.mor(e, e.iota0(x))), rr = e.iota0(F.obj(e, x));
            if (!m.equal(l, rr)) fail(r, m, {{"objects", objs({{"X", x}})}}, l, rr);
        }
    }));
    rep.diagrams.push_back(guarded("lift-sum", [&](CheckResult& r) {
        for (Obj x : o.objects) {
            ++r.cases;
            Mor l = e.comp(d.lam(e, x), F.mor(e, e.theta(x)));
            Mor rr = e.comp({e.theta(F.obj(e, x)), e.Smap(d.lam(e, x)), d.lam(e, e.S(x))});
            if (!m.equal(l, rr)) fail(r, m, {{"objects", objs({{"X", x}})}}, l, rr);
        }
    }));
    rep.diagrams.push_back(guarded("natural", [&](CheckResult& r) {
        for (Obj x : o.objects)
            for (Obj y : o.objects) {
                Mor lx = d.lam(e, x), ly = d.lam(e, y);
                each_hom(m, x, y, o, r, [&](const Mor& f) {
                    Mor l = e.comp(e.Smap(F.mor(e, f)), lx), rr = e.comp(ly, F.mor(e, e.Smap(f)));
                    if (!m.equal(l, rr))
                        fail(r, m, {{"objects", objs({{"X", x}, {"Y", y}})}, {"morphisms", {{"f", m.to_json(f)}}}}, l,
                             rr);
                });
            }
    }));
    return rep;
}

ExtendedFunctor extend_functor(const Env& e, const DistLaw& d) {
    return {d.name + "^", [&e, d](Obj x) { return d.F.obj(e, x); },
            [&e, d](const Mor& f) { return e.comp(d.lam(e, unS(f->cod)), d.F.mor(e, f)); }};
}

DistLaw law_from_extension(const Env&, const ExtendedFunctor& fh) {
    Functor f{fh.name + "|", [fh](const Env&, Obj x) { return fh.obj(x); },
              [fh](const Env& env, const Mor& g) {
                  return env.comp(env.pi0(fh.obj(g->cod)), fh.mor(embed(env, g)));
              }};
    return {fh.name + "|", f, [fh](const Env& env, Obj x) { return fh.mor(env.id(env.S(x))); }};
}

SuiteReport check_extension(const Env& e, const DistLaw& d, const LawOptions& o) {
    const Model& m = e.model();
    SuiteReport rep;
    rep.suite = "extension[" + d.name + "]";
    rep.model = m.name();
    ExtendedFunctor fh = extend_functor(e, d);
    DistLaw back = law_from_extension(e, fh);
    ExtendedFunctor again = extend_functor(e, back);

    rep.diagrams.push_back(guarded("round-trip-law", [&](CheckResult& r) {
        for (Obj x : o.objects) {
            ++r.cases;
            Mor l = back.lam(e, x), rr = d.lam(e, x);
            if (!m.equal(l, rr)) fail(r, m, {{"objects", objs({{"X", x}})}}, l, rr);
        }
    }));
    rep.diagrams.push_back(guarded("round-trip-functor", [&](CheckResult& r) {
        for (Obj x : o.objects)
            for (Obj y : o.objects)
                each_hom(m, x, e.S(y), o, r, [&](const Mor& f) {
                    Mor l = again.mor(f), rr = fh.mor(f);
                    if (!m.equal(l, rr))
                        fail(r, m, {{"objects", objs({{"X", x}, {"Y", y}})}, {"morphisms", {{"f", m.to_json(f)}}}}, l,
                             rr);
                });
    }));
    rep.diagrams.push_back(guarded("base-functor", [&](CheckResult& r) {
        for (Obj x : o.objects)
            for (Obj y : o.objects)
                each_hom(m, x, y, o, r, [&](const Mor& f) {
                    Mor l = back.F.mor(e, f), rr = d.F.mor(e, f);
                    if (!m.equal(l, rr))
                        fail(r, m, {{"objects", objs({{"X", x}, {"Y", y}})}, {"morphisms", {{"f", m.to_json(f)}}}}, l,
                             rr);
                });
    }));
    rep.diagrams.push_back(guarded("extension-unit", [&](CheckResult& r) {
        for (Obj x : o.objects) {
            ++r.cases;
            Mor l = fh.mor(e.iota0(x)), rr = e.iota0(fh.obj(x));
            if (!m.equal(l, rr)) fail(r, m, {{"objects", objs({{"X", x}})}}, l, rr);
        }
    }));
    rep.diagrams.push_back(guarded("extension-kappa", [&](CheckResult& r) {
        for (Obj x : o.objects)
            for (Obj y : o.objects)
                each_hom(m, x, y, o, r, [&](const Mor& f) {
                    Mor l = fh.mor(embed(e, f)), rr = embed(e, d.F.mor(e, f));
                    if (!m.equal(l, rr))
                        fail(r, m, {{"objects", objs({{"X", x}, {"Y", y}})}, {"morphisms", {{"f", m.to_json(f)}}}}, l,
                             rr);
                });
    }));
    rep.diagrams.push_back(guarded("extension-comp", [&](CheckResult& r) {
        r.exhaustive = false;
        r.method = "sampled";
        std::mt19937_64 rng(o.seed);
        for (Obj x : o.objects)
            for (Obj y : o.objects)
                for (Obj z : o.objects)
                    for (int i = 0; i < o.samples; ++i) {
                        ++r.cases;
                        Mor f = m.random_hom(x, e.S(y), rng), g = m.random_hom(y, e.S(z), rng);
                        Mor l = fh.mor(kcomp(e, g, f)), rr = kcomp(e, fh.mor(g), fh.mor(f));
                        if (!m.equal(l, rr))
                            fail(r, m,
                                 {{"objects", objs({{"X", x}, {"Y", y}, {"Z", z}})},
                                  {"morphisms", {{"f", m.to_json(f)}, {"g", m.to_json(g)}}}},
                                 l, rr);
                    }
    }));
    return rep;
}

CheckResult is_dlaw_morphism(const Env& e, const NatTrans& a, const DistLaw& f, const DistLaw& g,
                             const LawOptions& o) {
    const Model& m = e.model();
    return guarded("dlaw-morphism[" + a.name + "]", [&](CheckResult& r) {
        for (Obj x : o.objects) {
            ++r.cases;
            Mor l = e.comp(e.Smap(a.at(e, x)), f.lam(e, x)), rr = e.comp(g.lam(e, x), a.at(e, e.S(x)));
            if (!m.equal(l, rr)) fail(r, m, {{"objects", objs({{"X", x}})}}, l, rr);
        }
    });
}

std::optional<NatTrans> extend_nat(const Env& e, const NatTrans& a, const DistLaw& f, const DistLaw& g,
                                   const LawOptions& o, CheckResult* report) {
    const Model& m = e.model();
    ExtendedFunctor fh = extend_functor(e, f), gh = extend_functor(e, g);
    auto ka = [&](Obj x) { return embed(e, a.at(e, x)); };
    CheckResult r = guarded("extend-nat[" + a.name + "]", [&](CheckResult& r) {
        auto check = [&](Obj x, Obj y, const Mor& h) {
            Mor l = kcomp(e, gh.mor(h), ka(x)), rr = kcomp(e, ka(y), fh.mor(h));
            if (!m.equal(l, rr))
                fail(r, m, {{"objects", objs({{"X", x}, {"Y", y}})}, {"morphisms", {{"h", m.to_json(h)}}}}, l, rr);
        };
        for (Obj y : o.objects) {
            std::vector<Obj> xs = o.objects;
            xs.push_back(e.S(y));
            for (Obj x : xs) {
                if (x == e.S(y)) {
                    ++r.cases;
                    check(x, y, e.id(x));
                }
                each_hom(m, x, e.S(y), o, r, [&](const Mor& h) { check(x, y, h); });
            }
        }
    });
    bool ok = r.pass();
    if (report) *report = std::move(r);
    if (!ok) return std::nullopt;
    return NatTrans{"κ" + a.name, [a](const Env& env, Obj x) { return embed(env, a.at(env, x)); }};
}

CoLaw colaw_S() {
    Functor s{"S", [](const Env& e, Obj x) { return e.S(x); }, [](const Env& e, const Mor& f) { return e.Smap(f); }};
    return {"S", s, [](const Env& e, Obj x) { return e.dcoh(x); }};
}

SuiteReport is_comonad_dist_law(const Env& e, const CoLaw& d, const LawOptions& o) {
    const Model& m = e.model();
    SuiteReport rep;
    rep.suite = "colaw[" + d.name + "]";
    rep.model = m.name();
    const auto& G = d.G;
    rep.diagrams.push_back(guarded("lift-counit", [&](CheckResult& r) {
        for (Obj x : o.objects) {
            ++r.cases;
            Mor l = e.comp(G.mor(e, e.der(x)), d.lam(e, x)), rr = e.der(G.obj(e, x));
            if (!m.equal(l, rr)) fail(r, m, {{"objects", objs({{"X", x}})}}, l, rr);
        }
    }));
    rep.diagrams.push_back(guarded("lift-cosum", [&](CheckResult& r) {
        for (Obj x : o.objects) {
            ++r.cases;
            Mor l = e.comp(G.mor(e, e.dig(x)), d.lam(e, x));
            Mor rr = e.comp({d.lam(e, e.bang(x)), e.bang(d.lam(e, x)), e.dig(G.obj(e, x))});
            if (!m.equal(l, rr)) fail(r, m, {{"objects", objs({{"X", x}})}}, l, rr);
        }
    }));
    rep.diagrams.push_back(guarded("natural", [&](CheckResult& r) {
        for (Obj x : o.objects)
            for (Obj y : o.objects) {
                Mor lx = d.lam(e, x), ly = d.lam(e, y);
                each_hom(m, x, y, o, r, [&](const Mor& f) {
                    Mor l = e.comp(G.mor(e, e.bang(f)), lx), rr = e.comp(ly, e.bang(G.mor(e, f)));
                    if (!m.equal(l, rr))
                        fail(r, m, {{"objects", objs({{"X", x}, {"Y", y}})}, {"morphisms", {{"f", m.to_json(f)}}}}, l,
                             rr);
                });
            }
    }));
    return rep;
}

NatTrans nat_der() {
    return {"der", [](const Env& e, Obj x) { return e.der(x); }};
}

NatTrans nat_dig() {
    return {"dig", [](const Env& e, Obj x) { return e.dig(x); }};
}

NatTrans nat_id() {
    return {"id", [](const Env& e, Obj x) { return e.id(e.bang(x)); }};
}

SuiteReport distlaw_report(const Env& e, const LawOptions& o, const CheckOptions& co) {
    SuiteReport rep = run_suite(e.model(), builtin_suite("distlaw"), co);
    auto add = [&](const SuiteReport& r) {
        for (auto d : r.diagrams) {
            d.name = r.suite + "." + d.name;
            rep.diagrams.push_back(std::move(d));
        }
    };
    DistLaw id = law_identity(), b = law_bang(), bb = law_bangbang();
    for (const DistLaw* d : {&id, &b, &bb}) {
        add(is_dist_law(e, *d, o));
        add(check_extension(e, *d, o));
    }
    add(is_comonad_dist_law(e, colaw_S(), o));
    struct Arrow {
        NatTrans a;
        const DistLaw* f;
        const DistLaw* g;
    };
    for (const auto& [a, f, g] : {Arrow{nat_der(), &b, &id}, Arrow{nat_dig(), &b, &bb}, Arrow{nat_id(), &b, &b}}) {
        rep.diagrams.push_back(is_dlaw_morphism(e, a, *f, *g, o));
        CheckResult r;
        extend_nat(e, a, *f, *g, o, &r);
        rep.diagrams.push_back(std::move(r));
    }
    rep.suite = "distlaw";
    return rep;
}

}  // namespace llk
