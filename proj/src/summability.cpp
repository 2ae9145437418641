#include "llk/summability.hpp"

#include <cmath>
#include <map>

namespace llk {

namespace {

const PartialFun& tab(const Mor& m) {
    auto* f = dynamic_cast<const PartialFun*>(m.get());
    if (!f) throw TypeError("pfn: foreign morphism");
    return *f;
}

}  // namespace

// ---- the toy category

int PartialFns::size(Obj o) {
    switch (o->kind) {
        case OK::Base: return o->n;
        case OK::With: return size(o->a) + size(o->b);
        default: throw TypeError("pfn: no object " + obj_str(o));
    }
}

Mor PartialFns::fun(Obj dom, Obj cod, std::vector<int> t) {
    auto f = std::make_shared<PartialFun>();
    f->dom = dom;
    f->cod = cod;
    f->t = std::move(t);
    return f;
}

std::vector<Obj> PartialFns::objects() const {
    std::vector<Obj> r;
    for (int n = 0; n <= max_; ++n) r.push_back(obj_base(n));
    return r;
}

Obj PartialFns::with(Obj a, Obj b) const { return obj_make(OK::With, a, b); }

std::optional<double> PartialFns::hom_count(Obj a, Obj b) const {
    return std::pow(static_cast<double>(size(b) + 1), size(a));
}

std::vector<Mor> PartialFns::homs(Obj a, Obj b) const {
    int n = size(a), m = size(b);
    std::vector<Mor> out;
    std::vector<int> t(n, -1);
    for (;;) {
        out.push_back(fun(a, b, t));
        int i = 0;
        while (i < n && ++t[i] == m) t[i++] = -1;
        if (i == n) break;
    }
    return out;
}

Mor PartialFns::random_hom(Obj a, Obj b, std::mt19937_64& rng) const {
    int m = size(b);
    std::vector<int> t(size(a));
    for (auto& x : t) x = static_cast<int>(rng() % (m + 1)) - 1;
    return fun(a, b, t);
}

bool PartialFns::equal(const Mor& f, const Mor& g) const { return tab(f).t == tab(g).t; }
nlohmann::json PartialFns::to_json(const Mor& f) const { return tab(f).t; }

Mor PartialFns::id(Obj a) const {
    std::vector<int> t(size(a));
    for (size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
    return fun(a, a, t);
}

Mor PartialFns::comp(const Mor& g, const Mor& f) const {
    if (f->cod != g->dom) throw TypeError("pfn: composition " + obj_str(f->cod) + " vs " + obj_str(g->dom));
    const auto &G = tab(g).t, &Fv = tab(f).t;
    std::vector<int> t(Fv.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = Fv[i] < 0 ? -1 : G[Fv[i]];
    return fun(f->dom, g->cod, t);
}

Mor PartialFns::zero(Obj a, Obj b) const { return fun(a, b, std::vector<int>(size(a), -1)); }

// ---- witnesses

std::optional<Witness> witness_and_sum(const PreSummability& ps, const Mor& f0, const Mor& f1) {
    const Model& m = *ps.model;
    if (f0->dom != f1->dom || f0->cod != f1->cod) throw TypeError("witness_and_sum: pair is not parallel");
    Obj x = f0->cod;
    auto fits = [&](const Mor& w) {
        return m.equal(ps.comp(ps.pi0(x), w), f0) && m.equal(ps.comp(ps.pi1(x), w), f1);
    };
    if (ps.candidate) {
        auto w = ps.candidate(f0, f1);
        if (!w || !fits(*w)) return std::nullopt;
        return Witness{*w, ps.comp(ps.sigma(x), *w)};
    }
    for (const Mor& w : m.homs(f0->dom, ps.S(x)))
        if (fits(w)) return Witness{w, ps.comp(ps.sigma(x), w)};
    return std::nullopt;
}

PreSummability build_swith(const Env& e) {
    PreSummability ps;
    ps.model = &e.model();
    ps.S = [&e](Obj x) { return e.S(x); };
    ps.Smap = [&e](const Mor& f) { return e.Smap(f); };
    ps.pi0 = [&e](Obj x) { return e.pi0(x); };
    ps.pi1 = [&e](Obj x) { return e.pi1(x); };
    ps.sigma = [&e](Obj x) { return e.sigma(x); };
    ps.zero = [&e](Obj a, Obj b) { return e.zero(a, b); };
    ps.comp = [&e](const Mor& g, const Mor& f) { return e.comp(g, f); };
    ps.candidate = [&e](const Mor& f0, const Mor& f1) -> std::optional<Mor> { return e.pair(f0, f1); };
    return ps;
}

PreSummability build_pfn(const PartialFns& m) {
    PreSummability ps;
    ps.model = &m;
    ps.S = [&m](Obj x) { return m.with(x, x); };
    ps.Smap = [&m](const Mor& f) {
        int n = PartialFns::size(f->dom), k = PartialFns::size(f->cod);
        const auto& t = tab(f).t;
        std::vector<int> s(2 * n);
        for (int i = 0; i < n; ++i) {
            s[i] = t[i] < 0 ? -1 : t[i];
            s[n + i] = t[i] < 0 ? -1 : k + t[i];
        }
        return PartialFns::fun(m.with(f->dom, f->dom), m.with(f->cod, f->cod), s);
    };
    auto proj = [&m](Obj x, int side) {
        int n = PartialFns::size(x);
        std::vector<int> t(2 * n, -1);
        for (int i = 0; i < n; ++i) t[side * n + i] = i;
        return PartialFns::fun(m.with(x, x), x, t);
    };
    ps.pi0 = [proj](Obj x) { return proj(x, 0); };
    ps.pi1 = [proj](Obj x) { return proj(x, 1); };
    ps.sigma = [&m](Obj x) {
        int n = PartialFns::size(x);
        std::vector<int> t(2 * n);
        for (int i = 0; i < 2 * n; ++i) t[i] = i % n;
        return PartialFns::fun(m.with(x, x), x, t);
    };
    ps.zero = [&m](Obj a, Obj b) { return m.zero(a, b); };
    ps.comp = [&m](const Mor& g, const Mor& f) { return m.comp(g, f); };
    ps.candidate = [&m](const Mor& f0, const Mor& f1) -> std::optional<Mor> {
        const auto &t0 = tab(f0).t, &t1 = tab(f1).t;
        int k = PartialFns::size(f0->cod);
        std::vector<int> t(t0.size(), -1);
        for (size_t i = 0; i < t.size(); ++i) {
            if (t0[i] >= 0 && t1[i] >= 0) return std::nullopt;
            t[i] = t0[i] >= 0 ? t0[i] : t1[i] >= 0 ? k + t1[i] : -1;
        }
        return PartialFns::fun(f0->dom, m.with(f0->cod, f0->cod), t);
    };
    return ps;
}

SMonadData monad_data(const PreSummability& ps, Obj x) {
    const Model& m = *ps.model;
    auto need = [&](const char* what, const Mor& f0, const Mor& f1) {
        auto w = witness_and_sum(ps, f0, f1);
        if (!w) throw std::runtime_error(std::string("monad_data: ") + what + " is not summable at " + obj_str(x));
        return *w;
    };
    Obj sx = ps.S(x);
    SMonadData d;
    d.iota0 = need("(id, 0)", m.id(x), ps.zero(x, x)).pairing;
    d.iota1 = need("(0, id)", ps.zero(x, x), m.id(x)).pairing;
    d.swap = need("(pi1, pi0)", ps.pi1(x), ps.pi0(x)).pairing;
    Mor p00 = ps.comp(ps.pi0(x), ps.pi0(sx)), p01 = ps.comp(ps.pi0(x), ps.pi1(sx)),
        p10 = ps.comp(ps.pi1(x), ps.pi0(sx));
    Mor inner = need("(pi0 pi1, pi1 pi0)", p01, p10).sum;
    d.theta = need("(pi0 pi0, pi0 pi1 + pi1 pi0)", p00, inner).pairing;
    return d;
}

// ---- the exhaustive suite

namespace {

struct Ctx {
    const PreSummability& ps;
    const Model& m;
    std::map<std::pair<Obj, Obj>, std::vector<Mor>> homs;

    const std::vector<Mor>& hom(Obj a, Obj b) {
        auto k = std::make_pair(a, b);
        auto it = homs.find(k);
        if (it == homs.end()) it = homs.emplace(k, m.homs(a, b)).first;
        return it->second;
    }
    std::optional<Witness> w(const Mor& f0, const Mor& f1) { return witness_and_sum(ps, f0, f1); }
};

void fail(CheckResult& r, nlohmann::json ce) {
    if (r.status == "fail") return;
    r.status = "fail";
    r.counterexample = std::move(ce);
}

nlohmann::json mors(const Model& m, std::initializer_list<std::pair<const char*, Mor>> fs) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, f] : fs) j[k] = m.to_json(f);
    return j;
}

}  // namespace

SuiteReport run_summability_suite(const PreSummability& ps, const std::vector<Obj>& objects) {
    const Model& m = *ps.model;
    Ctx c{ps, m, {}};
    SuiteReport rep;
    rep.suite = "summability";
    rep.model = m.name();
    auto result = [&](const char* name) {
        CheckResult r;
        r.name = name;
        r.status = "pass";
        r.method = "exhaustive";
        return r;
    };
    auto objs = [&](Obj a, Obj x) {
        nlohmann::json j;
        j["A"] = obj_str(a);
        j["X"] = obj_str(x);
        return j;
    };

    CheckResult zero = result("S-zero"), monic = result("joint-monic"), nat = result("naturality"),
                neutral = result("neutrality"), commut = result("commutativity"), wit = result("S-witness"),
                assoc = result("S-assoc");
    for (Obj a : objects)
        for (Obj x : objects) {
            if (zero.status == "pass") {
                ++zero.cases;
                if (!m.equal(ps.Smap(ps.zero(a, x)), ps.zero(ps.S(a), ps.S(x))))
                    fail(zero, {{"objects", objs(a, x)}});
            }
            for (const Mor& f : c.hom(a, x)) {
                ++nat.cases;
                for (auto [name, p] : {std::pair{"pi0", ps.pi0}, {"pi1", ps.pi1}, {"sigma", ps.sigma}})
                    if (!m.equal(ps.comp(p(x), ps.Smap(f)), ps.comp(f, p(a))))
                        fail(nat, {{"objects", objs(a, x)}, {"map", name}, {"morphisms", mors(m, {{"f", f}})}});
                ++neutral.cases;
                Mor z = ps.zero(a, x);
                auto l = c.w(f, z), r = c.w(z, f);
                if (!l || !r || !m.equal(l->sum, f) || !m.equal(r->sum, f))
                    fail(neutral, {{"objects", objs(a, x)}, {"morphisms", mors(m, {{"f", f}})}});
            }
            // joint monicity: the key map h ↦ (π0h, π1h) is injective
            std::map<std::pair<nlohmann::json, nlohmann::json>, Mor> seen;
            for (const Mor& h : c.hom(a, ps.S(x))) {
                ++monic.cases;
                auto key = std::make_pair(m.to_json(ps.comp(ps.pi0(x), h)), m.to_json(ps.comp(ps.pi1(x), h)));
                auto [it, fresh] = seen.emplace(key, h);
                if (!fresh) fail(monic, {{"objects", objs(a, x)}, {"morphisms", mors(m, {{"h1", it->second}, {"h2", h}})}});
            }
            const auto& H = c.hom(a, x);
            for (const Mor& f0 : H)
                for (const Mor& f1 : H) {
                    ++commut.cases;
                    auto w01 = c.w(f0, f1), w10 = c.w(f1, f0);
                    if (bool(w01) != bool(w10) || (w01 && !m.equal(w01->sum, w10->sum)))
                        fail(commut, {{"objects", objs(a, x)}, {"morphisms", mors(m, {{"f0", f0}, {"f1", f1}})}});
                    if (!w01) continue;
                    for (const Mor& f2 : H) {
                        auto outer = c.w(w01->sum, f2);
                        if (!outer) continue;
                        ++wit.cases;
                        auto w12 = c.w(f1, f2);
                        std::optional<Witness> other;
                        if (w12) other = c.w(f0, w12->sum);
                        if (!w12 || !other || !m.equal(other->sum, outer->sum))
                            fail(wit, {{"objects", objs(a, x)},
                                       {"morphisms", mors(m, {{"f0", f0}, {"f1", f1}, {"f2", f2}})}});
                    }
                }
            // S-assoc: summing pairings sums coordinatewise
            const auto& P = c.hom(a, ps.S(x));
            for (const Mor& u : P)
                for (const Mor& v : P) {
                    auto uv = c.w(u, v);
                    if (!uv) continue;
                    ++assoc.cases;
                    Mor u0 = ps.comp(ps.pi0(x), u), u1 = ps.comp(ps.pi1(x), u);
                    Mor v0 = ps.comp(ps.pi0(x), v), v1 = ps.comp(ps.pi1(x), v);
                    auto s0 = c.w(u0, v0), s1 = c.w(u1, v1);
                    std::optional<Witness> coord;
                    if (s0 && s1) coord = c.w(s0->sum, s1->sum);
                    if (!coord || !m.equal(coord->pairing, uv->sum))
                        fail(assoc, {{"objects", objs(a, x)}, {"morphisms", mors(m, {{"u", u}, {"v", v}})}});
                }
        }
    rep.diagrams = {zero, monic, nat, neutral, commut, wit, assoc};
    return rep;
}

}  // namespace llk
