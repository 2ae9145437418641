#include "llk/env.hpp"

namespace llk {

void Env::expect(Obj have, Obj want, const char* what) {
    if (have != want) throw TypeError(std::string(what) + ": expected " + obj_str(want) + ", got " + obj_str(have));
}

Mor Env::var(const std::string& name, Obj dom, Obj cod) const {
    auto t = std::make_shared<TrackMor>();
    t->dom = dom;
    t->cod = cod;
    t->vars[name] = {1, true};
    return t;
}

Mor Env::maybe_mutate(const char* op, Mor r) const {
    if (!tracking_ && mutated.count(op)) return m_.mutate(r);
    return r;
}

template <class F>
Mor Env::prim(const char* op, std::initializer_list<const Mor*> args, Obj dom, Obj cod, F&& compute) const {
    if (tracking_) {
        auto t = std::make_shared<TrackMor>();
        t->dom = dom;
        t->cod = cod;
        int i = 0;
        for (const Mor* a : args) {
            auto* ta = dynamic_cast<const TrackMor*>(a->get());
            bool lin = m_.linear(op, i++);
            if (!ta) continue;
            for (const auto& [v, cl] : ta->vars) {
                auto& slot = t->vars.try_emplace(v, std::pair<int, bool>{0, true}).first->second;
                slot.first += cl.first;
                slot.second = slot.second && cl.second && lin;
            }
        }
        return t;
    }
    Mor r = compute();
    if (r->dom != dom || r->cod != cod)
        throw std::logic_error(std::string(op) + " produced " + obj_str(r->dom) + " -> " + obj_str(r->cod) +
                               ", expected " + obj_str(dom) + " -> " + obj_str(cod));
    return maybe_mutate(op, std::move(r));
}

Mor Env::id(Obj a) const { return prim("id", {}, a, a, [&] { return m_.id(a); }); }

Mor Env::comp(const Mor& g, const Mor& f) const {
    expect(f->cod, g->dom, "composition");
    return prim("comp", {&g, &f}, f->dom, g->cod, [&] { return m_.comp(g, f); });
}

Mor Env::comp(std::initializer_list<Mor> fs) const {
    auto it = fs.end();
    Mor r = *--it;
    while (it != fs.begin()) r = comp(*--it, r);
    return r;
}

Mor Env::tensor(const Mor& f, const Mor& g) const {
    return prim("tensor", {&f, &g}, tensor(f->dom, g->dom), tensor(f->cod, g->cod), [&] { return m_.tensor(f, g); });
}

Mor Env::pair(const Mor& f, const Mor& g) const {
    expect(g->dom, f->dom, "pairing");
    return prim("pair", {&f, &g}, f->dom, with(f->cod, g->cod), [&] { return m_.pair(f, g); });
}

Mor Env::pr0(Obj a, Obj b) const { return prim("pr0", {}, with(a, b), a, [&] { return m_.pr0(a, b); }); }
Mor Env::pr1(Obj a, Obj b) const { return prim("pr1", {}, with(a, b), b, [&] { return m_.pr1(a, b); }); }
Mor Env::term(Obj a) const { return prim("term", {}, a, top(), [&] { return m_.term(a); }); }

Mor Env::alpha(Obj a, Obj b, Obj c) const {
    return prim("alpha", {}, tensor(tensor(a, b), c), tensor(a, tensor(b, c)), [&] { return m_.alpha(a, b, c); });
}
Mor Env::alpha_inv(Obj a, Obj b, Obj c) const {
    return prim("alpha-inv", {}, tensor(a, tensor(b, c)), tensor(tensor(a, b), c),
                [&] { return m_.alpha_inv(a, b, c); });
}
Mor Env::lambda(Obj a) const { return prim("lambda", {}, tensor(one(), a), a, [&] { return m_.lambda(a); }); }
Mor Env::lambda_inv(Obj a) const {
    return prim("lambda-inv", {}, a, tensor(one(), a), [&] { return m_.lambda_inv(a); });
}
Mor Env::rho(Obj a) const { return prim("rho", {}, tensor(a, one()), a, [&] { return m_.rho(a); }); }
Mor Env::rho_inv(Obj a) const { return prim("rho-inv", {}, a, tensor(a, one()), [&] { return m_.rho_inv(a); }); }
Mor Env::gamma(Obj a, Obj b) const {
    return prim("gamma", {}, tensor(a, b), tensor(b, a), [&] { return m_.gamma(a, b); });
}
Mor Env::ev(Obj a, Obj b) const { return prim("ev", {}, tensor(lolli(a, b), a), b, [&] { return m_.ev(a, b); }); }

Mor Env::cur(const Mor& f) const {
    Obj d = f->dom;
    if (!d->a || !d->b || tensor(d->a, d->b) != d) throw TypeError("cur: domain " + obj_str(d) + " is not a tensor");
    Obj c = d->a, a = d->b, b = f->cod;
    return prim("cur", {&f}, c, lolli(a, b), [&] { return m_.cur(f, c, a, b); });
}

Mor Env::bang(const Mor& f) const {
    return prim("bang", {&f}, bang(f->dom), bang(f->cod), [&] { return m_.bang(f); });
}
Mor Env::der(Obj a) const { return prim("der", {}, bang(a), a, [&] { return m_.der(a); }); }
Mor Env::dig(Obj a) const { return prim("dig", {}, bang(a), bang(bang(a)), [&] { return m_.dig(a); }); }
Mor Env::m0() const { return prim("m0", {}, one(), bang(top()), [&] { return m_.m0(); }); }
Mor Env::m0_inv() const { return prim("m0-inv", {}, bang(top()), one(), [&] { return m_.m0_inv(); }); }
Mor Env::m2(Obj a, Obj b) const {
    return prim("m2", {}, tensor(bang(a), bang(b)), bang(with(a, b)), [&] { return m_.m2(a, b); });
}
Mor Env::m2_inv(Obj a, Obj b) const {
    return prim("m2-inv", {}, bang(with(a, b)), tensor(bang(a), bang(b)), [&] { return m_.m2_inv(a, b); });
}
Mor Env::coder(Obj a) const { return prim("coder", {}, a, bang(a), [&] { return m_.coder(a); }); }
Mor Env::coweak(Obj a) const { return prim("coweak", {}, one(), bang(a), [&] { return m_.coweak(a); }); }
Mor Env::cocontr(Obj a) const {
    return prim("cocontr", {}, tensor(bang(a), bang(a)), bang(a), [&] { return m_.cocontr(a); });
}
Mor Env::zero(Obj a, Obj b) const { return prim("zero", {}, a, b, [&] { return m_.zero(a, b); }); }
Mor Env::sum(const Mor& f, const Mor& g) const {
    expect(g->dom, f->dom, "sum");
    expect(g->cod, f->cod, "sum");
    return prim("sum", {&f, &g}, f->dom, f->cod, [&] { return m_.sum(f, g); });
}
Mor Env::kappa(const Mor& f) const {
    return prim("kappa", {&f}, f->dom, f->cod, [&] { return m_.kappa(f); });
}

Mor Env::with_map(const Mor& f, const Mor& g) const {
    return pair(comp(f, pr0(f->dom, g->dom)), comp(g, pr1(f->dom, g->dom)));
}
Mor Env::delta(Obj a) const { return pair(id(a), id(a)); }
Mor Env::with_alpha(Obj a, Obj b, Obj c) const {
    Obj ab = with(a, b);
    return pair(comp(pr0(a, b), pr0(ab, c)), pair(comp(pr1(a, b), pr0(ab, c)), pr1(ab, c)));
}
Mor Env::with_gamma(Obj a, Obj b) const { return pair(pr1(a, b), pr0(a, b)); }
Mor Env::weak(Obj a) const { return comp(m0_inv(), bang(term(a))); }
Mor Env::contr(Obj a) const { return comp(m2_inv(a, a), bang(delta(a))); }
Mor Env::promote(const Mor& f) const {
    Obj a = f->dom->a;
    if (f->dom->kind != OK::Bang || bang(a) != f->dom) throw TypeError("promotion needs a map out of !A");
    return comp(bang(f), dig(a));
}
Mor Env::dbar(Obj a) const {
    return maybe_mutate("dbar", comp(cocontr(a), tensor(id(bang(a)), coder(a))));
}

Mor Env::Smap(const Mor& f) const {
    if (tracking_) return prim("S", {&f}, S(f->dom), S(f->cod), [] { return Mor(); });
    return with_map(f, f);
}
Mor Env::pi0(Obj a) const { return pr0(a, a); }
Mor Env::pi1(Obj a) const { return pr1(a, a); }
Mor Env::sigma(Obj a) const { return sum(pi0(a), pi1(a)); }
Mor Env::iota0(Obj a) const { return pair(id(a), zero(a, a)); }
Mor Env::iota1(Obj a) const { return pair(zero(a, a), id(a)); }
Mor Env::swap(Obj a) const { return pair(pi1(a), pi0(a)); }
Mor Env::flip(Obj a) const { return pair(Smap(pi0(a)), Smap(pi1(a))); }
Mor Env::psi(Obj a, Obj b) const { return pair(with_map(pi0(a), pi0(b)), with_map(pi1(a), pi1(b))); }
Mor Env::theta(Obj a) const {
    Obj sa = S(a);
    Mor r = pair(comp(pi0(a), pi0(sa)), sum(comp(pi0(a), pi1(sa)), comp(pi1(a), pi0(sa))));
    return maybe_mutate("theta", r);
}
Mor Env::phi0(Obj a, Obj b) const { return pair(tensor(pi0(a), id(b)), tensor(pi1(a), id(b))); }
Mor Env::phi1(Obj a, Obj b) const { return pair(tensor(id(a), pi0(b)), tensor(id(a), pi1(b))); }
Mor Env::L(Obj a, Obj b) const {
    return comp({theta(tensor(a, b)), Smap(phi0(a, b)), phi1(S(a), b)});
}
Mor Env::L_alt(Obj a, Obj b) const {
    return comp({theta(tensor(a, b)), Smap(phi1(a, b)), phi0(a, S(b))});
}
Mor Env::derive(Obj a) const {
    // "derive-nofilter" lets every element of a bag through, not just singletons
    Mor d = !tracking_ && mutated.count("derive-nofilter") ? m_.support(a) : der(a);
    return comp({dbar(a), tensor(id(bang(a)), d), m2_inv(a, a)});
}
Mor Env::dcoh(Obj a) const { return maybe_mutate("dcoh", pair(bang(pi0(a)), derive(a))); }

}  // namespace llk
