#include "llk/finset.hpp"

#include <cmath>

#include "llk/proof.hpp"

namespace llk {

namespace {

const FinFun& tab(const Mor& m) {
    auto* f = dynamic_cast<const FinFun*>(m.get());
    if (!f) throw TypeError("finset: foreign morphism");
    return *f;
}

int ipow(int b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > (1 << 24)) throw ResourceLimit("finset: exponential object too large");
    }
    return static_cast<int>(r);
}

}  // namespace

int FinSet::size(Obj o) {
    switch (o->kind) {
        case OK::Base: return o->n;
        case OK::Top: case OK::One: return 1;
        case OK::With: case OK::Tensor: return size(o->a) * size(o->b);
        case OK::Lolli: return ipow(size(o->b), size(o->a));
        case OK::Bang: return size(o->a);
    }
    return 0;
}

Mor FinSet::fun(Obj dom, Obj cod, std::vector<int> t) {
    auto f = std::make_shared<FinFun>();
    f->dom = dom;
    f->cod = cod;
    f->t = std::move(t);
    return f;
}

std::vector<Obj> FinSet::objects() const {
    std::vector<Obj> r;
    for (int n = 0; n <= max_; ++n) r.push_back(obj_base(n));
    return r;
}

Obj FinSet::one() const { return obj_make(OK::Top); }
Obj FinSet::top() const { return obj_make(OK::Top); }
Obj FinSet::with(Obj a, Obj b) const { return obj_make(OK::With, a, b); }
Obj FinSet::lolli(Obj a, Obj b) const { return obj_make(OK::Lolli, a, b); }

std::optional<double> FinSet::hom_count(Obj a, Obj b) const {
    double c = std::pow(static_cast<double>(size(b)), size(a));
    if (c > budget_) return std::nullopt;
    return c;
}

std::vector<Mor> FinSet::homs(Obj a, Obj b) const {
    auto c = hom_count(a, b);
    if (!c) throw ResourceLimit("finset: hom-set " + obj_str(a) + " -> " + obj_str(b) + " over budget");
    int n = size(a), m = size(b);
    std::vector<Mor> out;
    if (m == 0 && n > 0) return out;
    std::vector<int> t(n, 0);
    for (;;) {
        out.push_back(fun(a, b, t));
        int i = 0;
        while (i < n && ++t[i] == m) t[i++] = 0;
        if (i == n) break;
    }
    return out;
}

Mor FinSet::random_hom(Obj a, Obj b, std::mt19937_64& rng) const {
    int n = size(a), m = size(b);
    if (m == 0 && n > 0) throw std::logic_error("finset: empty hom-set");
    std::vector<int> t(n);
    for (auto& x : t) x = static_cast<int>(rng() % m);
    return fun(a, b, t);
}

bool FinSet::equal(const Mor& f, const Mor& g) const { return tab(f).t == tab(g).t; }

nlohmann::json FinSet::to_json(const Mor& f) const { return tab(f).t; }

Mor FinSet::id(Obj a) const {
    std::vector<int> t(size(a));
    for (int i = 0; i < static_cast<int>(t.size()); ++i) t[i] = i;
    return fun(a, a, t);
}

Mor FinSet::comp(const Mor& g, const Mor& f) const {
    const auto &G = tab(g).t, &Fv = tab(f).t;
    std::vector<int> t(Fv.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = G[Fv[i]];
    return fun(f->dom, g->cod, t);
}

// pairs are encoded i*|B| + j
Mor FinSet::tensor(const Mor& f, const Mor& g) const {
    int na = size(f->dom), nb = size(g->dom), mb = size(g->cod);
    std::vector<int> t(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) t[i * nb + j] = tab(f).t[i] * mb + tab(g).t[j];
    return fun(with(f->dom, g->dom), with(f->cod, g->cod), t);
}

Mor FinSet::pair(const Mor& f, const Mor& g) const {
    int n = size(f->dom), mb = size(g->cod);
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = tab(f).t[i] * mb + tab(g).t[i];
    return fun(f->dom, with(f->cod, g->cod), t);
}

Mor FinSet::pr0(Obj a, Obj b) const {
    int na = size(a), nb = size(b);
    std::vector<int> t(na * nb);
    for (int i = 0; i < na * nb; ++i) t[i] = i / nb;
    return fun(with(a, b), a, t);
}

Mor FinSet::pr1(Obj a, Obj b) const {
    int na = size(a), nb = size(b);
    std::vector<int> t(na * nb);
    for (int i = 0; i < na * nb; ++i) t[i] = i % nb;
    return fun(with(a, b), b, t);
}

Mor FinSet::term(Obj a) const { return fun(a, top(), std::vector<int>(size(a), 0)); }

Mor FinSet::alpha(Obj a, Obj b, Obj c) const {
    int na = size(a), nb = size(b), nc = size(c);
    std::vector<int> t(na * nb * nc);
    for (int i = 0; i < na * nb * nc; ++i) t[i] = i;  // (i*nb+j)*nc+k = i*(nb*nc)+(j*nc+k)
    return fun(with(with(a, b), c), with(a, with(b, c)), t);
}

Mor FinSet::alpha_inv(Obj a, Obj b, Obj c) const {
    Mor f = alpha(a, b, c);
    return fun(f->cod, f->dom, tab(f).t);
}

Mor FinSet::lambda(Obj a) const { return fun(with(one(), a), a, tab(id(a)).t); }
Mor FinSet::lambda_inv(Obj a) const { return fun(a, with(one(), a), tab(id(a)).t); }
Mor FinSet::rho(Obj a) const { return fun(with(a, one()), a, tab(id(a)).t); }
Mor FinSet::rho_inv(Obj a) const { return fun(a, with(a, one()), tab(id(a)).t); }

Mor FinSet::gamma(Obj a, Obj b) const {
    int na = size(a), nb = size(b);
    std::vector<int> t(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) t[i * nb + j] = j * na + i;
    return fun(with(a, b), with(b, a), t);
}

// a function h : A → B is the base-|B| number Σ h(x)·|B|^x
Mor FinSet::ev(Obj a, Obj b) const {
    int na = size(a), nb = size(b), nh = size(lolli(a, b));
    std::vector<int> t(nh * na);
    for (int h = 0; h < nh; ++h) {
        int rest = h;
        for (int x = 0; x < na; ++x) {
            t[h * na + x] = rest % nb;
            rest /= nb;
        }
    }
    return fun(with(lolli(a, b), a), b, t);
}

Mor FinSet::cur(const Mor& f, Obj c, Obj a, Obj b) const {
    int nc = size(c), na = size(a), nb = size(b);
    std::vector<int> t(nc);
    for (int z = 0; z < nc; ++z) {
        int h = 0, p = 1;
        for (int x = 0; x < na; ++x) {
            h += tab(f).t[z * na + x] * p;
            p *= nb;
        }
        t[z] = h;
    }
    return fun(c, lolli(a, b), t);
}

}  // namespace llk
