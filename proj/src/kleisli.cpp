#include "llk/kleisli.hpp"

namespace llk {

const Mor& KleisliBase::in(const Mor& f) {
    auto* k = dynamic_cast<const KMor*>(f.get());
    if (!k) throw TypeError("kleisli: foreign morphism");
    return k->inner;
}

Mor KleisliBase::wrap(Obj a, Obj b, Mor inner) {
    auto k = std::make_shared<KMor>();
    k->dom = a;
    k->cod = b;
    k->inner = std::move(inner);
    return k;
}

std::vector<Mor> KleisliBase::homs(Obj a, Obj b) const {
    std::vector<Mor> out;
    for (auto& h : bm_.homs(lift_dom(a), lift_cod(b))) out.push_back(wrap(a, b, h));
    return out;
}

Mor KleisliBase::random_hom(Obj a, Obj b, std::mt19937_64& rng) const {
    return wrap(a, b, bm_.random_hom(lift_dom(a), lift_cod(b), rng));
}

std::vector<Mor> KleisliBase::atoms(Obj a, Obj b) const {
    std::vector<Mor> out;
    for (auto& h : bm_.atoms(lift_dom(a), lift_cod(b))) out.push_back(wrap(a, b, h));
    return out;
}

// ---- Kleisli of !

bool KleisliBang::linear(const std::string& op, int arg) const {
    if (op == "comp") return arg == 0;
    return op == "pair" || op == "cur" || op == "tensor" || op == "kappa";
}

Mor KleisliBang::lift(const Mor& f) const { return wrap(f->dom, f->cod, be_.comp(f, be_.der(f->dom))); }

Mor KleisliBang::id(Obj a) const { return wrap(a, a, be_.der(a)); }

Mor KleisliBang::comp(const Mor& g, const Mor& f) const {
    return wrap(f->dom, g->cod, be_.comp({in(g), be_.bang(in(f)), be_.dig(f->dom)}));
}

Mor KleisliBang::tensor(const Mor& f, const Mor& g) const {
    Obj a = f->dom, b = g->dom;
    Mor l = be_.comp(in(f), be_.bang(be_.pr0(a, b)));
    Mor r = be_.comp(in(g), be_.bang(be_.pr1(a, b)));
    return wrap(with(a, b), with(f->cod, g->cod), be_.pair(l, r));
}

Mor KleisliBang::pair(const Mor& f, const Mor& g) const {
    return wrap(f->dom, with(f->cod, g->cod), be_.pair(in(f), in(g)));
}

Mor KleisliBang::pr0(Obj a, Obj b) const { return lift(be_.pr0(a, b)); }
Mor KleisliBang::pr1(Obj a, Obj b) const { return lift(be_.pr1(a, b)); }
Mor KleisliBang::term(Obj a) const { return wrap(a, top(), be_.term(bm_.bang(a))); }

Mor KleisliBang::alpha(Obj a, Obj b, Obj c) const {
    Obj ab = with(a, b);
    Mor p = be_.pair(be_.comp(be_.pr0(a, b), be_.pr0(ab, c)),
                     be_.pair(be_.comp(be_.pr1(a, b), be_.pr0(ab, c)), be_.pr1(ab, c)));
    return lift(p);
}

Mor KleisliBang::alpha_inv(Obj a, Obj b, Obj c) const {
    Obj bc = with(b, c);
    Mor p = be_.pair(be_.pair(be_.pr0(a, bc), be_.comp(be_.pr0(b, c), be_.pr1(a, bc))),
                     be_.comp(be_.pr1(b, c), be_.pr1(a, bc)));
    return lift(p);
}

Mor KleisliBang::lambda(Obj a) const { return lift(be_.pr1(top(), a)); }
Mor KleisliBang::lambda_inv(Obj a) const { return lift(be_.pair(be_.term(a), be_.id(a))); }
Mor KleisliBang::rho(Obj a) const { return lift(be_.pr0(a, top())); }
Mor KleisliBang::rho_inv(Obj a) const { return lift(be_.pair(be_.id(a), be_.term(a))); }
Mor KleisliBang::gamma(Obj a, Obj b) const { return lift(be_.pair(be_.pr1(a, b), be_.pr0(a, b))); }

// !((!A ⊸ B) & A) → !(!A ⊸ B) ⊗ !A → (!A ⊸ B) ⊗ !A → B
Mor KleisliBang::ev(Obj a, Obj b) const {
    Obj h = lolli(a, b);
    Mor e = be_.comp({be_.ev(bm_.bang(a), b), be_.tensor(be_.der(h), be_.id(bm_.bang(a))), be_.m2_inv(h, a)});
    return wrap(with(h, a), b, e);
}

Mor KleisliBang::cur(const Mor& f, Obj c, Obj a, Obj b) const {
    return wrap(c, lolli(a, b), be_.cur(be_.comp(in(f), be_.m2(c, a))));
}

Mor KleisliBang::kappa(const Mor& f) const { return lift(f); }

// ---- Kleisli of S

Mor KleisliS::id(Obj a) const { return wrap(a, a, be_.iota0(a)); }

Mor KleisliS::comp(const Mor& g, const Mor& f) const {
    return wrap(f->dom, g->cod, be_.comp({be_.theta(g->cod), be_.Smap(in(g)), in(f)}));
}

Mor KleisliS::tensor(const Mor& f, const Mor& g) const {
    return wrap(tensor(f->dom, g->dom), tensor(f->cod, g->cod),
                be_.comp(be_.L(f->cod, g->cod), be_.tensor(in(f), in(g))));
}

Mor KleisliS::kappa(const Mor& f) const { return wrap(f->dom, f->cod, be_.comp(be_.iota0(f->cod), f)); }

Mor KleisliS::alpha(Obj a, Obj b, Obj c) const { return kappa(be_.alpha(a, b, c)); }
Mor KleisliS::alpha_inv(Obj a, Obj b, Obj c) const { return kappa(be_.alpha_inv(a, b, c)); }
Mor KleisliS::lambda(Obj a) const { return kappa(be_.lambda(a)); }
Mor KleisliS::lambda_inv(Obj a) const { return kappa(be_.lambda_inv(a)); }
Mor KleisliS::rho(Obj a) const { return kappa(be_.rho(a)); }
Mor KleisliS::rho_inv(Obj a) const { return kappa(be_.rho_inv(a)); }
Mor KleisliS::gamma(Obj a, Obj b) const { return kappa(be_.gamma(a, b)); }

}  // namespace llk
