#pragma once

#include "llk/env.hpp"

namespace llk {

// A Kleisli morphism A ⇝ B wraps a base morphism (!A → B, or A → SB).
struct KMor : MorBase {
    Mor inner;
};

// Shared plumbing: hom-sets, equality and mutation are the base model's.
class KleisliBase : public Model {
public:
    explicit KleisliBase(const Env& base) : be_(base), bm_(base.model()) {}

    bool relational() const override { return bm_.relational(); }
    bool full_powerset() const override { return bm_.full_powerset(); }
    std::vector<Obj> objects() const override { return bm_.objects(); }
    const Model* base() const override { return &bm_; }
    const Env& base_env() const { return be_; }

    std::optional<double> hom_count(Obj a, Obj b) const override { return bm_.hom_count(lift_dom(a), lift_cod(b)); }
    std::vector<Mor> homs(Obj a, Obj b) const override;
    Mor random_hom(Obj a, Obj b, std::mt19937_64& rng) const override;
    std::vector<Mor> atoms(Obj a, Obj b) const override;
    bool equal(const Mor& f, const Mor& g) const override { return bm_.equal(in(f), in(g)); }
    nlohmann::json to_json(const Mor& f) const override { return bm_.to_json(in(f)); }
    Mor mutate(const Mor& f) const override { return wrap(f->dom, f->cod, bm_.mutate(in(f))); }
    std::vector<std::pair<std::string, std::string>> pairs(const Mor& f) const override { return bm_.pairs(in(f)); }

    static const Mor& in(const Mor& f);
    static Mor wrap(Obj a, Obj b, Mor inner);

protected:
    virtual Obj lift_dom(Obj a) const = 0;
    virtual Obj lift_cod(Obj b) const = 0;

    const Env& be_;
    const Model& bm_;
};

// The Kleisli category of !: hom(A, B) = C(!A, B), a cartesian closed category
// with product &, terminal ⊤ and A ⇒ B = !A ⊸ B.
class KleisliBang : public KleisliBase {
public:
    using KleisliBase::KleisliBase;

    std::string name() const override { return "kl!(" + bm_.name() + ")"; }
    bool linear(const std::string& op, int arg) const override;

    Obj one() const override { return bm_.top(); }
    Obj top() const override { return bm_.top(); }
    Obj tensor(Obj a, Obj b) const override { return bm_.with(a, b); }
    Obj with(Obj a, Obj b) const override { return bm_.with(a, b); }
    Obj lolli(Obj a, Obj b) const override { return bm_.lolli(bm_.bang(a), b); }

    Mor id(Obj a) const override;
    Mor comp(const Mor& g, const Mor& f) const override;
    Mor tensor(const Mor& f, const Mor& g) const override;
    Mor pair(const Mor& f, const Mor& g) const override;
    Mor pr0(Obj a, Obj b) const override;
    Mor pr1(Obj a, Obj b) const override;
    Mor term(Obj a) const override;
    Mor alpha(Obj a, Obj b, Obj c) const override;
    Mor alpha_inv(Obj a, Obj b, Obj c) const override;
    Mor lambda(Obj a) const override;
    Mor lambda_inv(Obj a) const override;
    Mor rho(Obj a) const override;
    Mor rho_inv(Obj a) const override;
    Mor gamma(Obj a, Obj b) const override;
    Mor ev(Obj a, Obj b) const override;
    Mor cur(const Mor& f, Obj c, Obj a, Obj b) const override;
    Mor kappa(const Mor& f) const override;

protected:
    Obj lift_dom(Obj a) const override { return bm_.bang(a); }
    Obj lift_cod(Obj b) const override { return b; }

private:
    Mor lift(const Mor& f) const;  // κ(f) = f ∘ der
};

// The Kleisli category of the monad (S, ι0, θ): hom(A, B) = C(A, SB), with the
// tensor transported along L.
class KleisliS : public KleisliBase {
public:
    using KleisliBase::KleisliBase;

    std::string name() const override { return "klS(" + bm_.name() + ")"; }
    bool linear(const std::string&, int) const override { return true; }

    Obj one() const override { return bm_.one(); }
    Obj tensor(Obj a, Obj b) const override { return bm_.tensor(a, b); }

    Mor id(Obj a) const override;
    Mor comp(const Mor& g, const Mor& f) const override;
    Mor tensor(const Mor& f, const Mor& g) const override;
    Mor alpha(Obj a, Obj b, Obj c) const override;
    Mor alpha_inv(Obj a, Obj b, Obj c) const override;
    Mor lambda(Obj a) const override;
    Mor lambda_inv(Obj a) const override;
    Mor rho(Obj a) const override;
    Mor rho_inv(Obj a) const override;
    Mor gamma(Obj a, Obj b) const override;
    Mor kappa(const Mor& f) const override;

protected:
    Obj lift_dom(Obj a) const override { return a; }
    Obj lift_cod(Obj b) const override { return be_.S(b); }
};

}  // namespace llk
