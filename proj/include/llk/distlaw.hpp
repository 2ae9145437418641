#pragma once

#include <functional>
#include <optional>

#include "llk/diagram.hpp"
#include "llk/env.hpp"

namespace llk {

// An endofunctor on the base model, given on objects and morphisms.
struct Functor {
    std::string name;
    std::function<Obj(const Env&, Obj)> obj;
    std::function<Mor(const Env&, const Mor&)> mor;
};

// A distributive law of F over the monad (S, ι0, θ) on both sides:
// Λ_X : F S X → S F X.
struct DistLaw {
    std::string name;
    Functor F;
    std::function<Mor(const Env&, Obj)> lam;
};

DistLaw law_identity();  // F = Id, Λ = id
DistLaw law_bang();      // F = !, Λ = ∂
DistLaw law_bangbang();  // F = !!, Λ = ∂_{!X} ∘ !∂_X

struct LawOptions {
    std::vector<Obj> objects;  // base objects X, Y
    uint64_t seed = 1;
    double exhaustive_limit = 4096;
    int samples = 64;
};

// Lift-Unit, Lift-Sum and naturality of Λ.
SuiteReport is_dist_law(const Env& e, const DistLaw& d, const LawOptions& o);

// The Kleisli functor of a law: F̂ f = Λ_Y ∘ F f for f : X → SY.
struct ExtendedFunctor {
    std::string name;
    std::function<Obj(Obj)> obj;
    std::function<Mor(const Mor&)> mor;
};
ExtendedFunctor extend_functor(const Env& e, const DistLaw& d);
// Λ_X = F̂(id_{SX}) and F f = π0 ∘ F̂(ι0 ∘ f).
DistLaw law_from_extension(const Env& e, const ExtendedFunctor& fh);

// Round trips of the bijection, and F̂ as a functor that agrees with F on
// embedded base morphisms.
SuiteReport check_extension(const Env& e, const DistLaw& d, const LawOptions& o);

struct NatTrans {
    std::string name;
    std::function<Mor(const Env&, Obj)> at;  // α_X : F X → G X
};

// The square S α ∘ Λ^F = Λ^G ∘ α_S at every object.
CheckResult is_dlaw_morphism(const Env& e, const NatTrans& a, const DistLaw& f, const DistLaw& g,
                             const LawOptions& o);
// κ(α) natural in the Kleisli category: Ĝ h ∘ κ(α_X) = κ(α_Y) ∘ F̂ h for h : X ⇝ Y.
// X ranges over the objects and every SY, and h = id_{SY} is always tried.
// Returns the extended family when it is natural.
std::optional<NatTrans> extend_nat(const Env& e, const NatTrans& a, const DistLaw& f, const DistLaw& g,
                                   const LawOptions& o, CheckResult* report = nullptr);

// The dual notion for the comonad (!, der, dig) over a functor G:
// Λ_X : !G X → G !X with G der ∘ Λ = der_G and G dig ∘ Λ = Λ_! ∘ !Λ ∘ dig_G.
struct CoLaw {
    std::string name;
    Functor G;
    std::function<Mor(const Env&, Obj)> lam;
};
CoLaw colaw_S();  // G = S, Λ = ∂
SuiteReport is_comonad_dist_law(const Env& e, const CoLaw& d, const LawOptions& o);

// der : ! ⇒ Id, dig : ! ⇒ !!, id : ! ⇒ !.
NatTrans nat_der();
NatTrans nat_dig();
NatTrans nat_id();

// Everything above for the laws of Id, ! and !!, plus the built-in distlaw
// diagrams, as one report named "distlaw".
SuiteReport distlaw_report(const Env& e, const LawOptions& o, const CheckOptions& co);

}  // namespace llk
