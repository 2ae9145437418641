#pragma once

#include <set>
#include <string>

#include "llk/model.hpp"

namespace llk {

// Typed access to a model's structure plus everything derived from it.
// Derived maps are built only from Env calls, so a mutated primitive (or a
// mutated derived map) propagates to everything built on top of it.
class Env {
public:
    explicit Env(const Model& m, bool tracking = false) : m_(m), tracking_(tracking) {}

    const Model& model() const { return m_; }
    bool tracking() const { return tracking_; }
    // Op names whose results get one pair removed: dig, m2, dbar, theta, dcoh;
    // "derive-nofilter" swaps der for the support relation inside derive.
    std::set<std::string> mutated;

    Obj one() const { return m_.one(); }
    Obj top() const { return m_.top(); }
    Obj tensor(Obj a, Obj b) const { return m_.tensor(a, b); }
    Obj with(Obj a, Obj b) const { return m_.with(a, b); }
    Obj lolli(Obj a, Obj b) const { return m_.lolli(a, b); }
    Obj bang(Obj a) const { return m_.bang(a); }
    Obj S(Obj a) const { return m_.with(a, a); }

    Mor var(const std::string& name, Obj dom, Obj cod) const;  // tracking mode only

    Mor id(Obj a) const;
    Mor comp(const Mor& g, const Mor& f) const;
    Mor comp(std::initializer_list<Mor> fs) const;  // leftmost applied last
    Mor tensor(const Mor& f, const Mor& g) const;
    Mor pair(const Mor& f, const Mor& g) const;
    Mor pr0(Obj a, Obj b) const;
    Mor pr1(Obj a, Obj b) const;
    Mor term(Obj a) const;
    Mor alpha(Obj a, Obj b, Obj c) const;
    Mor alpha_inv(Obj a, Obj b, Obj c) const;
    Mor lambda(Obj a) const;
    Mor lambda_inv(Obj a) const;
    Mor rho(Obj a) const;
    Mor rho_inv(Obj a) const;
    Mor gamma(Obj a, Obj b) const;
    Mor ev(Obj a, Obj b) const;
    Mor cur(const Mor& f) const;
    Mor bang(const Mor& f) const;
    Mor der(Obj a) const;
    Mor dig(Obj a) const;
    Mor m0() const;
    Mor m0_inv() const;
    Mor m2(Obj a, Obj b) const;
    Mor m2_inv(Obj a, Obj b) const;
    Mor coder(Obj a) const;
    Mor coweak(Obj a) const;
    Mor cocontr(Obj a) const;
    Mor zero(Obj a, Obj b) const;
    Mor sum(const Mor& f, const Mor& g) const;
    Mor kappa(const Mor& f) const;

    // cartesian and exponential
    Mor with_map(const Mor& f, const Mor& g) const;
    Mor delta(Obj a) const;
    Mor with_alpha(Obj a, Obj b, Obj c) const;  // (A & B) & C → A & (B & C)
    Mor with_gamma(Obj a, Obj b) const;
    Mor weak(Obj a) const;
    Mor contr(Obj a) const;
    Mor promote(const Mor& f) const;  // f^! = !f ∘ dig
    Mor dbar(Obj a) const;            // cocontr ∘ (id ⊗ coder)

    // the S& summability structure and its monad
    Mor Smap(const Mor& f) const;
    Mor pi0(Obj a) const;
    Mor pi1(Obj a) const;
    Mor sigma(Obj a) const;
    Mor iota0(Obj a) const;
    Mor iota1(Obj a) const;
    Mor swap(Obj a) const;
    Mor flip(Obj a) const;         // ⟨Sπ0, Sπ1⟩ : SSA → SSA
    Mor psi(Obj a, Obj b) const;   // SA & SB → S(A & B)
    Mor theta(Obj a) const;
    Mor phi0(Obj a, Obj b) const;  // SA ⊗ B → S(A ⊗ B)
    Mor phi1(Obj a, Obj b) const;  // A ⊗ SB → S(A ⊗ B)
    Mor L(Obj a, Obj b) const;     // θ ∘ Sφ0 ∘ φ1
    Mor L_alt(Obj a, Obj b) const; // θ ∘ Sφ1 ∘ φ0
    Mor derive(Obj a) const;       // ∂̄ ∘ (id ⊗ der) ∘ m2⁻¹
    Mor dcoh(Obj a) const;         // ⟨!π0, derive⟩

private:
    template <class F>
    Mor prim(const char* op, std::initializer_list<const Mor*> args, Obj dom, Obj cod, F&& compute) const;
    Mor maybe_mutate(const char* op, Mor r) const;
    static void expect(Obj have, Obj want, const char* what);

    const Model& m_;
    bool tracking_;
};

}  // namespace llk
